// Small shared utilities: a lightweight expected-style result carrying an
// error message, used by every operation that can fail on user input.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace nelab {

template <typename T>
class Result {
 public:
  static Result ok(T value) {
    Result r;
    r.value_ = std::move(value);
    return r;
  }
  static Result fail(std::string message) {
    Result r;
    r.error_ = std::move(message);
    return r;
  }

  explicit operator bool() const { return value_.has_value(); }
  bool has_value() const { return value_.has_value(); }

  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  const T* operator->() const { return &value(); }

  const T& value() const& {
    if (!value_) throw std::logic_error("Result::value on error: " + error_);
    return *value_;
  }
  T& value() & {
    if (!value_) throw std::logic_error("Result::value on error: " + error_);
    return *value_;
  }
  T take() && {
    if (!value_) throw std::logic_error("Result::take on error: " + error_);
    return std::move(*value_);
  }

  const std::string& error() const { return error_; }

 private:
  Result() = default;
  std::optional<T> value_;
  std::string error_;
};

}  // namespace nelab
