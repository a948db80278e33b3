// placeholder — the dispatcher is implemented once the library layers exist
#include "cli.hpp"

#include <ostream>

namespace nelab::cli {
int run(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
  err << "not yet implemented\n";
  return 2;
}
}  // namespace nelab::cli
