// placeholder — benchmarks are wired once all layers exist
#include <benchmark/benchmark.h>
BENCHMARK_MAIN();
