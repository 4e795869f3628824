#include <benchmark/benchmark.h>

// The packaged benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
