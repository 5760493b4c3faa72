// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "partposet/kernels.hpp"
#include "partposet/poset.hpp"

using namespace partposet;
namespace k = partposet::kernels;

namespace {

std::vector<std::int64_t> instance(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::vector<std::int64_t> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % 1'000'000);
  std::sort(c.rbegin(), c.rend());
  return c;
}

template <bool Parallel>
void scan(benchmark::State& state) {
  const auto c = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? k::scan_partitions(c, k::ScanFilter::QOnly) : k::serial::scan_partitions(c, k::ScanFilter::QOnly);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void histogram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = Parallel ? k::rank_histogram(n, PosetKind::Q) : k::serial::rank_histogram(n, PosetKind::Q);
    benchmark::DoNotOptimize(h);
  }
}

template <bool Parallel>
void closure(benchmark::State& state) {
  const auto nodes = enumerate(static_cast<int>(state.range(0)), PosetKind::P);
  for (auto _ : state) {
    auto m = Parallel ? k::strict_order_closure(nodes) : k::serial::strict_order_closure(nodes);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void reduction(benchmark::State& state) {
  const auto nodes = enumerate(static_cast<int>(state.range(0)), PosetKind::P);
  const auto m = k::strict_order_closure(nodes);
  for (auto _ : state) {
    auto e = Parallel ? k::transitive_reduction(m) : k::serial::transitive_reduction(m);
    benchmark::DoNotOptimize(e);
  }
}

}  // namespace

BENCHMARK(scan<false>)->Name("scan/serial")->DenseRange(16, 22, 3);
BENCHMARK(scan<true>)->Name("scan/parallel")->DenseRange(16, 22, 3);
BENCHMARK(histogram<false>)->Name("histogram/serial")->DenseRange(16, 22, 3);
BENCHMARK(histogram<true>)->Name("histogram/parallel")->DenseRange(16, 22, 3);
BENCHMARK(closure<false>)->Name("closure/serial")->DenseRange(8, 12, 2);
BENCHMARK(closure<true>)->Name("closure/parallel")->DenseRange(8, 12, 2);
BENCHMARK(reduction<false>)->Name("reduction/serial")->DenseRange(8, 12, 2);
BENCHMARK(reduction<true>)->Name("reduction/parallel")->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
