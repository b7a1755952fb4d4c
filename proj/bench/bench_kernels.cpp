#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "golden/criteria.hpp"
#include "golden/kernels.hpp"

using namespace golden;

namespace {

NodeSequence random_nodes(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gap(0.5, 3.0), y(-10.0, 10.0);
  std::vector<Node> nodes;
  double x = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    nodes.push_back({x, y(rng)});
    x += gap(rng);
  }
  return NodeSequence(std::move(nodes), 0.5);
}

std::vector<double> grid_over(const PiecewiseFunction& f, std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = f.lower() + (f.upper() - f.lower()) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return xs;
}

template <bool Parallel>
void BM_EvaluateMany(benchmark::State& state) {
  const auto f = quadratic_spline_interpolate(random_nodes(200, 7));
  const auto xs = grid_over(f, static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(xs.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      evaluate_many(f, xs, out);
    } else {
      evaluate_many_serial(f, xs, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_BruteForce(benchmark::State& state) {
  const auto seq = random_nodes(static_cast<std::size_t>(state.range(0)), 11);
  const int grid = static_cast<int>(state.range(1));
  const ErrorSpec spec{Variant::left, 2};
  for (auto _ : state) {
    auto r = Parallel ? brute_force_optimum(seq, SearchMethod::ext_step, spec, grid)
                      : brute_force_optimum_serial(seq, SearchMethod::ext_step, spec, grid);
    benchmark::DoNotOptimize(r.value);
  }
}

}  // namespace

BENCHMARK(BM_EvaluateMany<false>)->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(BM_EvaluateMany<true>)->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(BM_BruteForce<false>)->Args({2, 200})->Args({3, 60});
BENCHMARK(BM_BruteForce<true>)->Args({2, 200})->Args({3, 60});

BENCHMARK_MAIN();
