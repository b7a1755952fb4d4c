#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin that defines
// its result; tests compare the two bit for bit.

#include <cstdint>
#include <limits>
#include <span>

#include "golden/core.hpp"

namespace golden {

// out[i] = f(xs[i]).
void evaluate_many(const PiecewiseFunction& f, std::span<const double> xs, std::span<double> out);
void evaluate_many_serial(const PiecewiseFunction& f, std::span<const double> xs,
                          std::span<double> out);

struct ArgMin {
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
};

// Lowest objective over indices [0, count); ties resolve to the lowest index.
// `factory()` is called once per thread and must return a callable
// double(std::uint64_t) owning whatever scratch space it needs.
template <class Factory>
ArgMin argmin_serial(std::uint64_t count, Factory&& factory) {
  ArgMin best;
  auto eval = factory();
  for (std::uint64_t i = 0; i < count; ++i) {
    const double v = eval(i);
    if (v < best.value) best = {v, i};
  }
  return best;
}

template <class Factory>
ArgMin argmin_parallel(std::uint64_t count, Factory&& factory) {
  ArgMin best;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    ArgMin local;
    auto eval = factory();
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const double v = eval(static_cast<std::uint64_t>(i));
      if (v < local.value) local = {v, static_cast<std::uint64_t>(i)};
    }
#pragma omp critical(golden_argmin)
    {
      if (local.value < best.value || (local.value == best.value && local.index < best.index)) {
        best = local;
      }
    }
  }
  return best;
}

}  // namespace golden
