#include "golden/kernels.hpp"

#include <algorithm>

namespace golden {

void evaluate_many(const PiecewiseFunction& f, std::span<const double> xs, std::span<double> out) {
  if (out.size() != xs.size()) throw Error(ErrorCode::invalid_param, "output size mismatch");
  const auto n = static_cast<std::int64_t>(xs.size());
  // Exceptions must not escape the parallel region; check the domain up front.
  if (std::any_of(xs.begin(), xs.end(), [](double x) { return std::isnan(x); })) {
    throw Error(ErrorCode::out_of_domain, "NaN abscissa");
  }
  if (!xs.empty()) {
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    (void)f.piece_index(*lo);
    (void)f.piece_index(*hi);
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = f(xs[i]);
}

void evaluate_many_serial(const PiecewiseFunction& f, std::span<const double> xs,
                          std::span<double> out) {
  if (out.size() != xs.size()) throw Error(ErrorCode::invalid_param, "output size mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
}

}  // namespace golden
