#pragma once

// Shared helpers for the test suites: seeded random node sequences and plain
// transcriptions of the golden error sums.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "golden/core.hpp"

namespace golden::support {

struct RandomSpec {
  std::size_t min_intervals = 1;
  std::size_t max_intervals = 20;
  double lo = -100.0;
  double hi = 100.0;
  bool with_k0 = false;
};

// Abscissae at least 1e-3 apart so every sequence is comfortably valid.
inline NodeSequence random_sequence(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> count(spec.min_intervals, spec.max_intervals);
  std::uniform_real_distribution<double> coord(spec.lo, spec.hi);
  std::uniform_real_distribution<double> slope(-5.0, 5.0);
  for (;;) {
    const std::size_t n = count(rng);
    std::vector<double> xs(n + 1);
    for (double& x : xs) x = coord(rng);
    std::sort(xs.begin(), xs.end());
    bool spaced = true;
    for (std::size_t i = 1; i < xs.size(); ++i) spaced = spaced && xs[i] - xs[i - 1] > 1e-3;
    if (!spaced) continue;
    std::vector<Node> nodes;
    for (double x : xs) nodes.push_back({x, coord(rng)});
    std::optional<double> k0;
    if (spec.with_k0) k0 = slope(rng);
    return NodeSequence(std::move(nodes), k0);
  }
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// The displayed sums written out term by term over a series t_1 .. t_{n-1}
// (t[k] holds t_{k+1}): groups i = 0..l with j = 0..m-2, then the tail
// j = m(l+1)..n-2. variant: 0 left, 1 right, 2 mixed, 3 left-right,
// 4 right-left. Mixed compares the two segment lengths when xs is given,
// otherwise the ratio against 1/2.
inline double literal_error(const std::vector<double>& t, int m, int variant, bool squared,
                            bool averaged, const std::vector<double>* xs = nullptr) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const int n = static_cast<int>(t.size()) + 1;
  const int l = n / m - 1;
  auto term = [&](int k, int j) {
    const double r = t[k];
    double d = 0.0;
    switch (variant) {
      case 0: d = r - (1 - phi); break;
      case 1: d = r - phi; break;
      case 2: {
        bool shorter = r < 0.5;
        if (xs) shorter = (*xs)[k + 1] - (*xs)[k] < (*xs)[k + 2] - (*xs)[k + 1];
        d = r - (shorter ? 1 - phi : phi);
        break;
      }
      case 3: d = r + std::pow(-1.0, j) * phi + sign(-1 - std::pow(-1.0, j)); break;
      case 4: d = r + std::pow(-1.0, j + 1) * phi + sign(-1 - std::pow(-1.0, j + 1)); break;
    }
    return squared ? d * d : std::abs(d);
  };
  double e = 0.0;
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= m - 2; ++j) e += term(i * m + j, j);
  }
  for (int j = m * (l + 1); j <= n - 2; ++j) e += term(j, j);
  if (averaged) {
    const int tail = n - 1 - m * (l + 1);
    e /= static_cast<double>((m - 1) * (l + 1) + std::max(tail, 0));
  }
  return e;
}

inline std::vector<double> literal_step_ratios(const std::vector<double>& x) {
  std::vector<double> t;
  for (std::size_t j = 0; j + 2 < x.size(); ++j) t.push_back((x[j + 1] - x[j]) / (x[j + 2] - x[j]));
  return t;
}

}  // namespace golden::support
