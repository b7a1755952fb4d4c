#include "golden/criteria.hpp"

#include <algorithm>

#include "golden/golden_curve.hpp"
#include "golden/golden_linear.hpp"
#include "golden/kernels.hpp"

namespace golden {

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::left: return "left";
    case Variant::right: return "right";
    case Variant::mixed: return "mixed";
    case Variant::left_right: return "left_right";
    case Variant::right_left: return "right_left";
  }
  return "left";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : kAllVariants) {
    if (to_string(v) == name) return v;
  }
  if (name == "left-right") return Variant::left_right;
  if (name == "right-left") return Variant::right_left;
  return std::nullopt;
}

std::vector<double> step_ratios(std::span<const double> xs) {
  if (xs.size() < 3) throw Error(ErrorCode::too_few_nodes, "ratios need at least three nodes");
  std::vector<double> out(xs.size() - 2);
  for (std::size_t j = 0; j + 2 < xs.size(); ++j) {
    out[j] = (xs[j + 1] - xs[j]) / (xs[j + 2] - xs[j]);
  }
  return out;
}

std::vector<double> step_ratios(const NodeSequence& seq) { return step_ratios(seq.xs()); }

std::vector<double> linear_ratios(const NodeSequence& seq) {
  if (seq.size() < 3) throw Error(ErrorCode::too_few_nodes, "ratios need at least three nodes");
  std::vector<double> out(seq.size() - 2);
  for (std::size_t j = 0; j + 2 < seq.size(); ++j) {
    out[j] = cuspidal_ratio(seq[j], seq[j + 1], seq[j + 2]);
  }
  return out;
}

std::vector<double> curve_ratios(const PiecewiseFunction& f, std::span<const double> partition,
                                 double golden) {
  if (partition.size() < 2) {
    throw Error(ErrorCode::invalid_param, "a partition needs at least two points");
  }
  for (std::size_t i = 1; i < partition.size(); ++i) {
    if (!(partition[i] > partition[i - 1])) {
      throw Error(ErrorCode::invalid_param, "partition must be strictly increasing");
    }
  }
  if (partition.front() < f.lower() || partition.back() > f.upper()) {
    throw Error(ErrorCode::out_of_domain, "partition leaves the function's domain");
  }
  std::vector<double> out;
  out.reserve(partition.size() - 1);
  for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
    out.push_back(find_hilltop(f, partition[i], partition[i + 1], golden).foot_ratio);
  }
  return out;
}

double golden_target(Variant v, double ratio, std::size_t j) noexcept {
  constexpr double left = 1.0 - kPhi;
  constexpr double right = kPhi;
  switch (v) {
    case Variant::left: return left;
    case Variant::right: return right;
    case Variant::mixed: return ratio < 0.5 ? left : right;
    case Variant::left_right: return j % 2 == 0 ? left : right;
    case Variant::right_left: return j % 2 == 0 ? right : left;
  }
  return left;
}

namespace {

void check(std::span<const double> ratios, const ErrorSpec& spec) {
  if (ratios.empty()) throw Error(ErrorCode::too_few_ratios, "no ratios to measure");
  if (spec.m < 2) throw Error(ErrorCode::invalid_param, "group size m must be at least 2");
}

// Walks the positions that enter the sums: within full groups the last ratio
// of each group (j = m-1) spans the group boundary and is skipped; the tail
// uses the global index as its alternation index.
template <class Visit>
std::size_t for_each_term(std::size_t n_ratios, int m_signed, Visit&& visit) {
  const auto m = static_cast<std::size_t>(m_signed);
  const std::size_t segments = n_ratios + 1;
  const std::size_t grouped = (segments / m) * m;  // m (l + 1)
  std::size_t count = 0;
  for (std::size_t k = 0; k < n_ratios; ++k) {
    std::size_t j = k;
    if (k < grouped) {
      j = k % m;
      if (j == m - 1) continue;
    }
    visit(k, j);
    ++count;
  }
  return count;
}

}  // namespace

GoldenErrorReport golden_error(std::span<const double> ratios, const ErrorSpec& spec) {
  check(ratios, spec);
  GoldenErrorReport report;
  report.spec = spec;
  double sum = 0.0;
  report.count = for_each_term(ratios.size(), spec.m, [&](std::size_t k, std::size_t j) {
    const double r = ratios[k];
    const double target = golden_target(spec.variant, r, j);
    const double e = r - target;
    sum += spec.form == Form::squared ? e * e : std::abs(e);
    report.ratios.push_back(r);
    report.targets.push_back(target);
    report.positions.push_back(k);
  });
  report.value = spec.averaged ? sum / static_cast<double>(report.count) : sum;
  return report;
}

double golden_error_value(std::span<const double> ratios, const ErrorSpec& spec) {
  check(ratios, spec);
  double sum = 0.0;
  const auto count = for_each_term(ratios.size(), spec.m, [&](std::size_t k, std::size_t j) {
    const double e = ratios[k] - golden_target(spec.variant, ratios[k], j);
    sum += spec.form == Form::squared ? e * e : std::abs(e);
  });
  return spec.averaged ? sum / static_cast<double>(count) : sum;
}

namespace {

struct SearchSpace {
  std::vector<double> base;                     // transformed abscissae, free slots unset
  std::vector<std::size_t> slots;               // index of each free knot in `base`
  std::vector<std::vector<double>> candidates;  // ascending per free knot
  std::uint64_t total = 1;
};

std::vector<double> grid_points(double lo, double hi, int grid) {
  std::vector<double> out;
  if (grid == 1) {
    out.push_back(lo + 0.5 * (hi - lo));
    return out;
  }
  for (int g = 0; g < grid; ++g) {
    out.push_back(g == grid - 1 ? hi : lo + (hi - lo) * g / (grid - 1));
  }
  return out;
}

SearchSpace build_space(const NodeSequence& seq, SearchMethod method, int grid) {
  const std::size_t n = seq.intervals();
  if (n > 4 || grid > 200) throw Error(ErrorCode::too_large, "brute force is limited to n <= 4, grid <= 200");
  if (grid < 1) throw Error(ErrorCode::invalid_param, "grid must be at least 1");
  const auto xs = seq.xs();
  SearchSpace space;

  if (method == SearchMethod::ext_step) {
    space.base.assign(2 * n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) space.base[2 * i] = xs[i];
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> pts;
      for (double x : grid_points(xs[i], xs[i + 1], grid)) {
        if (x > xs[i] && x < xs[i + 1]) pts.push_back(x);
      }
      space.slots.push_back(2 * i + 1);
      space.candidates.push_back(std::move(pts));
    }
  } else {
    space.base = xs;
    for (std::size_t i = 1; n >= 2 && i <= n / 2; ++i) {
      const double lo = xs[2 * i - 2];
      const double cap = xs[2 * i - 1];
      std::vector<double> pts;
      for (double x : grid_points(lo, xs[2 * i], grid)) {
        if (x > lo && x <= cap) pts.push_back(x);
      }
      if (pts.empty() || pts.back() != cap) pts.push_back(cap);
      space.slots.push_back(2 * i - 1);
      space.candidates.push_back(std::move(pts));
    }
  }
  for (const auto& c : space.candidates) {
    if (c.empty()) throw Error(ErrorCode::invalid_param, "grid leaves a free knot without candidates");
    space.total *= c.size();
  }
  return space;
}

// Objective evaluator with its own scratch buffers; one per thread.
class Evaluator {
 public:
  Evaluator(const SearchSpace& space, const ErrorSpec& spec)
      : space_(space), spec_(spec), xs_(space.base), ratios_(space.base.size() - 2) {}

  double operator()(std::uint64_t index) {
    decode(index, xs_);
    for (std::size_t j = 0; j < ratios_.size(); ++j) {
      ratios_[j] = (xs_[j + 1] - xs_[j]) / (xs_[j + 2] - xs_[j]);
    }
    return golden_error_value(ratios_, spec_);
  }

  // Mixed radix with the leftmost free knot most significant.
  void decode(std::uint64_t index, std::vector<double>& xs) const {
    for (std::size_t s = space_.slots.size(); s-- > 0;) {
      const auto& c = space_.candidates[s];
      xs[space_.slots[s]] = c[index % c.size()];
      index /= c.size();
    }
  }

 private:
  const SearchSpace& space_;
  const ErrorSpec& spec_;
  std::vector<double> xs_;
  std::vector<double> ratios_;
};

template <class Scan>
OptimumResult search(const NodeSequence& seq, SearchMethod method, const ErrorSpec& spec, int grid,
                     Scan&& scan) {
  const SearchSpace space = build_space(seq, method, grid);
  if (space.base.size() < 3) throw Error(ErrorCode::too_few_nodes, "ratios need at least three nodes");
  // Validate the spec once outside any parallel region.
  (void)golden_error_value(std::vector<double>(space.base.size() - 2, 0.5), spec);

  const ArgMin best = scan(space.total, [&] { return Evaluator(space, spec); });
  OptimumResult result;
  result.xs = space.base;
  Evaluator(space, spec).decode(best.index, result.xs);
  for (std::size_t slot : space.slots) result.positions.push_back(result.xs[slot]);
  result.value = best.value;
  result.evaluated = space.total;
  return result;
}

}  // namespace

OptimumResult brute_force_optimum(const NodeSequence& seq, SearchMethod method,
                                  const ErrorSpec& spec, int grid) {
  return search(seq, method, spec, grid,
                [](std::uint64_t count, auto&& factory) { return argmin_parallel(count, factory); });
}

OptimumResult brute_force_optimum_serial(const NodeSequence& seq, SearchMethod method,
                                         const ErrorSpec& spec, int grid) {
  return search(seq, method, spec, grid,
                [](std::uint64_t count, auto&& factory) { return argmin_serial(count, factory); });
}

}  // namespace golden
