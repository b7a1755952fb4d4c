#pragma once

// Golden-degree measures. A ratio series r_0 .. r_{N-2} over N segments or
// hills is compared against golden targets grouped by m:
//
//   E = sum_{i=0}^{l} sum_{j=0}^{m-2} |r_{im+j} - target(i, j)|
//     + sum_{j=m(l+1)}^{N-2}         |r_j      - target(j)|,   l = floor(N/m) - 1
//
// Empty sums are zero. Averaged forms divide by
// (m-1)(l+1) + (N-1-m(l+1))_+, the number of terms.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "golden/core.hpp"

namespace golden {

enum class Variant { left, right, mixed, left_right, right_left };
enum class Form { absolute, squared };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;
inline constexpr Variant kAllVariants[] = {Variant::left, Variant::right, Variant::mixed,
                                           Variant::left_right, Variant::right_left};

struct ErrorSpec {
  Variant variant = Variant::left;
  int m = 2;
  Form form = Form::absolute;
  bool averaged = false;
};

struct GoldenErrorReport {
  ErrorSpec spec;
  double value = 0.0;
  std::vector<double> ratios;   // the ratios that enter the sums, in order
  std::vector<double> targets;  // matching golden targets
  std::vector<std::size_t> positions;  // index of each entry in the input series
  std::size_t count = 0;        // normalisation denominator
};

// r_j = (x_{j+1} - x_j) / (x_{j+2} - x_j). Throws Error(too_few_nodes) for n < 2.
std::vector<double> step_ratios(std::span<const double> xs);
std::vector<double> step_ratios(const NodeSequence& seq);

// Cuspidal-hill ratio of every consecutive node triple.
std::vector<double> linear_ratios(const NodeSequence& seq);

// Domed-hill foot ratio of f over each interval of `partition`.
std::vector<double> curve_ratios(const PiecewiseFunction& f, std::span<const double> partition,
                                 double golden = kPhi);

// Target of the ratio at series position `k` whose alternation index is `j`.
double golden_target(Variant v, double ratio, std::size_t j) noexcept;

// Throws Error(too_few_ratios) on an empty series and Error(invalid_param)
// for m < 2.
GoldenErrorReport golden_error(std::span<const double> ratios, const ErrorSpec& spec);

// Same value as golden_error(...).value without building the report.
double golden_error_value(std::span<const double> ratios, const ErrorSpec& spec);

enum class SearchMethod { ext_step, eq_step };

struct OptimumResult {
  std::vector<double> positions;  // free knots, left to right
  std::vector<double> xs;         // full transformed abscissae
  double value = 0.0;
  std::uint64_t evaluated = 0;
};

// Exhaustive search over the free knots of a golden step transform under the
// constraints the constructive algorithms satisfy:
//   ext_step: x_i < x'_{2i+1} < x_{i+1} for every interval;
//   eq_step:  x_{2i-2} < x'_{2i-1} <= x_{2i-1}, i = 1..floor(n/2), rest fixed.
// Each free knot is tried at `grid` evenly spaced points spanning the segment
// its ratio is measured over, ends included (grid == 1 means the midpoint);
// points violating a constraint are dropped and a closed constraint endpoint
// is always added. Ties go to the lexicographically lowest positions.
// Throws Error(too_large) for n > 4 or grid > 200.
OptimumResult brute_force_optimum(const NodeSequence& seq, SearchMethod method,
                                  const ErrorSpec& spec, int grid);
// Single-threaded reference for brute_force_optimum.
OptimumResult brute_force_optimum_serial(const NodeSequence& seq, SearchMethod method,
                                         const ErrorSpec& spec, int grid);

}  // namespace golden
