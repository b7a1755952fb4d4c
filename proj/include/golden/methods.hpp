#pragma once

// Uniform entry point over the eight interpolation methods, shared by the
// HTTP service and the command line.

#include <optional>
#include <string_view>
#include <vector>

#include "golden/criteria.hpp"
#include "golden/result.hpp"

namespace golden {

enum class Method {
  step,
  linear,
  quadratic,
  golden_ext_step,
  golden_eq_step,
  golden_ext_linear,
  golden_eq_linear,
  golden_ext_curve,
};

inline constexpr Method kAllMethods[] = {
    Method::step,           Method::linear,           Method::quadratic,
    Method::golden_ext_step, Method::golden_eq_step,  Method::golden_ext_linear,
    Method::golden_eq_linear, Method::golden_ext_curve};

std::string_view to_string(Method m) noexcept;
// Accepts the canonical names and their hyphenated spellings.
std::optional<Method> parse_method(std::string_view name) noexcept;
std::optional<Side> parse_side(std::string_view name) noexcept;
std::string_view to_string(Side s) noexcept;

// Parameters as supplied by a caller; unset means "use the default".
struct MethodParams {
  std::optional<double> jump;  // L
  std::optional<double> q;
  std::optional<Side> side;
  std::optional<std::vector<bool>> keep_mask;
};

// Names of the parameters `method` accepts, out of "L", "q", "side",
// "keep_mask".
std::vector<std::string_view> accepted_params(Method method);

// Name of the first supplied parameter the method does not take, if any.
std::optional<std::string_view> mismatched_param(Method method, const MethodParams& params);

// Side used when none is given: left for the step transforms, right otherwise.
Side default_side(Method method) noexcept;

// Traditional methods come back with the input as `transformed`, all nodes
// tagged original and no outcomes.
GoldenResult run_method(Method method, const NodeSequence& nodes, const MethodParams& params);

// Which ratio series the criteria bundle measures for a method.
enum class RatioSeries { step, linear, curve };
RatioSeries ratio_series(Method method) noexcept;

// Five variants at the given m, plain sums then averaged. Step and linear
// methods measure the transformed nodes; quadratic methods measure the domed
// hills of the function over the original intervals, summed hill by hill
// (reported with m = hills + 1, the single-group setting that counts every
// hill). Empty when the series has no ratios.
std::vector<GoldenErrorReport> error_bundle(Method method, const NodeSequence& original,
                                            const GoldenResult& result, int m);

}  // namespace golden
