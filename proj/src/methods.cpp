#include "golden/methods.hpp"

#include <algorithm>

#include "golden/golden_curve.hpp"
#include "golden/golden_linear.hpp"
#include "golden/golden_step.hpp"

namespace golden {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::step: return "step";
    case Method::linear: return "linear";
    case Method::quadratic: return "quadratic";
    case Method::golden_ext_step: return "golden_ext_step";
    case Method::golden_eq_step: return "golden_eq_step";
    case Method::golden_ext_linear: return "golden_ext_linear";
    case Method::golden_eq_linear: return "golden_eq_linear";
    case Method::golden_ext_curve: return "golden_ext_curve";
  }
  return "step";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  std::string canon(name);
  std::replace(canon.begin(), canon.end(), '-', '_');
  for (Method m : kAllMethods) {
    if (to_string(m) == canon) return m;
  }
  return std::nullopt;
}

std::optional<Side> parse_side(std::string_view name) noexcept {
  if (name == "left") return Side::left;
  if (name == "right") return Side::right;
  return std::nullopt;
}

std::string_view to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

std::vector<std::string_view> accepted_params(Method method) {
  switch (method) {
    case Method::golden_ext_step:
    case Method::golden_eq_step: return {"L", "side"};
    case Method::golden_ext_linear: return {"q", "side"};
    case Method::golden_ext_curve: return {"side", "keep_mask"};
    default: return {};
  }
}

std::optional<std::string_view> mismatched_param(Method method, const MethodParams& params) {
  const auto ok = accepted_params(method);
  auto check = [&ok](bool given, std::string_view name) -> std::optional<std::string_view> {
    if (given && std::find(ok.begin(), ok.end(), name) == ok.end()) return name;
    return std::nullopt;
  };
  if (auto bad = check(params.jump.has_value(), "L")) return bad;
  if (auto bad = check(params.q.has_value(), "q")) return bad;
  if (auto bad = check(params.side.has_value(), "side")) return bad;
  return check(params.keep_mask.has_value(), "keep_mask");
}

Side default_side(Method method) noexcept {
  return method == Method::golden_ext_step || method == Method::golden_eq_step ? Side::left
                                                                                : Side::right;
}

namespace {

GoldenResult traditional(const NodeSequence& nodes, PiecewiseFunction f) {
  return GoldenResult{nodes, std::vector<Provenance>(nodes.size(), Provenance::original),
                      std::move(f), {}, {}};
}

}  // namespace

GoldenResult run_method(Method method, const NodeSequence& nodes, const MethodParams& params) {
  const Side side = params.side.value_or(default_side(method));
  switch (method) {
    case Method::step: return traditional(nodes, step_interpolate(nodes));
    case Method::linear: return traditional(nodes, linear_interpolate(nodes));
    case Method::quadratic: return traditional(nodes, quadratic_spline_interpolate(nodes));
    case Method::golden_ext_step:
      return golden_extension_step(nodes, StepParams{params.jump.value_or(1.0), side});
    case Method::golden_eq_step:
      return golden_equal_number_step(nodes, StepParams{params.jump.value_or(1.0), side});
    case Method::golden_ext_linear:
      return golden_extension_linear(nodes, LinearParams{params.q.value_or(0.2), side});
    case Method::golden_eq_linear: return golden_equal_number_linear(nodes, LinearParams{});
    case Method::golden_ext_curve:
      return golden_extension_curve(nodes, CurveParams{side, params.keep_mask});
  }
  throw Error(ErrorCode::invalid_param, "unknown method");
}

RatioSeries ratio_series(Method method) noexcept {
  switch (method) {
    case Method::step:
    case Method::golden_ext_step:
    case Method::golden_eq_step: return RatioSeries::step;
    case Method::linear:
    case Method::golden_ext_linear:
    case Method::golden_eq_linear: return RatioSeries::linear;
    default: return RatioSeries::curve;
  }
}

std::vector<GoldenErrorReport> error_bundle(Method method, const NodeSequence& original,
                                            const GoldenResult& result, int m) {
  if (m < 2) throw Error(ErrorCode::invalid_param, "group size m must be at least 2");
  std::vector<GoldenErrorReport> out;
  const RatioSeries series = ratio_series(method);
  if (series != RatioSeries::curve && result.transformed.size() < 3) return out;
  if (series == RatioSeries::curve && original.size() < 2) return out;

  std::vector<double> plain;
  if (series == RatioSeries::step) plain = step_ratios(result.transformed);
  if (series == RatioSeries::linear) plain = linear_ratios(result.transformed);
  const auto partition = original.xs();
  for (bool averaged : {false, true}) {
    for (Variant v : kAllVariants) {
      std::vector<double> ratios = plain;
      int group = m;
      if (series == RatioSeries::curve) {
        // Hills over a partition can admit several tangent points; pick the
        // one nearest the variant's golden parameter.
        const double golden = v == Variant::left ? 1.0 - kPhi : kPhi;
        ratios = curve_ratios(result.function, partition, golden);
        // Every hill is measured on its own: one group spanning the whole
        // series, so nothing is skipped and the alternation index is the
        // hill index.
        group = static_cast<int>(ratios.size()) + 1;
      }
      out.push_back(golden_error(ratios, ErrorSpec{v, group, Form::absolute, averaged}));
    }
  }
  return out;
}

}  // namespace golden
