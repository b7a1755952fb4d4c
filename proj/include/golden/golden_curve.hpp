#pragma once

// Golden curve interpolation: quadratic splines with free knots placed so the
// arc over each original interval becomes a golden domed hill.

#include <optional>
#include <vector>

#include "golden/result.hpp"

namespace golden {

struct CurveParams {
  Side side = Side::right;
  // One flag per original interval; false drops that interval's added node.
  std::optional<std::vector<bool>> keep_mask;
};

// An arc over [a.x, b.x] and the point where its tangent is parallel to the
// chord.
struct DomedHill {
  Node a;
  Node b;
  Node hilltop;
  double foot_ratio = 0.0;  // chord parameter of the hilltop's perpendicular foot
  bool degenerate = false;  // arc coincides with its chord
};

// Walks the intervals left to right. For interval i with chord slope K and
// current knot derivative D, the first new piece must leave A_i with slope D
// and reach slope K at the added node, so its secant slope is
// t = (K + D) / 2. Intersecting y = y_i + t (x - x_i) with the perpendicular to
// the chord through its golden point H gives
//   x = ((y_{i+1}-y_i)(y_h - y_i + t x_i) + x_h (x_{i+1}-x_i))
//       / (t (y_{i+1}-y_i) + x_{i+1} - x_i).
// The node is kept only when x lies strictly inside (x_i, x_{i+1}).
// Throws Error(missing_derivative) without k0 and Error(invalid_param) on a
// keep_mask of the wrong length.
GoldenResult golden_extension_curve(const NodeSequence& seq, const CurveParams& params = {});

// Root of f'(x) = (f(b) - f(a)) / (b - a) on [a, b] for a C1 quadratic spline.
// With several roots the one whose foot ratio is nearest `golden` wins (ties
// go to the smaller abscissa). An arc within 1e-9 of its chord at 64 probe
// points is reported as degenerate with foot_ratio == golden.
DomedHill find_hilltop(const PiecewiseFunction& f, double a, double b, double golden = kPhi);

}  // namespace golden
