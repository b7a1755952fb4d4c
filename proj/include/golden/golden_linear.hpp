#pragma once

// Golden piecewise linear interpolation built from golden cuspidal hills: a
// two-segment polyline A-B-C whose hilltop B projects perpendicularly onto a
// golden point of the chord AC.

#include "golden/result.hpp"

namespace golden {

struct LinearParams {
  double q = 0.2;  // |hilltop - foot| / |chord|, must lie in (0, 1/2)
  Side side = Side::right;
};

struct CuspidalHill {
  Node a;
  Node b;     // hilltop
  Node c;
  Node foot;  // perpendicular foot of b on the chord ac
  double ratio = 0.0;
};

// t = ((y_c-y_a)(y_b-y_a) + (x_c-x_a)(x_b-x_a)) / |ac|^2, the chord parameter of
// the perpendicular foot of b. Negative when the angle at a is obtuse.
// Throws Error(degenerate_chord) when a and c coincide.
double cuspidal_ratio(const Node& a, const Node& b, const Node& c);

CuspidalHill make_cuspidal_hill(const Node& a, const Node& b, const Node& c);

// Adds a hilltop over every interval: the foot lies at the golden point of the
// chord and the hilltop sits q|chord| off it, below the chord when |k| >= 1 and
// above when |k| < 1. If the hilltop abscissa leaves
// [x_i + t, x_{i+1} - t], t = (1 - phi)(x_{i+1} - x_i) / 2, q is revised once
// to t / |y_{i+1} - y_i|.
GoldenResult golden_extension_linear(const NodeSequence& seq, const LinearParams& params = {});

// Relocates each odd node A_{2i-1} along the extension of one of its own
// segments until it becomes the golden hilltop over A_{2i-2} A_{2i}, keeping
// the node when its perpendicular foot or the relocated abscissa leaves the
// open chord range. The golden point nearer the foot is used, so
// params.side is not consulted.
GoldenResult golden_equal_number_linear(const NodeSequence& seq, const LinearParams& params = {});

}  // namespace golden
