#pragma once

// Golden step interpolation: degree-0 splines whose adjacent segment lengths
// follow the golden section.

#include "golden/result.hpp"

namespace golden {

struct StepParams {
  double jump = 1.0;  // longitudinal jump L given to an added node when y_i == y_{i+1}
  Side side = Side::left;
};

// Inserts a golden split node inside every interval:
//   x_{i+.5} = x_{i+1} - (x_{i+1} - x_i) phi
//   y_{i+.5} = y_{i+1} - (y_{i+1} - y_i) phi, or y_{i+1} + L when y_i == y_{i+1}
// (phi replaced by 1 - phi for Side::right). Returns 2n+1 nodes.
GoldenResult golden_extension_step(const NodeSequence& seq, const StepParams& params = {});

// Moves every odd node x_{2i-1}, i = 1..floor(n/2), to the left golden point
// x_g of [x_{2i-2}, x_{2i}] when x_g < x_{2i-1}. Returns n+1 nodes.
GoldenResult golden_equal_number_step(const NodeSequence& seq, const StepParams& params = {});

}  // namespace golden
