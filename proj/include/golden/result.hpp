#pragma once

#include <string_view>
#include <vector>

#include "golden/core.hpp"

namespace golden {

// How a node of a transformed sequence came about.
enum class Provenance { original, added, moved, kept };

// What a golden transform did at one construction site: an interval for
// extension methods, an odd-indexed node for equal-number methods.
enum class Outcome {
  applied,                 // node added or moved as constructed
  revised,                 // added after the hill-height revision
  kept,                    // node left unchanged (guard or range check)
  degenerate,              // intersection undefined (1 + ck = 0); node kept
  rejected,                // curve node fell outside its interval
  degenerate_denominator,  // curve formula denominator vanished
  masked,                  // curve node dropped by keep_mask
};

std::string_view to_string(Provenance p) noexcept;
std::string_view to_string(Outcome o) noexcept;

struct GoldenResult {
  NodeSequence transformed;
  std::vector<Provenance> provenance;  // one per transformed node
  PiecewiseFunction function;
  std::vector<Node> hilltops;
  std::vector<Outcome> outcomes;  // one per construction site
};

}  // namespace golden
