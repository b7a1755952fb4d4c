#include "golden/golden_step.hpp"

namespace golden {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::original: return "original";
    case Provenance::added: return "added";
    case Provenance::moved: return "moved";
    case Provenance::kept: return "kept";
  }
  return "original";
}

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::applied: return "applied";
    case Outcome::revised: return "revised";
    case Outcome::kept: return "kept";
    case Outcome::degenerate: return "degenerate";
    case Outcome::rejected: return "rejected";
    case Outcome::degenerate_denominator: return "degenerate_denominator";
    case Outcome::masked: return "masked";
  }
  return "applied";
}

namespace {

// Fraction of an interval measured back from its right end.
double step_fraction(Side side) { return side == Side::left ? kPhi : 1.0 - kPhi; }

}  // namespace

GoldenResult golden_extension_step(const NodeSequence& seq, const StepParams& params) {
  if (!std::isfinite(params.jump) || params.jump == 0.0) {
    throw Error(ErrorCode::invalid_param, "longitudinal jump L must be finite and nonzero");
  }
  const double f = step_fraction(params.side);
  const auto nodes = seq.nodes();

  std::vector<Node> out{nodes[0]};
  std::vector<Provenance> prov{Provenance::original};
  out.reserve(2 * nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& a = nodes[i];
    const Node& b = nodes[i + 1];
    const double x = b.x - (b.x - a.x) * f;
    const double y = a.y != b.y ? b.y - (b.y - a.y) * f : b.y + params.jump;
    out.push_back({x, y});
    out.push_back(b);
    prov.push_back(Provenance::added);
    prov.push_back(Provenance::original);
  }

  NodeSequence transformed(std::move(out), seq.k0());
  auto fn = step_interpolate(transformed);
  return GoldenResult{std::move(transformed), std::move(prov), std::move(fn), {},
                      std::vector<Outcome>(seq.intervals(), Outcome::applied)};
}

GoldenResult golden_equal_number_step(const NodeSequence& seq, const StepParams& params) {
  const double f = step_fraction(params.side);
  std::vector<Node> out(seq.nodes().begin(), seq.nodes().end());
  std::vector<Provenance> prov(out.size(), Provenance::original);
  std::vector<Outcome> outcomes;

  const std::size_t n = seq.intervals();
  if (n >= 2) {
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const double lo = out[2 * i - 2].x;
      const double hi = out[2 * i].x;
      const double xg = hi - (hi - lo) * f;
      if (xg < out[2 * i - 1].x) {
        out[2 * i - 1].x = xg;
        prov[2 * i - 1] = Provenance::moved;
        outcomes.push_back(Outcome::applied);
      } else {
        prov[2 * i - 1] = Provenance::kept;
        outcomes.push_back(Outcome::kept);
      }
    }
  }

  NodeSequence transformed(std::move(out), seq.k0());
  auto fn = step_interpolate(transformed);
  return GoldenResult{std::move(transformed), std::move(prov), std::move(fn), {},
                      std::move(outcomes)};
}

}  // namespace golden
