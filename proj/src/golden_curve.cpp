#include "golden/golden_curve.hpp"

#include <algorithm>
#include <limits>

namespace golden {

GoldenResult golden_extension_curve(const NodeSequence& seq, const CurveParams& params) {
  if (!seq.k0()) {
    throw Error(ErrorCode::missing_derivative, "golden curve needs the start derivative k0");
  }
  const std::size_t n = seq.intervals();
  if (params.keep_mask && params.keep_mask->size() != n) {
    throw Error(ErrorCode::invalid_param, "keep_mask must have one entry per interval");
  }
  const double f = golden_parameter(params.side);
  const auto nodes = seq.nodes();

  std::vector<Node> out{nodes[0]};
  std::vector<Provenance> prov{Provenance::original};
  std::vector<Node> hilltops;
  std::vector<Outcome> outcomes;

  // Spline derivative at the last accepted node.
  double d = *seq.k0();
  auto advance = [&d](const Node& from, const Node& to) {
    d = 2.0 * (to.y - from.y) / (to.x - from.x) - d;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Node& a = nodes[i];
    const Node& b = nodes[i + 1];
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const Node h{a.x + dx * f, a.y + dy * f};
    const double t = 0.5 * (dy / dx + d);
    const double den = t * dy + dx;

    Outcome outcome = Outcome::applied;
    Node top{};
    if (std::abs(den) <= 1e-14 * (std::abs(t * dy) + dx)) {
      outcome = Outcome::degenerate_denominator;
    } else {
      top.x = (dy * (h.y - a.y + t * a.x) + h.x * dx) / den;
      top.y = a.y + t * (top.x - a.x);
      const bool inside = top.x > a.x && top.x < b.x && strictly_increasing(a.x, top.x) &&
                          strictly_increasing(top.x, b.x);
      if (params.keep_mask && !(*params.keep_mask)[i]) {
        outcome = Outcome::masked;
      } else if (!inside) {
        outcome = Outcome::rejected;
      }
    }

    if (outcome == Outcome::applied) {
      advance(a, top);
      advance(top, b);
      out.push_back(top);
      prov.push_back(Provenance::added);
      hilltops.push_back(top);
    } else {
      advance(a, b);
    }
    out.push_back(b);
    prov.push_back(Provenance::original);
    outcomes.push_back(outcome);
  }

  NodeSequence transformed(std::move(out), seq.k0());
  auto fn = quadratic_spline_interpolate(transformed);
  return GoldenResult{std::move(transformed), std::move(prov), std::move(fn),
                      std::move(hilltops), std::move(outcomes)};
}

DomedHill find_hilltop(const PiecewiseFunction& f, double a, double b, double golden) {
  if (f.degree() != 2) throw Error(ErrorCode::invalid_param, "find_hilltop needs a degree-2 spline");
  if (!(a < b)) throw Error(ErrorCode::invalid_param, "find_hilltop needs a < b");
  const double fa = f(a);
  const double fb = f(b);
  const double w = b - a;
  const double rise = fb - fa;
  const double slope = rise / w;
  const double norm2 = w * w + rise * rise;
  auto ratio_at = [&](double x, double fx) { return (rise * (fx - fa) + w * (x - a)) / norm2; };

  DomedHill hill{{a, fa}, {b, fb}, {}, 0.0, false};

  const double scale = 1.0 + std::max(std::abs(fa), std::abs(fb));
  bool flat = true;
  for (int j = 0; j < 64 && flat; ++j) {
    const double x = a + w * j / 63.0;
    flat = std::abs(f(x) - (fa + slope * (x - a))) <= 1e-9 * scale;
  }
  if (flat) {
    const double x = a + golden * w;
    hill.hilltop = {x, f(x)};
    hill.foot_ratio = golden;
    hill.degenerate = true;
    return hill;
  }

  const auto bps = f.breakpoints();
  const auto pieces = f.pieces();
  const std::size_t first = f.piece_index(a, Limit::right);
  const std::size_t last = f.piece_index(b, Limit::left);
  const double slack = 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));

  double best_gap = std::numeric_limits<double>::infinity();
  bool found = false;
  auto consider = [&](double x) {
    x = std::clamp(x, a, b);
    const double fx = f(x);
    const double r = ratio_at(x, fx);
    const double gap = std::abs(r - golden);
    if (gap < best_gap || (gap == best_gap && x < hill.hilltop.x)) {
      best_gap = gap;
      hill.hilltop = {x, fx};
      hill.foot_ratio = r;
      found = true;
    }
  };

  for (std::size_t i = first; i <= last; ++i) {
    const Piece& p = pieces[i];
    const double lo = std::max(a, bps[i]);
    const double hi = std::min(b, bps[i + 1]);
    const double curvature = 2.0 * p.c;
    if (std::abs(curvature) * (hi - lo) <= 1e-12 * (1.0 + std::abs(slope) + std::abs(p.b))) {
      // Straight piece: a root everywhere if parallel to the chord, nowhere otherwise.
      if (std::abs(p.b - slope) > 1e-9 * (1.0 + std::abs(slope))) continue;
      const double r_lo = ratio_at(lo, f(lo));
      const double r_hi = ratio_at(hi, f(hi));
      if (r_hi != r_lo && (golden - r_lo) * (golden - r_hi) <= 0.0) {
        consider(lo + (golden - r_lo) / (r_hi - r_lo) * (hi - lo));
      } else {
        consider(std::abs(r_lo - golden) <= std::abs(r_hi - golden) ? lo : hi);
      }
      continue;
    }
    const double root = bps[i] + (slope - p.b) / curvature;
    if (root >= lo - slack && root <= hi + slack) consider(root);
  }

  if (!found) {
    throw Error(ErrorCode::no_hilltop, "no tangent parallel to the chord inside the interval");
  }
  return hill;
}

}  // namespace golden
