#include "golden/golden_linear.hpp"

namespace golden {

double cuspidal_ratio(const Node& a, const Node& b, const Node& c) {
  const double cx = c.x - a.x;
  const double cy = c.y - a.y;
  const double len2 = cx * cx + cy * cy;
  if (len2 == 0.0) throw Error(ErrorCode::degenerate_chord, "chord endpoints coincide");
  return (cy * (b.y - a.y) + cx * (b.x - a.x)) / len2;
}

CuspidalHill make_cuspidal_hill(const Node& a, const Node& b, const Node& c) {
  const double t = cuspidal_ratio(a, b, c);
  return {a, b, c, {a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)}, t};
}

namespace {

Node place_hilltop(const Node& a, const Node& b, double f, double q) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double k = dy / dx;
  if (std::abs(k) >= 1.0) return {a.x + dx * f + q * dy, a.y + dy * f - q * dx};
  return {a.x + dx * f - q * dy, a.y + dy * f + q * dx};
}

}  // namespace

GoldenResult golden_extension_linear(const NodeSequence& seq, const LinearParams& params) {
  if (!(params.q > 0.0 && params.q < 0.5)) {
    throw Error(ErrorCode::invalid_param, "q must lie in (0, 0.5)");
  }
  const double f = golden_parameter(params.side);
  const auto nodes = seq.nodes();

  std::vector<Node> out{nodes[0]};
  std::vector<Provenance> prov{Provenance::original};
  std::vector<Node> hilltops;
  std::vector<Outcome> outcomes;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& a = nodes[i];
    const Node& b = nodes[i + 1];
    const double t = 0.5 * (1.0 - kPhi) * (b.x - a.x);
    Node top = place_hilltop(a, b, f, params.q);
    Outcome outcome = Outcome::applied;
    if (!(top.x >= a.x + t && top.x <= b.x - t)) {
      // Only reachable with y_i != y_{i+1}: a flat chord keeps the foot's abscissa.
      top = place_hilltop(a, b, f, t / std::abs(b.y - a.y));
      outcome = Outcome::revised;
    }
    out.push_back(top);
    out.push_back(b);
    prov.push_back(Provenance::added);
    prov.push_back(Provenance::original);
    hilltops.push_back(top);
    outcomes.push_back(outcome);
  }

  NodeSequence transformed(std::move(out), seq.k0());
  auto fn = linear_interpolate(transformed);
  return GoldenResult{std::move(transformed), std::move(prov), std::move(fn),
                      std::move(hilltops), std::move(outcomes)};
}

GoldenResult golden_equal_number_linear(const NodeSequence& seq, const LinearParams&) {
  std::vector<Node> out(seq.nodes().begin(), seq.nodes().end());
  std::vector<Provenance> prov(out.size(), Provenance::original);
  std::vector<Node> hilltops;
  std::vector<Outcome> outcomes;

  const std::size_t n = seq.intervals();
  for (std::size_t i = 1; n >= 2 && i <= n / 2; ++i) {
    const Node a = out[2 * i - 2];
    const Node b = out[2 * i - 1];
    const Node c = out[2 * i];
    prov[2 * i - 1] = Provenance::kept;

    // a. foot P of b on the chord ac
    const double k = (c.y - a.y) / (c.x - a.x);
    const double xp = (k * (b.y - a.y) + k * k * a.x + b.x) / (1.0 + k * k);
    if (!(xp > a.x && xp < c.x)) {
      outcomes.push_back(Outcome::kept);
      continue;
    }

    // b. golden point H nearer P; ties at the midpoint anchor H on c
    const double xz = 0.5 * (a.x + c.x);
    Node h;
    if (xp > xz) {
      h = {a.x + (c.x - a.x) * kPhi, a.y + (c.y - a.y) * kPhi};
    } else {
      h = {c.x - (c.x - a.x) * kPhi, c.y - (c.y - a.y) * kPhi};
    }

    // c. extend the segment on the far side of H through b and meet the
    //    perpendicular to ac at H
    const double slope = h.x > xp ? (b.y - a.y) / (b.x - a.x) : (b.y - c.y) / (b.x - c.x);
    const double den = 1.0 + slope * k;
    if (std::abs(den) <= 1e-12 * std::max(1.0, std::abs(slope * k))) {
      outcomes.push_back(Outcome::degenerate);
      continue;
    }
    const Node moved{(h.x + k * (slope * b.x + h.y - b.y)) / den,
                     (b.y + slope * (k * h.y + h.x - b.x)) / den};

    // d. keep b unless the new abscissa stays strictly inside (x_a, x_c)
    if (!(std::isfinite(moved.x) && std::isfinite(moved.y) && moved.x > a.x &&
          moved.x < c.x && strictly_increasing(a.x, moved.x) &&
          strictly_increasing(moved.x, c.x))) {
      outcomes.push_back(Outcome::kept);
      continue;
    }
    out[2 * i - 1] = moved;
    prov[2 * i - 1] = Provenance::moved;
    hilltops.push_back(moved);
    outcomes.push_back(Outcome::applied);
  }

  NodeSequence transformed(std::move(out), seq.k0());
  auto fn = linear_interpolate(transformed);
  return GoldenResult{std::move(transformed), std::move(prov), std::move(fn),
                      std::move(hilltops), std::move(outcomes)};
}

}  // namespace golden
