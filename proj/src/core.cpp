#include "golden/core.hpp"

#include <algorithm>
#include <string>

namespace golden {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_nodes: return "INVALID_NODES";
    case ErrorCode::missing_derivative: return "MISSING_DERIVATIVE";
    case ErrorCode::invalid_param: return "INVALID_PARAM";
    case ErrorCode::out_of_domain: return "OUT_OF_DOMAIN";
    case ErrorCode::degenerate_chord: return "DEGENERATE_CHORD";
    case ErrorCode::too_few_nodes: return "TOO_FEW_NODES";
    case ErrorCode::too_few_ratios: return "TOO_FEW_RATIOS";
    case ErrorCode::too_large: return "TOO_LARGE";
    case ErrorCode::no_hilltop: return "NO_HILLTOP";
    case ErrorCode::axis_cross: return "AXIS_CROSS";
    case ErrorCode::overlap: return "OVERLAP_ERROR";
  }
  return "UNKNOWN";
}

bool strictly_increasing(double a, double b) noexcept {
  return b - a > 1e-12 * std::max(1.0, std::abs(a));
}

NodeSequence::NodeSequence(std::vector<Node> nodes, std::optional<double> k0)
    : nodes_(std::move(nodes)), k0_(k0) {
  if (nodes_.size() < 2) {
    throw Error(ErrorCode::invalid_nodes, "at least two nodes are required");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i].x) || !std::isfinite(nodes_[i].y)) {
      throw Error(ErrorCode::invalid_nodes, "node " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !strictly_increasing(nodes_[i - 1].x, nodes_[i].x)) {
      throw Error(ErrorCode::invalid_nodes,
                  "abscissae must be strictly increasing at node " + std::to_string(i));
    }
  }
  if (k0_ && !std::isfinite(*k0_)) {
    throw Error(ErrorCode::invalid_nodes, "k0 is not finite");
  }
}

std::vector<double> NodeSequence::xs() const {
  std::vector<double> out(nodes_.size());
  std::transform(nodes_.begin(), nodes_.end(), out.begin(), [](const Node& n) { return n.x; });
  return out;
}

std::vector<double> NodeSequence::ys() const {
  std::vector<double> out(nodes_.size());
  std::transform(nodes_.begin(), nodes_.end(), out.begin(), [](const Node& n) { return n.y; });
  return out;
}

NodeSequence NodeSequence::with_k0(std::optional<double> k0) const {
  return NodeSequence(nodes_, k0);
}

PiecewiseFunction::PiecewiseFunction(int degree, std::vector<double> breakpoints,
                                     std::vector<Piece> pieces)
    : degree_(degree), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (degree_ < 0 || degree_ > 2) {
    throw Error(ErrorCode::invalid_param, "degree must be 0, 1 or 2");
  }
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorCode::invalid_param, "piece count must equal breakpoint count - 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw Error(ErrorCode::invalid_nodes, "breakpoints must be strictly increasing");
    }
  }
  auto close = [](double u, double v) {
    return std::abs(u - v) <= 1e-9 * (1.0 + std::max(std::abs(u), std::abs(v)));
  };
  for (std::size_t i = 1; i < pieces_.size() && degree_ > 0; ++i) {
    const auto& p = pieces_[i - 1];
    const double h = breakpoints_[i] - breakpoints_[i - 1];
    if (!close(p.a + h * (p.b + h * p.c), pieces_[i].a)) {
      throw Error(ErrorCode::invalid_param, "pieces disagree in value at breakpoint " +
                                                std::to_string(i));
    }
    if (degree_ == 2 && !close(p.b + 2.0 * p.c * h, pieces_[i].b)) {
      throw Error(ErrorCode::invalid_param, "pieces disagree in slope at breakpoint " +
                                                std::to_string(i));
    }
  }
}

std::size_t PiecewiseFunction::piece_index(double x, Limit limit) const {
  if (!(x >= lower() && x <= upper())) {
    throw Error(ErrorCode::out_of_domain, "x = " + std::to_string(x) + " is outside [" +
                                              std::to_string(lower()) + ", " +
                                              std::to_string(upper()) + "]");
  }
  const auto last = pieces_.size() - 1;
  // First breakpoint strictly greater than x; the piece to its left owns x.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  idx = idx == 0 ? 0 : idx - 1;
  if (limit == Limit::left && idx > 0 && x == breakpoints_[idx]) --idx;
  return std::min(idx, last);
}

double PiecewiseFunction::operator()(double x) const {
  const auto i = piece_index(x);
  const auto& p = pieces_[i];
  const double h = x - breakpoints_[i];
  return p.a + h * (p.b + h * p.c);
}

double PiecewiseFunction::derivative(double x, Limit limit) const {
  const auto i = piece_index(x, limit);
  const auto& p = pieces_[i];
  return p.b + 2.0 * p.c * (x - breakpoints_[i]);
}

double evaluate(const PiecewiseFunction& f, double x) { return f(x); }

double evaluate_derivative(const PiecewiseFunction& f, double x, Limit limit) {
  return f.derivative(x, limit);
}

PiecewiseFunction step_interpolate(const NodeSequence& seq) {
  const auto nodes = seq.nodes();
  std::vector<Piece> pieces;
  pieces.reserve(nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) pieces.push_back({nodes[i].y, 0.0, 0.0});
  return PiecewiseFunction(0, seq.xs(), std::move(pieces));
}

PiecewiseFunction linear_interpolate(const NodeSequence& seq) {
  const auto nodes = seq.nodes();
  std::vector<Piece> pieces;
  pieces.reserve(nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double slope = (nodes[i + 1].y - nodes[i].y) / (nodes[i + 1].x - nodes[i].x);
    pieces.push_back({nodes[i].y, slope, 0.0});
  }
  return PiecewiseFunction(1, seq.xs(), std::move(pieces));
}

PiecewiseFunction quadratic_spline_interpolate(const NodeSequence& seq) {
  if (!seq.k0()) {
    throw Error(ErrorCode::missing_derivative, "quadratic spline needs the start derivative k0");
  }
  const auto nodes = seq.nodes();
  std::vector<Piece> pieces;
  pieces.reserve(nodes.size() - 1);
  double d = *seq.k0();
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double h = nodes[i + 1].x - nodes[i].x;
    const double q = (nodes[i + 1].y - nodes[i].y) / h;
    pieces.push_back({nodes[i].y, d, (q - d) / h});
    d = 2.0 * q - d;
  }
  return PiecewiseFunction(2, seq.xs(), std::move(pieces));
}

}  // namespace golden
