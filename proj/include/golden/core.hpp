#pragma once

// Domain types and the three traditional interpolants (degree 0, 1, 2).

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "golden/error.hpp"

namespace golden {

// Golden section ratio, the positive root of phi^2 + phi - 1 = 0.
inline constexpr double kPhi = 0.6180339887498949;

enum class Side { left, right };

// Parameter of the golden point of a unit interval measured from its left end:
// right -> phi, left -> 1 - phi.
constexpr double golden_parameter(Side side) noexcept {
  return side == Side::right ? kPhi : 1.0 - kPhi;
}

struct Node {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Node&, const Node&) = default;
};

// True when b - a is a strictly positive gap at the library's resolution,
// i.e. b - a > 1e-12 * max(1, |a|).
bool strictly_increasing(double a, double b) noexcept;

// Ordered interpolation nodes with strictly increasing abscissae and an
// optional start derivative. Always holds at least two nodes.
class NodeSequence {
 public:
  // Throws Error(invalid_nodes) on fewer than two nodes, non-finite values or
  // a non-increasing abscissa.
  explicit NodeSequence(std::vector<Node> nodes, std::optional<double> k0 = std::nullopt);

  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& operator[](std::size_t i) const { return nodes_[i]; }
  std::size_t size() const noexcept { return nodes_.size(); }
  // Number of intervals, n = size() - 1.
  std::size_t intervals() const noexcept { return nodes_.size() - 1; }
  std::optional<double> k0() const noexcept { return k0_; }

  std::vector<double> xs() const;
  std::vector<double> ys() const;

  NodeSequence with_k0(std::optional<double> k0) const;

 private:
  std::vector<Node> nodes_;
  std::optional<double> k0_;
};

// One piece in shifted-local form a + b (x - x_i) + c (x - x_i)^2.
struct Piece {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Which one-sided limit to take at an interior breakpoint.
enum class Limit { left, right };

// Piecewise polynomial of degree 0, 1 or 2 over [breakpoints.front(),
// breakpoints.back()]. Degree-0 pieces cover half-open [x_i, x_{i+1}); the
// final breakpoint belongs to the last piece.
class PiecewiseFunction {
 public:
  PiecewiseFunction(int degree, std::vector<double> breakpoints, std::vector<Piece> pieces);

  int degree() const noexcept { return degree_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const Piece> pieces() const noexcept { return pieces_; }
  double lower() const noexcept { return breakpoints_.front(); }
  double upper() const noexcept { return breakpoints_.back(); }

  // Index of the piece that owns x under the given limit. Throws
  // Error(out_of_domain) outside [lower(), upper()].
  std::size_t piece_index(double x, Limit limit = Limit::right) const;

  double operator()(double x) const;
  double derivative(double x, Limit limit = Limit::right) const;

 private:
  int degree_;
  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_;
};

double evaluate(const PiecewiseFunction& f, double x);
double evaluate_derivative(const PiecewiseFunction& f, double x, Limit limit = Limit::right);

// p(x) = y_i on [x_i, x_{i+1}); p(x_n) = y_{n-1}.
PiecewiseFunction step_interpolate(const NodeSequence& seq);

PiecewiseFunction linear_interpolate(const NodeSequence& seq);

// C1 quadratic spline with p'(x_0) = k0. Knot derivatives follow
// p'(x_{i+1}) = 2 q_i - p'(x_i), q_i the chord slope of interval i.
// Throws Error(missing_derivative) when seq.k0() is empty.
PiecewiseFunction quadratic_spline_interpolate(const NodeSequence& seq);

}  // namespace golden
