#pragma once

// Sampled profiles of interpolants and the artifacts built from them: CSV,
// isotropic SVG plots, mirrored outlines and surfaces of revolution.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "golden/result.hpp"

namespace golden {

struct Markers {
  std::vector<Node> nodes;     // data nodes (original, moved or kept)
  std::vector<Node> added;     // inserted nodes that are not hilltops
  std::vector<Node> hilltops;  // drawn hollow
};

struct ProfileExport {
  std::vector<Node> samples;  // x nondecreasing
  Markers markers;
  std::map<std::string, std::string> metadata;
};

// `count` uniform abscissae over the domain merged with every breakpoint.
// Degree-0 functions get a left-limit sample (x, y_left) just before the
// sample at each interior breakpoint. Throws Error(invalid_param) for
// count < 2.
ProfileExport sample(const PiecewiseFunction& f, int count);

// Samples result.function and fills the markers from the provenance tags.
ProfileExport make_profile(const GoldenResult& result, int count);

// CSV with header "x,y", LF line endings, shortest round-trip decimals.
std::string to_csv(const ProfileExport& p);

struct SvgOptions {
  double width = 800.0;  // pixel width of the drawing; height follows isotropically
  double marker_radius = 4.0;
};

// SVG 1.1 with one data unit mapped to the same length on both axes.
std::string to_svg(const ProfileExport& p, const SvgOptions& options = {});

// a x + b y + c = 0.
struct AxisLine {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  // Throws Error(invalid_param) when (a, b) == (0, 0) or a value is not finite.
  void validate() const;
  double signed_distance(const Node& p) const;
};

struct TriangleMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;  // zero-based
  std::size_t rings = 0;
  std::size_t segments = 0;
};

// Revolves the samples about the axis embedded in the z = 0 plane. Frame:
// u = (b, -a) / |(a, b)| runs along the axis, n = (a, b) / |(a, b)| is the
// in-plane normal and e_z completes a right-handed (u, n, e_z). Sample p with
// axial coordinate s_u and signed distance s maps at angle theta_j = 2 pi j /
// segments to P0 + s_u u + s (cos theta_j n + sin theta_j e_z), so j = 0 is the
// profile itself. One ring per sample, each band split into two triangles per
// quad, wound counterclockwise seen from outside.
// Throws Error(axis_cross) when a sample touches or crosses the axis and
// Error(invalid_param) for fewer than 2 samples or segments < 3.
TriangleMesh revolve(const ProfileExport& p, const AxisLine& axis, int segments = 64);

// Wavefront OBJ, v/f records only, 9 significant digits.
std::string to_obj(const TriangleMesh& mesh);

// The profile reflected in the vertical line x = about_x, reversed so its
// samples stay x-ordered.
ProfileExport reflect(const ProfileExport& p, double about_x);

// Reflected half followed by the original (or the reverse when about_x lies
// to the right), with a shared seam sample kept once. Throws Error(overlap)
// when about_x lies strictly inside the sampled x-range.
ProfileExport mirror(const ProfileExport& p, double about_x);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace golden
