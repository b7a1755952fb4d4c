#include "golden/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "golden/kernels.hpp"

namespace golden {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ProfileExport sample(const PiecewiseFunction& f, int count) {
  if (count < 2) throw Error(ErrorCode::invalid_param, "sample count must be at least 2");
  const double lo = f.lower();
  const double hi = f.upper();
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count) + f.breakpoints().size());
  for (int k = 0; k < count; ++k) {
    xs.push_back(k == count - 1 ? hi : lo + (hi - lo) * k / (count - 1));
  }
  xs.insert(xs.end(), f.breakpoints().begin(), f.breakpoints().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> ys(xs.size());
  evaluate_many(f, xs, ys);

  ProfileExport out;
  out.samples.reserve(xs.size() + f.breakpoints().size());
  const auto bps = f.breakpoints();
  std::size_t next_bp = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (f.degree() == 0) {
      while (next_bp + 1 < bps.size() && bps[next_bp] < xs[i]) ++next_bp;
      if (next_bp + 1 < bps.size() && bps[next_bp] == xs[i]) {
        out.samples.push_back({xs[i], f.pieces()[next_bp - 1].a});
        ++next_bp;
      }
    }
    out.samples.push_back({xs[i], ys[i]});
  }
  out.metadata["degree"] = std::to_string(f.degree());
  return out;
}

ProfileExport make_profile(const GoldenResult& result, int count) {
  ProfileExport out = sample(result.function, count);
  const auto nodes = result.transformed.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const bool hilltop = std::find(result.hilltops.begin(), result.hilltops.end(), nodes[i]) !=
                         result.hilltops.end();
    if (hilltop) continue;
    if (result.provenance[i] == Provenance::added) {
      out.markers.added.push_back(nodes[i]);
    } else {
      out.markers.nodes.push_back(nodes[i]);
    }
  }
  out.markers.hilltops = result.hilltops;
  return out;
}

std::string to_csv(const ProfileExport& p) {
  std::string out = "x,y\n";
  for (const Node& s : p.samples) {
    out += format_double(s.x);
    out += ',';
    out += format_double(s.y);
    out += '\n';
  }
  return out;
}

namespace {

struct Box {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

Box bounds(const ProfileExport& p) {
  Box b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
        std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  auto take = [&b](const std::vector<Node>& pts) {
    for (const Node& n : pts) {
      b.x0 = std::min(b.x0, n.x);
      b.x1 = std::max(b.x1, n.x);
      b.y0 = std::min(b.y0, n.y);
      b.y1 = std::max(b.y1, n.y);
    }
  };
  take(p.samples);
  take(p.markers.nodes);
  take(p.markers.added);
  take(p.markers.hilltops);
  return b;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string to_svg(const ProfileExport& p, const SvgOptions& options) {
  if (p.samples.empty()) throw Error(ErrorCode::invalid_param, "profile has no samples");
  Box b = bounds(p);
  double w = b.x1 - b.x0;
  double h = b.y1 - b.y0;
  // A zero extent would make the drawing vanish; give it 10% of the other side.
  if (w <= 0.0 && h <= 0.0) w = h = 1.0;
  if (w <= 0.0) w = 0.1 * h;
  if (h <= 0.0) h = 0.1 * w;
  const double cx = 0.5 * (b.x0 + b.x1);
  const double cy = 0.5 * (b.y0 + b.y1);
  b = {cx - 0.5 * w, cx + 0.5 * w, cy - 0.5 * h, cy + 0.5 * h};

  constexpr double pad = 0.05;
  const double zoom = options.width / (w * (1.0 + 2.0 * pad));
  const double width = zoom * w * (1.0 + 2.0 * pad);
  const double height = zoom * h * (1.0 + 2.0 * pad);
  auto px = [&](double x) { return (x - b.x0 + pad * w) * zoom; };
  auto py = [&](double y) { return (b.y1 + pad * h - y) * zoom; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width)
      << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' '
      << fixed(height) << "\">\n";
  for (const auto& [key, value] : p.metadata) {
    svg << "<!-- " << key << ": " << value << " -->\n";
  }
  svg << "<path class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"";
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    svg << (i == 0 ? "M" : " L") << fixed(px(p.samples[i].x)) << ' ' << fixed(py(p.samples[i].y));
  }
  svg << "\"/>\n";

  const std::string r = fixed(options.marker_radius);
  for (const Node& n : p.markers.nodes) {
    svg << "<circle class=\"node\" cx=\"" << fixed(px(n.x)) << "\" cy=\"" << fixed(py(n.y))
        << "\" r=\"" << r << "\" fill=\"black\"/>\n";
  }
  for (const Node& n : p.markers.added) {
    svg << "<circle class=\"added\" cx=\"" << fixed(px(n.x)) << "\" cy=\"" << fixed(py(n.y))
        << "\" r=\"" << fixed(0.75 * options.marker_radius) << "\" fill=\"gray\"/>\n";
  }
  for (const Node& n : p.markers.hilltops) {
    svg << "<circle class=\"hilltop\" cx=\"" << fixed(px(n.x)) << "\" cy=\"" << fixed(py(n.y))
        << "\" r=\"" << r << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void AxisLine::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::invalid_param, "axis coefficients must be finite");
  }
  if (a == 0.0 && b == 0.0) throw Error(ErrorCode::invalid_param, "axis needs (a, b) != (0, 0)");
}

double AxisLine::signed_distance(const Node& p) const {
  return (a * p.x + b * p.y + c) / std::hypot(a, b);
}

TriangleMesh revolve(const ProfileExport& p, const AxisLine& axis, int segments) {
  axis.validate();
  if (p.samples.size() < 2) throw Error(ErrorCode::invalid_param, "revolve needs at least 2 samples");
  if (segments < 3) throw Error(ErrorCode::invalid_param, "revolve needs at least 3 segments");

  const double norm = std::hypot(axis.a, axis.b);
  const std::array<double, 2> u{axis.b / norm, -axis.a / norm};
  const std::array<double, 2> n{axis.a / norm, axis.b / norm};
  const std::array<double, 2> origin{-axis.c * n[0] / norm, -axis.c * n[1] / norm};

  const double first_side = axis.signed_distance(p.samples.front());
  for (const Node& s : p.samples) {
    const double d = axis.signed_distance(s);
    if (d == 0.0 || (d > 0.0) != (first_side > 0.0)) {
      throw Error(ErrorCode::axis_cross, "profile touches or crosses the rotation axis");
    }
  }

  TriangleMesh mesh;
  mesh.rings = p.samples.size();
  mesh.segments = static_cast<std::size_t>(segments);
  mesh.vertices.reserve(mesh.rings * mesh.segments);
  std::vector<double> cosines(mesh.segments), sines(mesh.segments);
  for (std::size_t j = 0; j < mesh.segments; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / segments;
    cosines[j] = j == 0 ? 1.0 : std::cos(theta);
    sines[j] = j == 0 ? 0.0 : std::sin(theta);
  }
  double along_first = 0.0, along_last = 0.0;
  for (std::size_t k = 0; k < mesh.rings; ++k) {
    const Node& s = p.samples[k];
    const double along = (s.x - origin[0]) * u[0] + (s.y - origin[1]) * u[1];
    const double dist = axis.signed_distance(s);
    if (k == 0) along_first = along;
    along_last = along;
    for (std::size_t j = 0; j < mesh.segments; ++j) {
      if (j == 0) {
        mesh.vertices.push_back({s.x, s.y, 0.0});
        continue;
      }
      const double r = dist * cosines[j];
      mesh.vertices.push_back({origin[0] + along * u[0] + r * n[0],
                               origin[1] + along * u[1] + r * n[1], dist * sines[j]});
    }
  }

  // With the axial coordinate increasing along the profile, (p00, p01, p11)
  // faces away from the axis; flip otherwise.
  const bool forward = along_last >= along_first;
  const auto segs = static_cast<std::uint32_t>(mesh.segments);
  mesh.faces.reserve(2 * (mesh.rings - 1) * mesh.segments);
  for (std::uint32_t k = 0; k + 1 < mesh.rings; ++k) {
    for (std::uint32_t j = 0; j < segs; ++j) {
      const std::uint32_t jn = (j + 1) % segs;
      const std::uint32_t p00 = k * segs + j, p01 = k * segs + jn;
      const std::uint32_t p10 = (k + 1) * segs + j, p11 = (k + 1) * segs + jn;
      if (forward) {
        mesh.faces.push_back({p00, p01, p11});
        mesh.faces.push_back({p00, p11, p10});
      } else {
        mesh.faces.push_back({p00, p11, p01});
        mesh.faces.push_back({p00, p10, p11});
      }
    }
  }
  return mesh;
}

std::string to_obj(const TriangleMesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 24);
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
    out += buf;
  }
  for (const auto& f : mesh.faces) {
    std::snprintf(buf, sizeof buf, "f %u %u %u\n", f[0] + 1, f[1] + 1, f[2] + 1);
    out += buf;
  }
  return out;
}

namespace {

std::vector<Node> reflected(const std::vector<Node>& pts, double about_x, bool reverse) {
  std::vector<Node> out;
  out.reserve(pts.size());
  for (const Node& n : pts) out.push_back({2.0 * about_x - n.x, n.y});
  if (reverse) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

ProfileExport reflect(const ProfileExport& p, double about_x) {
  ProfileExport out;
  out.samples = reflected(p.samples, about_x, true);
  out.markers.nodes = reflected(p.markers.nodes, about_x, true);
  out.markers.added = reflected(p.markers.added, about_x, true);
  out.markers.hilltops = reflected(p.markers.hilltops, about_x, true);
  out.metadata = p.metadata;
  return out;
}

ProfileExport mirror(const ProfileExport& p, double about_x) {
  if (p.samples.empty()) throw Error(ErrorCode::invalid_param, "profile has no samples");
  const double lo = p.samples.front().x;
  const double hi = p.samples.back().x;
  if (about_x > lo && about_x < hi) {
    throw Error(ErrorCode::overlap, "mirror line lies inside the profile");
  }
  const ProfileExport half = reflect(p, about_x);
  const bool left = about_x <= lo;
  const ProfileExport& first = left ? half : p;
  const ProfileExport& second = left ? p : half;

  auto join = [](const std::vector<Node>& a, const std::vector<Node>& b) {
    std::vector<Node> out = a;
    auto from = b.begin();
    if (!out.empty() && from != b.end() && out.back() == *from) ++from;
    out.insert(out.end(), from, b.end());
    return out;
  };
  ProfileExport out;
  out.samples = join(first.samples, second.samples);
  out.markers.nodes = join(first.markers.nodes, second.markers.nodes);
  out.markers.added = join(first.markers.added, second.markers.added);
  out.markers.hilltops = join(first.markers.hilltops, second.markers.hilltops);
  out.metadata = p.metadata;
  out.metadata["mirror"] = format_double(about_x);
  return out;
}

}  // namespace golden
