#pragma once

// Compares a `repro` output directory with the frozen oracle fixture.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace golden::support {

struct ReproCheck {
  bool ok = true;
  double max_diff = 0.0;
  std::string detail;
};

inline nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return nlohmann::json::parse(in);
}

inline ReproCheck compare_repro(const std::filesystem::path& dir, const std::filesystem::path& fixture,
                                double tol) {
  struct Pair {
    const char* figure;
    const char* set;
    const char* method;
  };
  static const Pair pairs[] = {{"stairG", "B", "golden_eq_step"},   {"stairGE", "B", "golden_ext_step"},
                               {"lineGE", "C", "golden_ext_linear"}, {"lineG", "C", "golden_eq_linear"},
                               {"vaseGE", "D", "golden_ext_curve"},  {"bedGE", "E", "golden_ext_curve"}};
  ReproCheck check;
  const auto expected = read_json(fixture);
  const auto index = read_json(dir / "repro.json");
  for (const Pair& p : pairs) {
    const auto& want = expected[p.set][p.method];
    if (!index.contains(p.figure)) {
      check.ok = false;
      check.detail += std::string(p.figure) + " missing; ";
      continue;
    }
    const auto& got = index[p.figure]["transformed_nodes"];
    if (got.size() != want.size()) {
      check.ok = false;
      check.detail += std::string(p.figure) + " node count; ";
      continue;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      const double dx = std::abs(got[i]["x"].get<double>() - want[i][0].get<double>());
      const double dy = std::abs(got[i]["y"].get<double>() - want[i][1].get<double>());
      check.max_diff = std::max({check.max_diff, dx, dy});
    }
    if (expected[p.set].contains("accepted") && index[p.figure]["accepted"] != expected[p.set]["accepted"]) {
      check.ok = false;
      check.detail += std::string(p.figure) + " accepted flags; ";
    }
  }
  if (!(check.max_diff <= tol)) {
    check.ok = false;
    std::ostringstream s;
    s << "max diff " << check.max_diff << "; ";
    check.detail += s.str();
  }
  return check;
}

}  // namespace golden::support
