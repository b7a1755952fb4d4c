#include "golden/json_io.hpp"

#include <json.hpp>

namespace golden {

namespace {

Node node_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object() && j.contains("x") && j.contains("y") && j["x"].is_number() &&
      j["y"].is_number()) {
    return {j["x"].get<double>(), j["y"].get<double>()};
  }
  throw Error(ErrorCode::invalid_nodes, "a node must be [x, y] or {\"x\": x, \"y\": y}");
}

std::vector<Node> node_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::invalid_nodes, std::string(what) + " must be an array");
  std::vector<Node> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(node_from_json(e));
  return out;
}

Json node_json(const Node& n) { return Json::array({n.x, n.y}); }

}  // namespace

NodeSequence nodes_from_json(const Json& doc) {
  if (doc.is_array()) return NodeSequence(node_list(doc, "nodes"));
  if (!doc.is_object() || !doc.contains("nodes")) {
    throw Error(ErrorCode::invalid_nodes, "expected a node array or an object with \"nodes\"");
  }
  std::optional<double> k0;
  if (doc.contains("k0") && !doc["k0"].is_null()) {
    if (!doc["k0"].is_number()) throw Error(ErrorCode::invalid_param, "k0 must be a number");
    k0 = doc["k0"].get<double>();
  }
  return NodeSequence(node_list(doc["nodes"], "nodes"), k0);
}

Json nodes_to_json(std::span<const Node> nodes) {
  Json out = Json::array();
  for (const Node& n : nodes) out.push_back(node_json(n));
  return out;
}

Json to_json(const NodeSequence& seq) {
  Json out = {{"nodes", nodes_to_json(seq.nodes())}};
  if (seq.k0()) out["k0"] = *seq.k0();
  return out;
}

MethodParams params_from_json(const Json& params) {
  MethodParams out;
  if (params.is_null()) return out;
  if (!params.is_object()) throw Error(ErrorCode::invalid_param, "params must be an object");
  for (const auto& [key, value] : params.items()) {
    if (value.is_null()) continue;
    if (key == "L") {
      if (!value.is_number()) throw Error(ErrorCode::invalid_param, "L must be a number");
      out.jump = value.get<double>();
    } else if (key == "q") {
      if (!value.is_number()) throw Error(ErrorCode::invalid_param, "q must be a number");
      out.q = value.get<double>();
    } else if (key == "side") {
      const auto side = value.is_string() ? parse_side(value.get<std::string>()) : std::nullopt;
      if (!side) throw Error(ErrorCode::invalid_param, "side must be \"left\" or \"right\"");
      out.side = side;
    } else if (key == "keep_mask") {
      if (!value.is_array()) throw Error(ErrorCode::invalid_param, "keep_mask must be an array");
      std::vector<bool> mask;
      for (const auto& b : value) {
        if (!b.is_boolean()) throw Error(ErrorCode::invalid_param, "keep_mask holds booleans");
        mask.push_back(b.get<bool>());
      }
      out.keep_mask = std::move(mask);
    } else {
      throw Error(ErrorCode::invalid_param, "unknown parameter \"" + key + "\"");
    }
  }
  return out;
}

Json params_to_json(Method method, const MethodParams& params) {
  Json out = Json::object();
  for (std::string_view name : accepted_params(method)) {
    if (name == "L") out["L"] = params.jump.value_or(1.0);
    if (name == "q") out["q"] = params.q.value_or(0.2);
    if (name == "side") out["side"] = to_string(params.side.value_or(default_side(method)));
    if (name == "keep_mask") {
      out["keep_mask"] = params.keep_mask ? Json(*params.keep_mask) : Json(nullptr);
    }
  }
  return out;
}

Json to_json(const GoldenErrorReport& report) {
  return {{"variant", to_string(report.spec.variant)},
          {"m", report.spec.m},
          {"form", report.spec.form == Form::squared ? "squared" : "absolute"},
          {"averaged", report.spec.averaged},
          {"value", report.value},
          {"count", report.count},
          {"ratios", report.ratios},
          {"targets", report.targets},
          {"positions", report.positions}};
}

Json result_to_json(Method method, const GoldenResult& result) {
  Json nodes = Json::array();
  Json provenance = Json::array();
  for (std::size_t i = 0; i < result.transformed.size(); ++i) {
    const Node& n = result.transformed[i];
    nodes.push_back({{"x", n.x}, {"y", n.y}, {"provenance", to_string(result.provenance[i])}});
    provenance.push_back(to_string(result.provenance[i]));
  }
  Json outcomes = Json::array();
  Json accepted = Json::array();
  for (Outcome o : result.outcomes) {
    outcomes.push_back(to_string(o));
    accepted.push_back(o == Outcome::applied);
  }
  Json out = {{"transformed", nodes_to_json(result.transformed.nodes())},
              {"provenance", provenance},
              {"transformed_nodes", nodes},
              {"hilltops", nodes_to_json(result.hilltops)},
              {"outcomes", outcomes}};
  if (method == Method::golden_ext_curve) out["accepted"] = accepted;
  return out;
}

Json to_json(const ProfileExport& profile) {
  return {{"samples", nodes_to_json(profile.samples)},
          {"markers",
           {{"nodes", nodes_to_json(profile.markers.nodes)},
            {"added", nodes_to_json(profile.markers.added)},
            {"hilltops", nodes_to_json(profile.markers.hilltops)}}},
          {"metadata", profile.metadata}};
}

ProfileExport profile_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("samples")) {
    throw Error(ErrorCode::invalid_param, "profile needs \"samples\"");
  }
  ProfileExport out;
  out.samples = node_list(doc["samples"], "samples");
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    if (out.samples[i].x < out.samples[i - 1].x) {
      throw Error(ErrorCode::invalid_nodes, "samples must be ordered by x");
    }
  }
  if (doc.contains("markers") && doc["markers"].is_object()) {
    const Json& m = doc["markers"];
    if (m.contains("nodes")) out.markers.nodes = node_list(m["nodes"], "markers.nodes");
    if (m.contains("added")) out.markers.added = node_list(m["added"], "markers.added");
    if (m.contains("hilltops")) out.markers.hilltops = node_list(m["hilltops"], "markers.hilltops");
  } else {
    if (doc.contains("hilltops")) out.markers.hilltops = node_list(doc["hilltops"], "hilltops");
    if (doc.contains("transformed_nodes") && doc["transformed_nodes"].is_array()) {
      for (const auto& t : doc["transformed_nodes"]) {
        const Node n = node_from_json(t);
        if (std::find(out.markers.hilltops.begin(), out.markers.hilltops.end(), n) !=
            out.markers.hilltops.end()) {
          continue;
        }
        const bool added = t.is_object() && t.value("provenance", "") == "added";
        (added ? out.markers.added : out.markers.nodes).push_back(n);
      }
    }
  }
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    for (const auto& [k, v] : doc["metadata"].items()) {
      if (v.is_string()) out.metadata[k] = v.get<std::string>();
    }
  }
  return out;
}

}  // namespace golden
