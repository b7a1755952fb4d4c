#include "golden/service.hpp"

#include <charconv>
#include <cstdlib>
#include <httplib.h>
#include <json.hpp>

#include "golden/version.hpp"

namespace golden {

namespace {

constexpr int kMaxSamples = 100000;

int int_field(const Json& request, const char* key, int fallback, int lo, int hi) {
  if (!request.contains(key) || request[key].is_null()) return fallback;
  const Json& v = request[key];
  if (!v.is_number_integer()) throw Error(ErrorCode::invalid_param, std::string(key) + " must be an integer");
  const auto value = v.get<long long>();
  if (value < lo || value > hi) {
    throw Error(ErrorCode::invalid_param,
                std::string(key) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(value);
}

int status_for(ErrorCode) { return 400; }

HttpResponse json_response(const Json& j) { return {200, "application/json", j.dump()}; }

template <class F>
HttpResponse guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return error_response(status_for(e.code()), error_code_name(e.code()), e.what());
  } catch (const MismatchError& e) {
    return error_response(422, kMismatchCode, e.what());
  } catch (const Json::exception& e) {
    return error_response(400, error_code_name(ErrorCode::invalid_param), e.what());
  }
}

Json parse_body(std::string_view body) {
  if (body.size() > kMaxBodyBytes) throw Error(ErrorCode::invalid_param, "request body exceeds 1 MiB");
  Json doc = Json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::invalid_param, "request body is not valid JSON");
  return doc;
}

AxisLine axis_from_json(const Json& j) {
  AxisLine axis;
  if (j.is_array() && j.size() == 3 && j[0].is_number() && j[1].is_number() && j[2].is_number()) {
    axis = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  } else if (j.is_object() && j.contains("a") && j.contains("b") && j.contains("c") &&
             j["a"].is_number() && j["b"].is_number() && j["c"].is_number()) {
    axis = {j["a"].get<double>(), j["b"].get<double>(), j["c"].get<double>()};
  } else {
    throw Error(ErrorCode::invalid_param, "axis must be [a, b, c] or {\"a\", \"b\", \"c\"}");
  }
  axis.validate();
  return axis;
}

}  // namespace

Json interpolate(const Json& request, int m) {
  if (!request.is_object()) throw Error(ErrorCode::invalid_param, "request must be a JSON object");
  if (!request.contains("method") || !request["method"].is_string()) {
    throw Error(ErrorCode::invalid_param, "request needs a \"method\" string");
  }
  const auto method = parse_method(request["method"].get<std::string>());
  if (!method) throw Error(ErrorCode::invalid_param, "unknown method");
  if (!request.contains("nodes")) throw Error(ErrorCode::invalid_nodes, "request needs \"nodes\"");

  Json node_doc = {{"nodes", request["nodes"]}};
  if (request.contains("k0")) node_doc["k0"] = request["k0"];
  const NodeSequence nodes = nodes_from_json(node_doc);
  const MethodParams params = params_from_json(request.value("params", Json()));
  if (const auto bad = mismatched_param(*method, params)) {
    throw MismatchError("method " + std::string(to_string(*method)) + " does not take parameter " +
                        std::string(*bad));
  }
  const int sample_count = int_field(request, "sample_count", 200, 2, kMaxSamples);

  const GoldenResult result = run_method(*method, nodes, params);
  const ProfileExport profile = make_profile(result, sample_count);

  Json out = {{"method", to_string(*method)}, {"params", params_to_json(*method, params)}};
  if (nodes.k0()) out["k0"] = *nodes.k0();
  out["sample_count"] = sample_count;
  out["samples"] = nodes_to_json(profile.samples);
  out.update(result_to_json(*method, result));
  Json reports = Json::array();
  for (const auto& r : error_bundle(*method, nodes, result, m)) reports.push_back(to_json(r));
  out["error_reports"] = reports;
  return out;
}

HttpResponse error_response(int status, std::string_view code, std::string_view message) {
  const Json body = {{"error", {{"code", code}, {"message", message}}}};
  return {status, "application/json", body.dump()};
}

HttpResponse handle_health() { return json_response({{"status", "ok"}, {"version", kVersion}}); }

HttpResponse handle_interpolate(std::string_view body, std::string_view m_query) {
  return guarded([&] {
    int m = 2;
    if (!m_query.empty()) {
      const auto [ptr, ec] = std::from_chars(m_query.data(), m_query.data() + m_query.size(), m);
      if (ec != std::errc() || ptr != m_query.data() + m_query.size() || m < 2) {
        throw Error(ErrorCode::invalid_param, "m must be an integer >= 2");
      }
    }
    return json_response(interpolate(parse_body(body), m));
  });
}

HttpResponse handle_export(std::string_view format, std::string_view body) {
  return guarded([&]() -> HttpResponse {
    const Json doc = parse_body(body);
    ProfileExport profile = profile_from_json(doc);
    if (doc.contains("mirror") && !doc["mirror"].is_null()) {
      if (!doc["mirror"].is_number()) throw Error(ErrorCode::invalid_param, "mirror must be a number");
      profile = mirror(profile, doc["mirror"].get<double>());
    }
    if (format == "csv") return {200, "text/csv", to_csv(profile)};
    if (format == "svg") {
      SvgOptions options;
      if (doc.contains("width") && doc["width"].is_number()) options.width = doc["width"].get<double>();
      if (!(options.width > 0.0)) throw Error(ErrorCode::invalid_param, "width must be positive");
      return {200, "image/svg+xml", to_svg(profile, options)};
    }
    if (format == "obj") {
      if (!doc.contains("axis")) throw Error(ErrorCode::invalid_param, "obj export needs an axis");
      const AxisLine axis = axis_from_json(doc["axis"]);
      const int segments = int_field(doc, "segments", 64, 3, 4096);
      return {200, "model/obj", to_obj(revolve(profile, axis, segments))};
    }
    throw Error(ErrorCode::invalid_param, "unknown export format");
  });
}

ServiceConfig config_from_env() {
  ServiceConfig config;
  if (const char* host = std::getenv("GOLDEN_HOST"); host && *host) config.host = host;
  if (const char* port = std::getenv("GOLDEN_PORT"); port && *port) config.port = std::atoi(port);
  return config;
}

struct Service::Impl {
  ServiceConfig config;
  httplib::Server server;
};

namespace {

void send(httplib::Response& res, const HttpResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  auto& s = impl_->server;
  s.set_payload_max_length(kMaxBodyBytes);
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Headers", "Content-Type"},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  s.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  s.Get("/v1/health", [](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
  s.Post("/v1/interpolate", [](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_interpolate(req.body, req.has_param("m") ? req.get_param_value("m") : ""));
  });
  s.Post(R"(/v1/export/(svg|obj|csv))", [](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_export(req.matches[1].str(), req.body));
  });
}

Service::~Service() { stop(); }

int Service::bind() {
  auto& c = impl_->config;
  if (c.port == 0) {
    c.port = impl_->server.bind_to_any_port(c.host);
    return c.port;
  }
  return impl_->server.bind_to_port(c.host, c.port) ? c.port : -1;
}

bool Service::serve() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace golden
