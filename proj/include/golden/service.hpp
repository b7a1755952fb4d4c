#pragma once

// Stateless HTTP JSON API. The handlers are plain functions of the request
// body so they can be exercised without a socket; Service wires them to
// cpp-httplib.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "golden/json_io.hpp"

namespace golden {

inline constexpr std::size_t kMaxBodyBytes = 1 << 20;

// A parameter supplied to a method that does not take it (HTTP 422).
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
inline constexpr std::string_view kMismatchCode = "METHOD_PARAM_MISMATCH";

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// {"method", "nodes", "k0"?, "params"?, "sample_count"?} -> response JSON.
// Throws Error or MismatchError.
Json interpolate(const Json& request, int m = 2);

HttpResponse handle_health();
// `m_query` is the raw query value of m; empty means 2.
HttpResponse handle_interpolate(std::string_view body, std::string_view m_query = {});
// format is "svg", "obj" or "csv".
HttpResponse handle_export(std::string_view format, std::string_view body);

// {"error": {"code": ..., "message": ...}}
HttpResponse error_response(int status, std::string_view code, std::string_view message);

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
};

// GOLDEN_HOST and GOLDEN_PORT override the defaults.
ServiceConfig config_from_env();

class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the socket; port 0 picks a free port. Returns the bound port or -1.
  int bind();
  // Blocks until stop().
  bool serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace golden
