#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "golden/service.hpp"

#ifndef GOLDEN_DATA_DIR
#define GOLDEN_DATA_DIR "data/nodes"
#endif

namespace golden::cli {

namespace fs = std::filesystem;

namespace {

struct Figure {
  const char* name;
  const char* node_file;
  Method method;
  std::optional<Side> side;
  std::optional<AxisLine> axis;  // revolve for an OBJ
  std::optional<double> mirror;  // headboards are mirrored about x = 0
};

// Stumps revolve about the ground line, lights about y = 10, the vase about
// 16x - 17y - 66 = 0.
const std::vector<Figure>& figures() {
  static const std::vector<Figure> all = {
      {"stair", "b_nodes.json", Method::step, {}, AxisLine{0, 1, 0}, {}},
      {"stairG", "b_nodes.json", Method::golden_eq_step, {}, AxisLine{0, 1, 0}, {}},
      {"stairGE", "b_nodes.json", Method::golden_ext_step, {}, {}, {}},
      {"line", "c_nodes.json", Method::linear, {}, AxisLine{0, 1, -10}, {}},
      {"lineGE", "c_nodes.json", Method::golden_ext_linear, {}, AxisLine{0, 1, -10}, {}},
      {"lineG", "c_nodes.json", Method::golden_eq_linear, {}, AxisLine{0, 1, -10}, {}},
      {"vase", "d_nodes.json", Method::quadratic, {}, AxisLine{16, -17, -66}, {}},
      {"vaseGE", "d_nodes.json", Method::golden_ext_curve, Side::right, AxisLine{16, -17, -66}, {}},
      {"bed", "e_nodes.json", Method::quadratic, {}, {}, 0.0},
      {"bedGE", "e_nodes.json", Method::golden_ext_curve, Side::left, {}, 0.0},
  };
  return all;
}

class DomainFailure : public std::runtime_error {
 public:
  DomainFailure(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainFailure("IO_ERROR", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_artifact(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainFailure("IO_ERROR", "cannot write " + path);
  f << text;
}

Json load_json(const std::string& path) {
  Json doc = Json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::invalid_nodes, path + " is not valid JSON");
  return doc;
}

AxisLine parse_axis(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_param, "axis must be a,b,c");
    }
  }
  if (v.size() != 3) throw Error(ErrorCode::invalid_param, "axis must be a,b,c");
  AxisLine axis{v[0], v[1], v[2]};
  axis.validate();
  return axis;
}

struct Options {
  std::string method;
  std::string in;
  std::string out = "-";
  std::string format;
  std::optional<double> jump, q, k0, mirror;
  std::string side;
  std::string keep_mask;
  std::string axis;
  int m = 2;
  int samples = 200;
  int segments = 64;
  std::string variant = "all";
  bool averaged = false;
  std::string host;
  int port = -1;
  std::string figure = "all";
  std::string data_dir;
};

// The same request document the HTTP service takes.
Json build_request(const Options& o) {
  Json nodes_doc = load_json(o.in);
  Json request = {{"method", o.method}, {"sample_count", o.samples}};
  if (nodes_doc.is_array()) {
    request["nodes"] = nodes_doc;
  } else if (nodes_doc.is_object() && nodes_doc.contains("nodes")) {
    request["nodes"] = nodes_doc["nodes"];
    if (nodes_doc.contains("k0")) request["k0"] = nodes_doc["k0"];
  } else {
    throw Error(ErrorCode::invalid_nodes, "node file needs a node array or {\"nodes\": ...}");
  }
  if (o.k0) request["k0"] = *o.k0;
  Json params = Json::object();
  if (o.jump) params["L"] = *o.jump;
  if (o.q) params["q"] = *o.q;
  if (!o.side.empty()) params["side"] = o.side;
  if (!o.keep_mask.empty()) {
    Json mask = Json::array();
    for (char c : o.keep_mask) {
      if (c == '1') mask.push_back(true);
      else if (c == '0') mask.push_back(false);
      else if (c != ',') throw Error(ErrorCode::invalid_param, "keep-mask is a list of 0/1");
    }
    params["keep_mask"] = mask;
  }
  request["params"] = params;
  return request;
}

std::string export_text(const std::string& format, const Json& response, const Options& o) {
  ProfileExport profile = profile_from_json(response);
  profile.metadata["method"] = response.value("method", "");
  if (o.mirror) profile = mirror(profile, *o.mirror);
  if (format == "csv") return to_csv(profile);
  if (format == "svg") return to_svg(profile);
  if (format == "obj") {
    if (o.axis.empty()) throw Error(ErrorCode::invalid_param, "obj needs --axis a,b,c");
    return to_obj(revolve(profile, parse_axis(o.axis), o.segments));
  }
  return response.dump(2) + "\n";
}

std::string guess_format(const Options& o) {
  if (!o.format.empty()) return o.format;
  const std::string ext = fs::path(o.out).extension().string();
  if (ext == ".json") return "json";
  if (ext == ".svg") return "svg";
  if (ext == ".obj") return "obj";
  return "csv";
}

int cmd_interp(const Options& o, std::ostream& out) {
  const Json response = interpolate(build_request(o), o.m);
  write_artifact(o.out, export_text(guess_format(o), response, o), out);
  return 0;
}

int cmd_export(const std::string& format, const Options& o, std::ostream& out) {
  const Json response = interpolate(build_request(o), o.m);
  write_artifact(o.out, export_text(format, response, o), out);
  return 0;
}

int cmd_error(const Options& o, std::ostream& out) {
  const Json response = interpolate(build_request(o), o.m);
  std::optional<Variant> only;
  if (o.variant != "all") {
    only = parse_variant(o.variant);
    if (!only) throw Error(ErrorCode::invalid_param, "unknown variant " + o.variant);
  }
  Json reports = Json::array();
  for (const auto& r : response["error_reports"]) {
    if (r["averaged"].get<bool>() != o.averaged) continue;
    if (only && parse_variant(r["variant"].get<std::string>()) != only) continue;
    reports.push_back(r);
  }
  write_artifact(o.out, reports.dump(2) + "\n", out);
  return 0;
}

int cmd_serve(const Options& o, std::ostream& err) {
  ServiceConfig config = config_from_env();
  if (!o.host.empty()) config.host = o.host;
  if (o.port >= 0) config.port = o.port;
  Service service(config);
  const int port = service.bind();
  if (port < 0) throw DomainFailure("IO_ERROR", "cannot bind " + config.host);
  err << "listening on " << config.host << ':' << port << std::endl;
  return service.serve() ? 0 : 1;
}

int cmd_repro(const Options& o, std::ostream& out, std::ostream& err) {
  std::string data = o.data_dir;
  if (data.empty()) {
    const char* env = std::getenv("GOLDEN_DATA_DIR");
    data = env && *env ? env : GOLDEN_DATA_DIR;
  }
  std::vector<const Figure*> chosen;
  for (const Figure& f : figures()) {
    if (o.figure == "all" || o.figure == f.name) chosen.push_back(&f);
  }
  if (chosen.empty()) throw Error(ErrorCode::invalid_param, "unknown figure " + o.figure);
  if (o.out == "-") throw Error(ErrorCode::invalid_param, "repro writes a directory; give --out DIR");
  fs::create_directories(o.out);

  Json index = Json::object();
  for (const Figure* f : chosen) {
    Options fo = o;
    fo.method = std::string(to_string(f->method));
    fo.in = (fs::path(data) / f->node_file).string();
    fo.side = f->side ? std::string(to_string(*f->side)) : "";
    fo.mirror = f->mirror;
    const Json response = interpolate(build_request(fo), o.m);
    const fs::path base = fs::path(o.out) / f->name;
    write_artifact(base.string() + ".json", response.dump(2) + "\n", out);
    write_artifact(base.string() + ".csv", export_text("csv", response, fo), out);
    write_artifact(base.string() + ".svg", export_text("svg", response, fo), out);
    if (f->axis) {
      ProfileExport profile = profile_from_json(response);
      write_artifact(base.string() + ".obj", to_obj(revolve(profile, *f->axis, o.segments)), out);
    }
    index[f->name] = {{"nodes", f->node_file},
                      {"method", response["method"]},
                      {"transformed_nodes", response["transformed_nodes"]}};
    if (response.contains("accepted")) index[f->name]["accepted"] = response["accepted"];
    err << "wrote " << base.string() << ".*" << std::endl;
  }
  write_artifact((fs::path(o.out) / "repro.json").string(), index.dump(2) + "\n", out);
  return 0;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Figure& f : figures()) n.emplace_back(f.name);
    return n;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golden-section interpolation toolkit", "golden"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&o](CLI::App* sub) {
    sub->add_option("--method", o.method, "Interpolation method")->required();
    sub->add_option("--in", o.in, "Node file (JSON)")->required();
    sub->add_option("--out", o.out, "Output path, - for stdout");
    sub->add_option("--L", o.jump, "Jump for equal-height step intervals");
    sub->add_option("--q", o.q, "Hill height ratio for golden extension linear");
    sub->add_option("--k0", o.k0, "Start derivative");
    sub->add_option("--side", o.side, "left or right");
    sub->add_option("--keep-mask", o.keep_mask, "Curve node mask, e.g. 1,0,1");
    sub->add_option("--samples", o.samples, "Sample count")->check(CLI::Range(2, 100000));
    sub->add_option("--m", o.m, "Group size of the error bundle")->check(CLI::Range(2, 1 << 20));
  };
  auto add_export = [&o](CLI::App* sub) {
    sub->add_option("--mirror", o.mirror, "Mirror about x = value");
    sub->add_option("--axis", o.axis, "Rotation axis a,b,c of a x + b y + c = 0");
    sub->add_option("--segments", o.segments, "Revolve segments")->check(CLI::Range(3, 4096));
  };

  auto* interp = app.add_subcommand("interp", "Interpolate and write samples");
  add_input(interp);
  add_export(interp);
  interp->add_option("--format", o.format, "csv, json, svg or obj (default from --out)")
      ->check(CLI::IsMember({"csv", "json", "svg", "obj"}));

  auto* error = app.add_subcommand("error", "Golden error reports");
  add_input(error);
  error->add_option("--variant", o.variant, "left, right, mixed, left_right, right_left or all");
  error->add_flag("--averaged", o.averaged, "Averaged form");

  std::map<std::string, CLI::App*> exports;
  for (const char* fmt : {"svg", "obj", "csv"}) {
    auto* sub = app.add_subcommand(fmt, std::string("Write ") + fmt);
    add_input(sub);
    add_export(sub);
    exports[fmt] = sub;
  }

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", o.host, "Listen address (GOLDEN_HOST)");
  serve->add_option("--port", o.port, "Listen port (GOLDEN_PORT)")->check(CLI::Range(0, 65535));

  auto* repro = app.add_subcommand("repro", "Regenerate the reference figures' data");
  repro->add_option("--figure", o.figure, "Figure name or all");
  repro->add_option("--out", o.out, "Output directory")->required();
  repro->add_option("--data", o.data_dir, "Directory holding the node sets");
  repro->add_option("--samples", o.samples, "Sample count")->check(CLI::Range(2, 100000));
  repro->add_option("--segments", o.segments, "Revolve segments")->check(CLI::Range(3, 4096));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (interp->parsed()) return cmd_interp(o, out);
    if (error->parsed()) return cmd_error(o, out);
    for (const auto& [fmt, sub] : exports) {
      if (sub->parsed()) return cmd_export(fmt, o, out);
    }
    if (serve->parsed()) return cmd_serve(o, err);
    if (repro->parsed()) return cmd_repro(o, out, err);
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const MismatchError& e) {
    err << kMismatchCode << ": " << e.what() << "\n";
    return 1;
  } catch (const DomainFailure& e) {
    err << e.code() << ": " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "IO_ERROR: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace golden::cli
