#include "mimem/config.hpp"

#include <set>

#include <json.hpp>

namespace mimem {

namespace {

using nlohmann::json;

// Wraps a JSON object and tracks which keys were consumed; any key left
// over at finish() is a strict-mode error.
class StrictObject {
public:
  StrictObject(const json& j, std::string context)
      : j_(j), context_(std::move(context)) {
    if (!j_.is_object()) {
      throw ConfigError("config: " + context_ + " must be an object");
    }
  }

  bool has(const std::string& key) {
    return j_.contains(key);
  }

  template <typename T>
  T require(const std::string& key) {
    if (!j_.contains(key)) {
      throw ConfigError("config: missing key '" + key + "' in " + context_);
    }
    return get<T>(key);
  }

  template <typename T>
  T get_or(const std::string& key, T fallback) {
    if (!j_.contains(key)) return fallback;
    return get<T>(key);
  }

  const json& raw(const std::string& key) {
    if (!j_.contains(key)) {
      throw ConfigError("config: missing key '" + key + "' in " + context_);
    }
    seen_.insert(key);
    return j_.at(key);
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) {
        throw ConfigError("config: unknown key '" + key + "' in " + context_);
      }
    }
  }

private:
  template <typename T>
  T get(const std::string& key) {
    seen_.insert(key);
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("config: bad value for '" + key + "' in " + context_ +
                        ": " + e.what());
    }
  }

  const json& j_;
  std::string context_;
  std::set<std::string> seen_;
};

std::size_t require_count(StrictObject& o, const std::string& key) {
  const long long v = o.require<long long>(key);
  if (v < 0) {
    throw ConfigError("config: '" + key + "' must be non-negative");
  }
  return static_cast<std::size_t>(v);
}

Scenario1D parse_scenario1d(const json& j) {
  StrictObject o(j, "document");
  Scenario1D sc;
  o.raw("kind");
  sc.m = require_count(o, "m");
  sc.order = o.get_or<int>("k", 2);
  sc.dt = o.require<double>("dt");
  sc.steps = o.require<long>("steps");
  sc.eps0 = o.get_or<double>("eps0", sc.eps0);
  sc.dz = o.get_or<double>("dz", sc.dz);
  sc.c0 = o.get_or<double>("c0", sc.c0);
  sc.snapshot_every =
      o.get_or<std::size_t>("snapshot_every", sc.snapshot_every);
  {
    StrictObject src(o.raw("source"), "source");
    sc.source.index = require_count(src, "index");
    sc.source.frequency = src.require<double>("frequency");
    sc.source.amplitude = src.require<double>("amplitude");
    src.finish();
  }
  if (o.has("slab")) {
    StrictObject slab(o.raw("slab"), "slab");
    SlabSpec s;
    s.start = require_count(slab, "start");
    s.eps_r = slab.require<double>("eps_r");
    s.sigma = slab.require<double>("sigma");
    slab.finish();
    sc.slab = s;
  } else {
    sc.slab.reset();  // absent key means vacuum, not the default slab
  }
  o.finish();
  sc.validate();
  return sc;
}

Scenario2D parse_scenario2d(const json& j, std::size_t* oracle_scale) {
  StrictObject o(j, "document");
  Scenario2D sc;
  o.raw("kind");
  sc.mx = require_count(o, "mx");
  sc.my = require_count(o, "my");
  sc.dx = o.require<double>("dx");
  sc.dy = o.require<double>("dy");
  sc.dt = o.require<double>("dt");
  sc.steps = o.require<long>("steps");
  sc.snapshot_steps =
      o.get_or<std::vector<long>>("snapshot_steps", sc.snapshot_steps);
  {
    StrictObject pulse(o.raw("pulse"), "pulse");
    sc.pulse.cx = pulse.require<double>("x");
    sc.pulse.cy = pulse.require<double>("y");
    sc.pulse.width = pulse.require<double>("width");
    pulse.finish();
  }
  if (o.has("pml")) {
    StrictObject pml(o.raw("pml"), "pml");
    PmlSpec p;
    p.depth = require_count(pml, "depth");
    p.sigma_max = pml.require<double>("sigma_max");
    p.p = pml.require<double>("p");
    pml.finish();
    sc.pml = p;
  } else {
    sc.pml.reset();
  }
  if (oracle_scale) {
    *oracle_scale = o.get_or<std::size_t>("oracle_scale", 3);
  }
  o.finish();
  sc.validate();
  return sc;
}

OpsDumpSpec parse_ops(const json& j) {
  StrictObject o(j, "document");
  OpsDumpSpec spec;
  o.raw("kind");
  spec.order = o.get_or<int>("k", 2);
  spec.m = require_count(o, "m");
  spec.dx = o.require<double>("dx");
  if (o.has("n")) {
    spec.n = require_count(o, "n");
    spec.dy = o.require<double>("dy");
  }
  const std::string target = o.require<std::string>("dump");
  if (target == "grad") {
    spec.target = OpsDumpTarget::Grad;
  } else if (target == "div") {
    spec.target = OpsDumpTarget::Div;
  } else if (target == "lap") {
    spec.target = OpsDumpTarget::Laplacian;
  } else {
    throw ConfigError("config: dump target must be grad, div, or lap");
  }
  o.finish();
  return spec;
}

}  // namespace

std::string to_string(RunKind kind) {
  switch (kind) {
    case RunKind::Yee1D: return "yee1d";
    case RunKind::Mimetic1D: return "mimetic1d";
    case RunKind::Mimetic2D: return "mimetic2d";
    case RunKind::OpsDump: return "ops-dump";
    case RunKind::PmlOracle: return "pml-oracle";
  }
  throw ConfigError("config: unhandled run kind");
}

RunKind run_kind_from_string(const std::string& s) {
  if (s == "yee1d") return RunKind::Yee1D;
  if (s == "mimetic1d") return RunKind::Mimetic1D;
  if (s == "mimetic2d") return RunKind::Mimetic2D;
  if (s == "ops-dump") return RunKind::OpsDump;
  if (s == "pml-oracle") return RunKind::PmlOracle;
  throw ConfigError("config: unknown kind '" + s + "'");
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("config: document must be an object with a 'kind' key");
  }

  RunConfig cfg;
  try {
    cfg.kind = run_kind_from_string(j.at("kind").get<std::string>());
    switch (cfg.kind) {
      case RunKind::Yee1D:
      case RunKind::Mimetic1D:
        cfg.scenario1d = parse_scenario1d(j);
        break;
      case RunKind::Mimetic2D:
        cfg.scenario2d = parse_scenario2d(j, nullptr);
        break;
      case RunKind::PmlOracle:
        cfg.scenario2d = parse_scenario2d(j, &cfg.oracle_scale);
        break;
      case RunKind::OpsDump:
        cfg.ops = parse_ops(j);
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: validation failed: ") + e.what());
  }
  return cfg;
}

std::string render(const RunConfig& config) {
  json j;
  j["kind"] = to_string(config.kind);
  if (config.kind == RunKind::Yee1D || config.kind == RunKind::Mimetic1D) {
    const Scenario1D& sc = *config.scenario1d;
    j["m"] = sc.m;
    j["k"] = sc.order;
    j["dt"] = sc.dt;
    j["steps"] = sc.steps;
    j["eps0"] = sc.eps0;
    j["dz"] = sc.dz;
    j["c0"] = sc.c0;
    j["snapshot_every"] = sc.snapshot_every;
    j["source"] = {{"index", sc.source.index},
                   {"frequency", sc.source.frequency},
                   {"amplitude", sc.source.amplitude}};
    if (sc.slab) {
      j["slab"] = {{"start", sc.slab->start},
                   {"eps_r", sc.slab->eps_r},
                   {"sigma", sc.slab->sigma}};
    }
  } else if (config.kind == RunKind::Mimetic2D ||
             config.kind == RunKind::PmlOracle) {
    const Scenario2D& sc = *config.scenario2d;
    j["mx"] = sc.mx;
    j["my"] = sc.my;
    j["dx"] = sc.dx;
    j["dy"] = sc.dy;
    j["dt"] = sc.dt;
    j["steps"] = sc.steps;
    j["snapshot_steps"] = sc.snapshot_steps;
    j["pulse"] = {{"x", sc.pulse.cx},
                  {"y", sc.pulse.cy},
                  {"width", sc.pulse.width}};
    if (sc.pml) {
      j["pml"] = {{"depth", sc.pml->depth},
                  {"sigma_max", sc.pml->sigma_max},
                  {"p", sc.pml->p}};
    }
    if (config.kind == RunKind::PmlOracle) {
      j["oracle_scale"] = config.oracle_scale;
    }
  } else {
    const OpsDumpSpec& ops = *config.ops;
    j["k"] = ops.order;
    j["m"] = ops.m;
    j["dx"] = ops.dx;
    if (ops.n) {
      j["n"] = *ops.n;
      j["dy"] = ops.dy;
    }
    switch (ops.target) {
      case OpsDumpTarget::Grad: j["dump"] = "grad"; break;
      case OpsDumpTarget::Div: j["dump"] = "div"; break;
      case OpsDumpTarget::Laplacian: j["dump"] = "lap"; break;
    }
  }
  return j.dump(2) + "\n";
}

RunConfig preset(const std::string& name) {
  RunConfig cfg;
  if (name == "sullivan-1d") {
    cfg.kind = RunKind::Mimetic1D;
    cfg.scenario1d = build_scenario_sullivan_1d();
  } else if (name == "sullivan-1d-yee") {
    cfg.kind = RunKind::Yee1D;
    cfg.scenario1d = build_scenario_sullivan_1d();
  } else if (name == "sullivan-2d-upml") {
    cfg.kind = RunKind::Mimetic2D;
    cfg.scenario2d = build_scenario_sullivan_2d_upml();
  } else if (name == "sullivan-2d-pml-oracle") {
    cfg.kind = RunKind::PmlOracle;
    cfg.scenario2d = build_scenario_sullivan_2d_upml();
  } else {
    throw ConfigError("config: unknown preset '" + name + "'");
  }
  return cfg;
}

}  // namespace mimem
