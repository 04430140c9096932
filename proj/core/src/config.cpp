#include "ncosc/config.hpp"

#include <fstream>

#include "ncosc/errors.hpp"

namespace ncosc {

using nlohmann::json;

std::string to_string(EPMethod method) {
  switch (method) {
    case EPMethod::Auto: return "auto";
    case EPMethod::ChielliniExponential: return "chiellini_exponential";
    case EPMethod::ChielliniRational: return "chiellini_rational";
    case EPMethod::Pinney: return "pinney";
    case EPMethod::Numeric: return "numeric";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config." + path + ": " + what);
}

double get_number(const json& node, const std::string& path) {
  if (!node.is_number()) fail(path, "expected a number");
  return node.get<double>();
}

double get_number(const json& parent, const std::string& key, const std::string& path,
                  std::optional<double> fallback = std::nullopt) {
  if (!parent.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required field");
  }
  return get_number(parent.at(key), path + "." + key);
}

int get_int(const json& parent, const std::string& key, const std::string& path,
            std::optional<int> fallback = std::nullopt) {
  if (!parent.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required field");
  }
  const json& node = parent.at(key);
  if (!node.is_number_integer()) fail(path + "." + key, "expected an integer");
  return node.get<int>();
}

std::string get_string(const json& parent, const std::string& key,
                       const std::string& path,
                       std::optional<std::string> fallback = std::nullopt) {
  if (!parent.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required field");
  }
  const json& node = parent.at(key);
  if (!node.is_string()) fail(path + "." + key, "expected a string");
  return node.get<std::string>();
}

Complex get_complex(const json& parent, const std::string& key, const std::string& path,
                    Complex fallback) {
  if (!parent.contains(key)) return fallback;
  const json& node = parent.at(key);
  if (node.is_number()) return {node.get<double>(), 0.0};
  if (node.is_array() && node.size() == 2 && node[0].is_number() && node[1].is_number())
    return {node[0].get<double>(), node[1].get<double>()};
  fail(path + "." + key, "expected a number or [re, im] pair");
}

}  // namespace

TimeFamily parse_family(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
  const std::string family = get_string(node, "family", path);
  if (family == "constant")
    return TimeFamily::constant(get_number(node, "value", path));
  if (family == "exponential")
    return TimeFamily::exponential(get_number(node, "amplitude", path),
                                   get_number(node, "rate", path));
  if (family == "sinusoidal")
    return TimeFamily::sinusoidal(get_number(node, "amplitude", path),
                                  get_number(node, "rate", path));
  if (family == "power_law")
    return TimeFamily::power_law(
        get_number(node, "amplitude", path), get_number(node, "rate", path),
        get_number(node, "power", path), get_number(node, "mu", path));
  fail(path + ".family", "unknown family '" + family + "'");
}

json family_to_json(const TimeFamily& f) {
  switch (f.kind) {
    case TimeFamily::Kind::Constant:
      return {{"family", "constant"}, {"value", f.amplitude}};
    case TimeFamily::Kind::Exponential:
      return {{"family", "exponential"}, {"amplitude", f.amplitude}, {"rate", f.rate}};
    case TimeFamily::Kind::Sinusoidal:
      return {{"family", "sinusoidal"}, {"amplitude", f.amplitude}, {"rate", f.rate}};
    case TimeFamily::Kind::PowerLaw:
      return {{"family", "power_law"},
              {"amplitude", f.amplitude},
              {"rate", f.rate},
              {"power", f.power},
              {"mu", f.mu}};
  }
  return {};
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> ts(points);
  for (int i = 0; i < points; ++i)
    ts[i] = start + (stop - start) * i / (points - 1);
  return ts;
}

std::string AnalysisItem::name(std::size_t index) const {
  std::string base;
  switch (type) {
    case Type::Eigenstate:
      base = "eigenstate_n" + std::to_string(n) + "_m" + std::to_string(m);
      break;
    case Type::Glauber:
      base = "glauber";
      break;
    case Type::Squeezed:
      base = optimize ? "squeezed_opt_" + to_string(*optimize) : "squeezed";
      break;
    case Type::GaussianKlauder:
      base = "gk";
      break;
  }
  return "analysis_" + std::to_string(index) + "_" + base;
}

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig cfg;

  cfg.schema_version = get_int(doc, "schema_version", "", kConfigSchemaVersion);
  if (cfg.schema_version != kConfigSchemaVersion)
    fail("schema_version", "unsupported version " + std::to_string(cfg.schema_version));

  if (doc.contains("constants")) {
    const json& c = doc.at("constants");
    cfg.constants.m = get_number(c, "m", "constants", 1.0);
    cfg.constants.hbar = get_number(c, "hbar", "constants", 1.0);
    cfg.constants.omega = get_number(c, "omega", "constants", 1.0);
    cfg.constants.tau = get_number(c, "tau", "constants", 1.0);
  }
  try {
    cfg.constants.validate();
  } catch (const ConfigError& e) {
    fail("constants", e.what());
  }

  if (doc.contains("background")) {
    const json& b = doc.at("background");
    const std::string mode = get_string(b, "mode", "background", "theta_omega");
    Interval validity;
    if (b.contains("validity")) {
      const json& v = b.at("validity");
      if (!v.is_array() || v.size() != 2)
        fail("background.validity", "expected [lo, hi]");
      validity.lo = get_number(v[0], "background.validity[0]");
      validity.hi = get_number(v[1], "background.validity[1]");
    }
    if (mode == "theta_omega") {
      if (!b.contains("theta")) fail("background.theta", "missing required field");
      if (!b.contains("omega")) fail("background.omega", "missing required field");
      cfg.background = BackgroundSpec::theta_omega(
          parse_family(b.at("theta"), "background.theta"),
          parse_family(b.at("omega"), "background.omega"), cfg.constants, validity);
    } else if (mode == "direct_ab") {
      if (!b.contains("a")) fail("background.a", "missing required field");
      if (!b.contains("b")) fail("background.b", "missing required field");
      cfg.background = BackgroundSpec::direct_ab(
          parse_family(b.at("a"), "background.a"),
          parse_family(b.at("b"), "background.b"), cfg.constants, validity);
    } else {
      fail("background.mode", "expected 'theta_omega' or 'direct_ab'");
    }
  }

  if (doc.contains("ep")) {
    const json& e = doc.at("ep");
    const std::string method = get_string(e, "method", "ep", "auto");
    if (method == "auto")
      cfg.ep.method = EPMethod::Auto;
    else if (method == "chiellini_exponential")
      cfg.ep.method = EPMethod::ChielliniExponential;
    else if (method == "chiellini_rational")
      cfg.ep.method = EPMethod::ChielliniRational;
    else if (method == "pinney")
      cfg.ep.method = EPMethod::Pinney;
    else if (method == "numeric")
      cfg.ep.method = EPMethod::Numeric;
    else
      fail("ep.method", "unknown method '" + method + "'");
    cfg.ep.tolerance = get_number(e, "tolerance", "ep", 1e-10);
    if (!(cfg.ep.tolerance > 0 && cfg.ep.tolerance < 1e-2))
      fail("ep.tolerance", "expected a value in (0, 1e-2)");
    if (e.contains("ics")) {
      const json& ics = e.at("ics");
      if (!ics.is_array() || ics.size() != 2) fail("ep.ics", "expected [sigma0, dsigma0]");
      cfg.ep.ics = {get_number(ics[0], "ep.ics[0]"), get_number(ics[1], "ep.ics[1]")};
      if (!(cfg.ep.ics->first > 0)) fail("ep.ics[0]", "sigma0 must be > 0");
    }
    cfg.ep.alpha = get_number(e, "alpha", "ep", 0.0);
    cfg.ep.beta = get_number(e, "beta", "ep", 0.0);
    cfg.ep.gamma = get_number(e, "gamma", "ep", 0.0);
    cfg.ep.mu = get_number(e, "mu", "ep", 0.0);
    cfg.ep.c1 = get_number(e, "c1", "ep", 1.0);
    cfg.ep.n = get_int(e, "n", "ep", 1);
  }

  if (doc.contains("analysis")) {
    const json& list = doc.at("analysis");
    if (!list.is_array()) fail("analysis", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "analysis[" + std::to_string(i) + "]";
      const json& item = list[i];
      if (!item.is_object()) fail(path, "expected an object");
      const std::string type = get_string(item, "type", path);
      AnalysisItem a;
      if (type == "eigenstate") {
        a.type = AnalysisItem::Type::Eigenstate;
        a.n = get_int(item, "n", path);
        a.m = get_int(item, "m", path);
        if (a.n < 0 || a.m < 0) fail(path, "n and m must be >= 0");
      } else if (type == "glauber") {
        a.type = AnalysisItem::Type::Glauber;
        a.alpha = get_complex(item, "alpha", path, {0, 0});
      } else if (type == "squeezed") {
        a.type = AnalysisItem::Type::Squeezed;
        a.alpha = get_complex(item, "alpha", path, {0, 0});
        if (item.contains("optimize"))
          a.optimize = squeeze_target_from_string(get_string(item, "optimize", path));
        else
          a.beta = get_number(item, "beta", path);
      } else if (type == "gk") {
        a.type = AnalysisItem::Type::GaussianKlauder;
        a.gk.n = get_int(item, "n", path, 0);
        a.gk.m0 = get_number(item, "m0", path, 0.0);
        a.gk.phi0 = get_number(item, "phi0", path, 0.0);
        a.gk.s = get_number(item, "s", path);
        if (!(a.gk.s > 0)) fail(path + ".s", "s must be > 0");
        if (a.gk.m0 < 0) fail(path + ".m0", "m0 must be >= 0");
      } else {
        fail(path + ".type", "unknown analysis type '" + type + "'");
      }
      cfg.analysis.push_back(a);
    }
  }

  if (!doc.contains("t_grid")) fail("t_grid", "missing required field");
  {
    const json& g = doc.at("t_grid");
    cfg.t_grid.start = get_number(g, "start", "t_grid");
    cfg.t_grid.stop = get_number(g, "stop", "t_grid");
    cfg.t_grid.points = get_int(g, "points", "t_grid");
    if (!(cfg.t_grid.stop > cfg.t_grid.start))
      fail("t_grid", "stop must be greater than start");
    if (cfg.t_grid.points < 2) fail("t_grid.points", "need at least 2 points");
  }

  cfg.output = get_string(doc, "output", "", std::string("ncosc_out"));
  return cfg;
}

json load_config_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " + e.what());
  }
  return doc;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(load_config_json(path));
}

}  // namespace ncosc
