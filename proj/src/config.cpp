#include "rmppa/config.hpp"

#include <cstdlib>
#include <sstream>

namespace rmppa {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& key,
                       const std::string& why) {
  throw ConfigError("config line " + std::to_string(line) + ", key '" + key +
                    "': " + why);
}

double parse_double(int line, const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    fail(line, key, "not a number: '" + v + "'");
  }
  if (pos != v.size()) fail(line, key, "trailing characters in '" + v + "'");
  return out;
}

long long parse_int(int line, const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long long out;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    fail(line, key, "not an integer: '" + v + "'");
  }
  if (pos != v.size()) fail(line, key, "trailing characters in '" + v + "'");
  return out;
}

bool parse_bool(int line, const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(line, key, "not a boolean: '" + v + "'");
}

}  // namespace

SolverParams Config::solver_params() const {
  SolverParams p;
  p.theta = theta;
  p.rho = rho;
  p.r = r;
  p.s = 0.0;  // resolved as s_factor * lam_max / r once A is known
  p.sigma = sigma;
  return p;
}

StoppingSpec Config::stopping() const { return {tol_it, tol_eq, max_iter}; }

InstanceSpec Config::instance_spec() const {
  InstanceSpec spec;
  spec.m = m;
  spec.n = n;
  spec.spikes = spikes;
  spec.noise_std = noise_std;
  spec.seed = seed;
  return spec;
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + trim(raw) + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "theta") cfg.theta = parse_double(lineno, key, val);
    else if (key == "rho") cfg.rho = parse_double(lineno, key, val);
    else if (key == "r") cfg.r = parse_double(lineno, key, val);
    else if (key == "s_factor") cfg.s_factor = parse_double(lineno, key, val);
    else if (key == "sigma") cfg.sigma = parse_double(lineno, key, val);
    else if (key == "tol_it") cfg.tol_it = parse_double(lineno, key, val);
    else if (key == "tol_eq") cfg.tol_eq = parse_double(lineno, key, val);
    else if (key == "max_iter")
      cfg.max_iter = static_cast<int>(parse_int(lineno, key, val));
    else if (key == "seed")
      cfg.seed = static_cast<std::uint64_t>(parse_int(lineno, key, val));
    else if (key == "m") cfg.m = parse_int(lineno, key, val);
    else if (key == "n") cfg.n = parse_int(lineno, key, val);
    else if (key == "spikes") cfg.spikes = parse_int(lineno, key, val);
    else if (key == "noise_std") cfg.noise_std = parse_double(lineno, key, val);
    else if (key == "preset") {
      preset_from_name(val);  // validates the name
      cfg.preset = val;
    } else if (key == "preset_extra")
      cfg.preset_extra = parse_double(lineno, key, val);
    else if (key == "diagnostics") cfg.diagnostics = parse_bool(lineno, key, val);
    else if (key == "out_dir") cfg.out_dir = val;
    else
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
  }

  // Instance-independent region checks; r*s > lam_max is rechecked against
  // the concrete A by validate_params.
  if (!(cfg.rho <= 1.0))
    throw ConfigError("config: rho <= 1 required, got rho = " +
                      std::to_string(cfg.rho));
  if (!(cfg.sigma > 0.0 && cfg.sigma < 2.0))
    throw ConfigError("config: sigma in (0,2) required, got sigma = " +
                      std::to_string(cfg.sigma));
  if (!(cfg.r > 0.0))
    throw ConfigError("config: r > 0 required, got r = " +
                      std::to_string(cfg.r));
  if (!(cfg.s_factor > 1.0))
    throw ConfigError(
        "config: s_factor > 1 required so that r*s > lam_max(A^T A), got " +
        std::to_string(cfg.s_factor));
  if (!(cfg.tol_it > 0.0 && cfg.tol_eq > 0.0))
    throw ConfigError("config: tolerances must be positive");
  if (cfg.max_iter < 1) throw ConfigError("config: max_iter must be >= 1");
  if (cfg.m < 1 || cfg.n < 1 || cfg.spikes < 1 || cfg.spikes > cfg.n ||
      cfg.m > cfg.n)
    throw ConfigError("config: need 1 <= spikes <= n and m <= n");
  return cfg;
}

}  // namespace rmppa
