#pragma once

#include "rmppa/bench.hpp"
#include "rmppa/solver.hpp"

#include <cstdint>
#include <string>

namespace rmppa {

/// Thrown by parse_config; message names the offending line and key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat run configuration. s is resolved at runtime as s_factor * lam_max / r.
struct Config {
  double theta = 0.5;
  double rho = 1.0;
  double r = 8.0;
  double s_factor = 1.01;
  double sigma = 1.4;
  double tol_it = 1e-4;
  double tol_eq = 1e-4;
  int max_iter = 50000;
  std::uint64_t seed = 1;
  Index m = 300;
  Index n = 1000;
  Index spikes = 18;
  double noise_std = 0.01;
  std::string preset;  // empty: plain rm_ppa with the configured parameters
  double preset_extra = 0.0;
  bool diagnostics = false;
  std::string out_dir = ".";

  SolverParams solver_params() const;  // s left at 0, resolved per instance
  StoppingSpec stopping() const;
  InstanceSpec instance_spec() const;
};

/// Parses "key = value" lines with '#' comments; unknown keys, unparseable
/// values and region-violating combinations are rejected.
Config parse_config(const std::string& text);

}  // namespace rmppa
