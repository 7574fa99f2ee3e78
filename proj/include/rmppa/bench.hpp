#pragma once

#include "rmppa/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rmppa {

/// Sparse-recovery instance recipe: a spike signal measured by a
/// row-normalized Gaussian matrix under additive Gaussian noise.
struct InstanceSpec {
  Index m = 300;
  Index n = 1000;
  Index spikes = 18;
  double amplitude = 1.0;
  double noise_std = 0.01;
  std::uint64_t seed = 1;
};

/// b = A x_orig + v. Deterministic given the seed: spike positions come from
/// a seeded shuffle, signs, A entries (row-major) and noise from the same
/// stream, in that order.
ProblemInstance gen_instance(const InstanceSpec& spec);

/// |x - x_orig| / |x_orig|, Euclidean.
double recovery_error(const Vector& x, const Vector& x_orig);

struct SweepRow {
  double theta;
  int it = 0;
  double cpu_s = 0.0;
  double it_err = 0.0;
  double eq_err = 0.0;
  double re = 0.0;
  bool failed = false;
  std::string error_message;
};

/// One instance, one run per theta from (0,0); rows in input theta order.
std::vector<SweepRow> theta_sweep(const InstanceSpec& spec,
                                  const std::vector<double>& thetas,
                                  const SolverParams& base,
                                  const StoppingSpec& stopping);

struct CurveRecord {
  std::string label;
  struct Point {
    int k;
    double ler;  // log2(Eq_err(k))
    double lir;  // log2(It_err(k))
  };
  std::vector<Point> points;
  int iterations = 0;
  Termination termination = Termination::error;
  double final_re = 0.0;
  std::string error_message;
};

struct AlgorithmConfig {
  std::string label;
  Preset preset;
  double extra = 0.0;     // gamma for c_ppa, t for p_ppa
  double s_factor = 1.01; // s = s_factor * lam_max / r
};

/// Shared instance, identical start; per-algorithm LER/LIR curves.
std::vector<CurveRecord> compare_algorithms(
    const InstanceSpec& spec, const std::vector<AlgorithmConfig>& configs,
    const StoppingSpec& stopping, const SolverParams& base = {});

/// The standard four-way comparison: RM-PPA and M-PPA at s = 1.01 L / r,
/// C-PPA (gamma = 1.8) and P-PPA (t = -1) at s = 1.02 L / r.
std::vector<AlgorithmConfig> standard_comparison_configs();

// CSV writers. Table header "theta,it,cpu_s,it_err,eq_err,re"; curve header
// "k,ler,lir". Floats formatted %.6e.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_curve_csv(std::ostream& os, const CurveRecord& curve);

}  // namespace rmppa
