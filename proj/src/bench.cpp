#include "rmppa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace rmppa {

ProblemInstance gen_instance(const InstanceSpec& spec) {
  if (spec.m < 1 || spec.n < 1 || spec.spikes < 1)
    throw std::invalid_argument("gen_instance: m, n, spikes must be positive");
  if (spec.spikes > spec.n)
    throw std::invalid_argument("gen_instance: spikes > n");
  if (spec.m > spec.n)
    throw std::invalid_argument("gen_instance: m > n");

  SeededRng rng(spec.seed);

  // Spike positions: partial Fisher-Yates over 0..n-1.
  std::vector<Index> idx(spec.n);
  std::iota(idx.begin(), idx.end(), Index{0});
  for (Index i = 0; i < spec.spikes; ++i) {
    const Index j =
        i + static_cast<Index>(rng.uniform_below(spec.n - i));
    std::swap(idx[i], idx[j]);
  }

  Vector x_orig = Vector::Zero(spec.n);
  for (Index i = 0; i < spec.spikes; ++i)
    x_orig[idx[i]] =
        rng.uniform() < 0.5 ? -spec.amplitude : spec.amplitude;

  Matrix A(spec.m, spec.n);
  for (Index i = 0; i < spec.m; ++i)
    for (Index j = 0; j < spec.n; ++j) A(i, j) = rng.normal();
  A.rowwise().normalize();

  Vector b = A * x_orig;
  if (spec.noise_std > 0.0)
    b += normal_sample(rng, spec.m, 0.0, spec.noise_std);

  ProblemInstance problem;
  problem.objective = ObjectiveSpec::l1();
  problem.A = std::move(A);
  problem.b = std::move(b);
  problem.set = FeasibleSetSpec::all_space();
  problem.x_orig = std::move(x_orig);
  return problem;
}

double recovery_error(const Vector& x, const Vector& x_orig) {
  if (x.size() != x_orig.size())
    throw DimensionError("recovery_error: dims differ");
  const double denom = x_orig.norm();
  if (denom == 0.0)
    throw std::invalid_argument("recovery_error: x_orig is zero");
  return (x - x_orig).norm() / denom;
}

std::vector<SweepRow> theta_sweep(const InstanceSpec& spec,
                                  const std::vector<double>& thetas,
                                  const SolverParams& base,
                                  const StoppingSpec& stopping) {
  const ProblemInstance problem = gen_instance(spec);
  const SolverParams validated = validate_params(base, problem.A);

  std::vector<SweepRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    SweepRow row;
    row.theta = theta;
    SolverParams params = validated;
    params.theta = theta;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const RunHistory hist = run(problem, params, stopping);
      row.cpu_s = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      if (hist.termination == Termination::error) {
        row.failed = true;
        row.error_message = hist.error_message;
      } else {
        const IterRecord& last = hist.records.back();
        row.it = hist.iterations;
        row.it_err = last.it_err;
        row.eq_err = last.eq_err;
        row.re = last.re.value_or(0.0);
      }
    } catch (const std::exception& e) {
      row.failed = true;
      row.error_message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AlgorithmConfig> standard_comparison_configs() {
  return {{"rm_ppa", Preset::rm_ppa, 0.0, 1.01},
          {"m_ppa", Preset::m_ppa, 0.0, 1.01},
          {"c_ppa", Preset::c_ppa, 1.8, 1.02},
          {"p_ppa", Preset::p_ppa, -1.0, 1.02}};
}

std::vector<CurveRecord> compare_algorithms(
    const InstanceSpec& spec, const std::vector<AlgorithmConfig>& configs,
    const StoppingSpec& stopping, const SolverParams& base) {
  const ProblemInstance problem = gen_instance(spec);
  const double lam_max = spectral_norm_sq(problem.A);

  std::vector<CurveRecord> curves;
  curves.reserve(configs.size());
  for (const AlgorithmConfig& cfg : configs) {
    CurveRecord curve;
    curve.label = cfg.label;
    try {
      SolverParams params = base;
      params.s = cfg.s_factor * lam_max / params.r;
      params = preset(cfg.preset, params, cfg.extra);
      params = validate_params(params, problem.A);
      const RunHistory hist = run(problem, params, stopping);
      curve.termination = hist.termination;
      curve.iterations = hist.iterations;
      curve.error_message = hist.error_message;
      for (const IterRecord& rec : hist.records)
        curve.points.push_back(
            {rec.k, std::log2(rec.eq_err), std::log2(rec.it_err)});
      if (!hist.records.empty())
        curve.final_re = hist.records.back().re.value_or(0.0);
    } catch (const std::exception& e) {
      curve.termination = Termination::error;
      curve.error_message = e.what();
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "theta,it,cpu_s,it_err,eq_err,re\n";
  char buf[200];
  for (const SweepRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.6e,%d,%.6e,%.6e,%.6e,%.6e\n", row.theta,
                  row.it, row.cpu_s, row.it_err, row.eq_err, row.re);
    os << buf;
  }
}

void write_curve_csv(std::ostream& os, const CurveRecord& curve) {
  os << "k,ler,lir\n";
  char buf[120];
  for (const CurveRecord::Point& p : curve.points) {
    std::snprintf(buf, sizeof(buf), "%d,%.6e,%.6e\n", p.k, p.ler, p.lir);
    os << buf;
  }
}

}  // namespace rmppa
