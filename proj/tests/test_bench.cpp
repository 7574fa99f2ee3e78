#include "rmppa/bench.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace rmppa;

namespace {

InstanceSpec small_spec() {
  InstanceSpec spec;
  spec.m = 60;
  spec.n = 200;
  spec.spikes = 5;
  spec.noise_std = 0.01;
  spec.seed = 7;
  return spec;
}

SolverParams tuned_base(const Matrix& A) {
  SolverParams p;
  p.r = 8.0;
  p.s = 1.01 * spectral_norm_sq(A) / p.r;
  return p;
}

}  // namespace

TEST_CASE("gen_instance rows are unit norm") {
  const ProblemInstance prob = gen_instance(small_spec());
  for (Index i = 0; i < prob.m(); ++i)
    CHECK(std::abs(prob.A.row(i).norm() - 1.0) <= 1e-12);
}

TEST_CASE("gen_instance with zero noise is exactly consistent") {
  InstanceSpec spec = small_spec();
  spec.noise_std = 0.0;
  const ProblemInstance prob = gen_instance(spec);
  CHECK((prob.A * *prob.x_orig - prob.b).norm() == 0.0);
}

TEST_CASE("gen_instance spike count and magnitudes") {
  const ProblemInstance prob = gen_instance(small_spec());
  int nonzeros = 0;
  for (Index i = 0; i < prob.n(); ++i) {
    const double v = (*prob.x_orig)[i];
    if (v != 0.0) {
      ++nonzeros;
      CHECK(std::abs(v) == 1.0);
    }
  }
  CHECK(nonzeros == 5);
}

TEST_CASE("gen_instance determinism and seed sensitivity") {
  const ProblemInstance a = gen_instance(small_spec());
  const ProblemInstance b = gen_instance(small_spec());
  CHECK(a.A == b.A);
  CHECK(a.b == b.b);
  CHECK(*a.x_orig == *b.x_orig);
  InstanceSpec other = small_spec();
  other.seed = 8;
  CHECK(gen_instance(other).A != a.A);
}

TEST_CASE("gen_instance rejects inconsistent shapes") {
  InstanceSpec spec = small_spec();
  spec.spikes = spec.n + 1;
  CHECK_THROWS(gen_instance(spec));
  spec = small_spec();
  spec.m = spec.n + 1;
  CHECK_THROWS(gen_instance(spec));
}

TEST_CASE("recovery_error basics") {
  Vector x(3);
  x << 1.0, 0.0, -1.0;
  CHECK(recovery_error(x, x) == 0.0);
  CHECK(recovery_error(Vector::Zero(3), x) == 1.0);
  CHECK(recovery_error(2.0 * x, x) == doctest::Approx(1.0));
  CHECK_THROWS(recovery_error(x, Vector::Zero(3)));
}

TEST_CASE("theta_sweep single row equals a direct run summary") {
  const InstanceSpec spec = small_spec();
  const ProblemInstance prob = gen_instance(spec);
  const SolverParams base = tuned_base(prob.A);
  const StoppingSpec stop;

  const auto rows = theta_sweep(spec, {0.5}, base, stop);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].failed);

  SolverParams p = validate_params(base, prob.A);
  p.theta = 0.5;
  const RunHistory direct = run(prob, p, stop);
  CHECK(rows[0].it == direct.iterations);
  CHECK(rows[0].it_err == direct.records.back().it_err);
  CHECK(rows[0].eq_err == direct.records.back().eq_err);
  CHECK(rows[0].re == direct.records.back().re.value());
}

TEST_CASE("theta_sweep rows are independent of grid order") {
  const InstanceSpec spec = small_spec();
  const ProblemInstance prob = gen_instance(spec);
  const SolverParams base = tuned_base(prob.A);
  const StoppingSpec stop;
  const auto fwd = theta_sweep(spec, {0.0, 0.5, 1.0}, base, stop);
  const auto rev = theta_sweep(spec, {1.0, 0.5, 0.0}, base, stop);
  REQUIRE(fwd.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(fwd[i].theta == rev[2 - i].theta);
    CHECK(fwd[i].it == rev[2 - i].it);
    CHECK(fwd[i].re == rev[2 - i].re);
  }
}

TEST_CASE("theta_sweep converges with small recovery error across the grid") {
  const InstanceSpec spec = small_spec();
  const ProblemInstance prob = gen_instance(spec);
  const auto rows = theta_sweep(spec, {-1.0, 0.0, 0.5, 1.0, 2.0},
                                tuned_base(prob.A), StoppingSpec{});
  for (const auto& row : rows) {
    CHECK_FALSE(row.failed);
    CHECK(row.re <= 0.2);
    CHECK(row.it_err <= 1e-4);
    CHECK(row.eq_err <= 1e-4);
  }
}

TEST_CASE("compare_algorithms: preset algebra makes P-PPA(t=-1) = C-PPA(g=1)") {
  std::vector<AlgorithmConfig> configs = {
      {"p", Preset::p_ppa, -1.0, 1.02},
      {"c", Preset::c_ppa, 1.0, 1.02},
  };
  const auto curves =
      compare_algorithms(small_spec(), configs, StoppingSpec{});
  REQUIRE(curves.size() == 2);
  REQUIRE(curves[0].termination == Termination::converged);
  CHECK(curves[0].iterations == curves[1].iterations);
  REQUIRE(curves[0].points.size() == curves[1].points.size());
  for (std::size_t i = 0; i < curves[0].points.size(); ++i) {
    CHECK(curves[0].points[i].ler ==
          doctest::Approx(curves[1].points[i].ler).epsilon(1e-12));
    CHECK(curves[0].points[i].lir ==
          doctest::Approx(curves[1].points[i].lir).epsilon(1e-12));
  }
}

TEST_CASE("compare_algorithms: relaxation does not cost iterations") {
  const auto curves = compare_algorithms(
      small_spec(), standard_comparison_configs(), StoppingSpec{});
  REQUIRE(curves.size() == 4);
  const CurveRecord* rm = nullptr;
  const CurveRecord* m = nullptr;
  for (const auto& c : curves) {
    if (c.label == "rm_ppa") rm = &c;
    if (c.label == "m_ppa") m = &c;
    CHECK(c.termination == Termination::converged);
    CHECK(c.final_re <= 0.2);
  }
  REQUIRE(rm);
  REQUIRE(m);
  CHECK(rm->iterations <= m->iterations);
}

TEST_CASE("curves use log base 2 exactly and stay finite") {
  const auto curves = compare_algorithms(
      small_spec(), {{"rm_ppa", Preset::rm_ppa, 0.0, 1.01}}, StoppingSpec{});
  REQUIRE(curves.size() == 1);
  for (const auto& p : curves[0].points) {
    CHECK(std::isfinite(p.ler));
    CHECK(std::isfinite(p.lir));
  }
  // spot check the transform on the last point
  const auto spec = small_spec();
  const ProblemInstance prob = gen_instance(spec);
  SolverParams params = tuned_base(prob.A);
  params = validate_params(params, prob.A);
  params.theta = 0.5;
  params.sigma = 1.4;
  const RunHistory hist = run(prob, params, StoppingSpec{});
  CHECK(curves[0].points.back().ler ==
        doctest::Approx(std::log2(hist.records.back().eq_err)));
}

TEST_CASE("CSV writers emit the declared schemas") {
  std::vector<SweepRow> rows(1);
  rows[0] = {0.5, 42, 0.1, 9.98e-5, 8.62e-5, 6.91e-2, false, ""};
  std::ostringstream table;
  write_sweep_csv(table, rows);
  CHECK(table.str().rfind("theta,it,cpu_s,it_err,eq_err,re\n", 0) == 0);
  CHECK(table.str().find("5.000000e-01,42,") != std::string::npos);

  CurveRecord curve;
  curve.label = "x";
  curve.points = {{1, -2.0, -3.0}};
  std::ostringstream cs;
  write_curve_csv(cs, curve);
  CHECK(cs.str() == "k,ler,lir\n1,-2.000000e+00,-3.000000e+00\n");
}
