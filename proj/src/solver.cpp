#include "rmppa/solver.hpp"

#include "rmppa/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rmppa {

SolverParams validate_params(SolverParams params, const Matrix& A) {
  std::ostringstream err;
  if (!(params.r > 0.0))
    err << "r > 0 violated: r = " << params.r;
  else if (!(params.s > 0.0))
    err << "s > 0 violated: s = " << params.s;
  else if (!(params.rho <= 1.0))
    err << "rho <= 1 violated: rho = " << params.rho;
  else if (!(params.sigma > 0.0 && params.sigma < 2.0))
    err << "sigma in (0,2) violated: sigma = " << params.sigma;
  else {
    params.lam_max = spectral_norm_sq(A);
    if (!(params.r * params.s > params.lam_max))
      err << "r*s > lam_max(A^T A) violated: r*s = " << params.r * params.s
          << ", lam_max = " << params.lam_max;
  }
  if (!err.str().empty())
    throw std::invalid_argument("validate_params: " + err.str());
  params.validated = true;
  return params;
}

namespace {

// prox of f + indicator(X) with weight tau; componentwise clamp after the
// soft threshold is exact for the separable l1 + box pair.
Vector constrained_prox(const ProblemInstance& problem, const Vector& c,
                        double tau) {
  Vector p;
  if (problem.objective.kind == ObjectiveSpec::Kind::l1_norm) {
    p = prox_l1(c, tau);
  } else {
    if (!problem.objective.prox)
      throw std::runtime_error("x-subproblem: custom objective has no prox oracle");
    if (problem.set.kind != FeasibleSetSpec::Kind::all_space)
      throw std::runtime_error(
          "x-subproblem: custom objective supported only on all_space");
    p = problem.objective.prox(c, tau);
  }
  return project(problem.set, p);
}

}  // namespace

Vector solve_x_subproblem(const ProblemInstance& problem,
                          const SolverParams& params, const Vector& x_k,
                          const Vector& lambda_k) {
  if (!params.validated)
    throw std::invalid_argument("solve_x_subproblem: params not validated");
  const Matrix& A = problem.A;
  if (x_k.size() != A.cols() || lambda_k.size() != A.rows())
    throw DimensionError("solve_x_subproblem: iterate dims do not match A");

  const Vector resid_k = A * x_k - problem.b;
  const Vector c = x_k + (1.0 / params.r) * (A.transpose() *
                   (lambda_k - (2.0 - params.theta) / params.s * resid_k));

  if (params.rho == 1.0 &&
      problem.set.kind == FeasibleSetSpec::Kind::all_space)
    return constrained_prox(problem, c, 1.0 / params.r);

  if (params.rho < 1.0 &&
      params.r * params.s <= (1.0 - params.rho) * params.lam_max)
    throw std::invalid_argument(
        "solve_x_subproblem: r*s <= (1-rho)*lam_max, subproblem may lose "
        "strong convexity; refusing");

  // Proximal gradient on the smooth quadratic part, step 1/L.
  const double quad_coeff = (1.0 - params.rho) / params.s;
  const double L =
      params.r + std::abs(params.rho - 1.0) * params.lam_max / params.s;
  Vector x = project(problem.set, x_k);
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < params.inner_max_iter; ++it) {
    const Vector grad =
        params.r * (x - c) + quad_coeff * (A.transpose() * (A * (x - x_k)));
    const Vector x_next = constrained_prox(problem, x - grad / L, 1.0 / L);
    residual = L * (x_next - x).norm();
    x = x_next;
    if (residual <= params.inner_tol) return x;
  }
  throw ConvergenceError(
      "solve_x_subproblem: inner solver hit the iteration cap, residual " +
          std::to_string(residual),
      residual);
}

Vector lambda_tilde_update(const ProblemInstance& problem,
                           const SolverParams& params, const Vector& x_k,
                           const Vector& x_tilde, const Vector& lambda_k) {
  const Vector resid_tilde = problem.A * x_tilde - problem.b;
  const Vector resid_k = problem.A * x_k - problem.b;
  return lambda_k - (params.theta * resid_tilde +
                     (1.0 - params.theta) * resid_k) / params.s;
}

Iterate relax_step(const Iterate& w_k, const Iterate& w_tilde, double sigma) {
  if (!(sigma > 0.0 && sigma < 2.0))
    throw std::invalid_argument("relax_step: sigma not in (0,2)");
  if (sigma == 1.0) return w_tilde;
  return {(1.0 - sigma) * w_k.x + sigma * w_tilde.x,
          (1.0 - sigma) * w_k.lambda + sigma * w_tilde.lambda};
}

double iter_error(const Iterate& prev, const Iterate& next) {
  const double num =
      std::max((next.x - prev.x).norm(), (next.lambda - prev.lambda).norm());
  const double den = std::max({prev.x.norm(), prev.lambda.norm(), 1.0});
  return num / den;
}

double eq_error(const Matrix& A, const Vector& x, const Vector& b,
                bool* flagged) {
  const double bn = b.norm();
  if (flagged) *flagged = (bn == 0.0);
  return (A * x - b).norm() / std::max(bn, bn == 0.0 ? 1.0 : bn);
}

bool check_stop(double it_err, double eq_err, const StoppingSpec& stopping) {
  return it_err <= stopping.tol_it && eq_err <= stopping.tol_eq;
}

std::pair<Iterate, Iterate> iterate_once(const ProblemInstance& problem,
                                         const SolverParams& params,
                                         const Iterate& w_k) {
  Iterate w_tilde;
  w_tilde.x = solve_x_subproblem(problem, params, w_k.x, w_k.lambda);
  w_tilde.lambda =
      lambda_tilde_update(problem, params, w_k.x, w_tilde.x, w_k.lambda);
  Iterate w_next = relax_step(w_k, w_tilde, params.sigma);
  return {std::move(w_tilde), std::move(w_next)};
}

RunHistory run(const ProblemInstance& problem, const SolverParams& params,
               const StoppingSpec& stopping, const RunOptions& options) {
  if (!params.validated)
    throw std::invalid_argument("run: params not validated");
  if (!(stopping.tol_it > 0.0 && stopping.tol_eq > 0.0))
    throw std::invalid_argument("run: tolerances must be positive");

  RunHistory hist;
  Iterate w = options.start.value_or(Iterate::zero(problem.n(), problem.m()));
  const bool diag = options.diagnostics && problem.w_ref.has_value();
  const bool want_re = options.record_re && problem.x_orig.has_value();
  ErgodicState ergodic;

  for (int k = 1; k <= stopping.max_iter; ++k) {
    Iterate w_tilde, w_next;
    try {
      std::tie(w_tilde, w_next) = iterate_once(problem, params, w);
    } catch (const ConvergenceError& e) {
      hist.termination = Termination::error;
      hist.error_message = e.what();
      hist.final_iterate = std::move(w);
      return hist;
    }

    IterRecord rec;
    rec.k = k;
    rec.it_err = iter_error(w, w_next);
    bool flagged = false;
    rec.eq_err = eq_error(problem.A, w_next.x, problem.b, &flagged);
    hist.eq_denominator_flagged |= flagged;
    rec.objective = objective_value(problem.objective, w_next.x);
    if (want_re)
      rec.re = (w_next.x - *problem.x_orig).norm() / problem.x_orig->norm();
    if (diag) {
      ergodic.accumulate(w_tilde);
      if ((k - 1) % options.diag_stride == 0) {
        const Iterate& ref = *problem.w_ref;
        const Iterate w0 =
            options.start.value_or(Iterate::zero(problem.n(), problem.m()));
        DiagRecord d;
        d.lyapunov = lyapunov(w_next, ref, params, problem.A);
        const TValue tv = t_value(w, w_next, w_tilde, params, problem.A);
        d.t_form_a = tv.form_a;
        d.t_form_b = tv.form_b;
        d.bound_gap = theorem_bound_gap(ref, ergodic.point(), w0, k - 1,
                                        params, problem);
        rec.diag = d;
      }
    }
    hist.records.push_back(std::move(rec));
    hist.iterations = k;
    w = std::move(w_next);

    if (check_stop(hist.records.back().it_err, hist.records.back().eq_err,
                   stopping)) {
      hist.termination = Termination::converged;
      hist.final_iterate = std::move(w);
      return hist;
    }
  }
  hist.termination = Termination::max_iter;
  hist.final_iterate = std::move(w);
  return hist;
}

Preset preset_from_name(const std::string& name) {
  if (name == "rm_ppa") return Preset::rm_ppa;
  if (name == "m_ppa") return Preset::m_ppa;
  if (name == "c_ppa") return Preset::c_ppa;
  if (name == "p_ppa") return Preset::p_ppa;
  if (name == "linearized_alm") return Preset::linearized_alm;
  throw std::invalid_argument(
      "unknown preset '" + name +
      "'; valid: rm_ppa, m_ppa, c_ppa, p_ppa, linearized_alm");
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::rm_ppa: return "rm_ppa";
    case Preset::m_ppa: return "m_ppa";
    case Preset::c_ppa: return "c_ppa";
    case Preset::p_ppa: return "p_ppa";
    case Preset::linearized_alm: return "linearized_alm";
  }
  return "?";
}

SolverParams preset(Preset name, SolverParams base, double extra) {
  switch (name) {
    case Preset::rm_ppa:
      break;
    case Preset::m_ppa:
      base.sigma = 1.0;
      break;
    case Preset::c_ppa:
      base.theta = 0.0;
      base.rho = 1.0;
      base.sigma = extra;  // the relaxation factor gamma
      break;
    case Preset::p_ppa:
      base.theta = extra + 1.0;  // extra is the parameter t
      base.rho = 1.0;
      base.sigma = 1.0;
      break;
    case Preset::linearized_alm:
      base.theta = 1.0;
      base.rho = 1.0;
      base.sigma = 1.0;
      break;
  }
  base.validated = false;
  return base;
}

}  // namespace rmppa
