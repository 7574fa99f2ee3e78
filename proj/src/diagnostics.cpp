#include "rmppa/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace rmppa {

double quad_form(const Iterate& w, const SolverParams& params, const Matrix& A,
                 ProxVariant variant) {
  if (!params.validated)
    throw std::invalid_argument("quad_form: params not validated");
  const double tm1 = params.theta - 1.0;
  const double c =
      tm1 * tm1 - (variant == ProxVariant::G ? params.rho : 1.0);
  const Vector Ax = A * w.x;
  return params.r * w.x.squaredNorm() + c * Ax.squaredNorm() / params.s +
         2.0 * tm1 * w.lambda.dot(Ax) + params.s * w.lambda.squaredNorm();
}

double lyapunov(const Iterate& w, const Iterate& w_ref,
                const SolverParams& params, const Matrix& A) {
  const Iterate d{w.x - w_ref.x, w.lambda - w_ref.lambda};
  const double tail =
      (1.0 - params.rho) / params.s * (A * d.x).squaredNorm();
  return quad_form(d, params, A, ProxVariant::G_tilde) + tail;
}

TValue t_value(const Iterate& w_k, const Iterate& w_next,
               const Iterate& w_tilde, const SolverParams& params,
               const Matrix& A) {
  const double one_m_rho = 1.0 - params.rho;
  const Iterate dk{w_k.x - w_tilde.x, w_k.lambda - w_tilde.lambda};
  const Iterate dn{w_next.x - w_tilde.x, w_next.lambda - w_tilde.lambda};
  const double form_a =
      quad_form(dk, params, A, ProxVariant::G_tilde) -
      quad_form(dn, params, A, ProxVariant::G_tilde) +
      one_m_rho / params.s *
          ((A * dk.x).squaredNorm() - (A * dn.x).squaredNorm());

  const Iterate step{w_k.x - w_next.x, w_k.lambda - w_next.lambda};
  const double factor = (2.0 - params.sigma) / params.sigma;
  const double form_b =
      factor * quad_form(step, params, A, ProxVariant::G_tilde) +
      one_m_rho * factor / params.s * (A * step.x).squaredNorm();
  return {form_a, form_b};
}

void ErgodicState::accumulate(const Iterate& w_tilde) {
  if (count == 0) {
    sum_x = w_tilde.x;
    sum_lambda = w_tilde.lambda;
  } else {
    if (sum_x.size() != w_tilde.x.size() ||
        sum_lambda.size() != w_tilde.lambda.size())
      throw DimensionError("ErgodicState: iterate dims changed");
    sum_x += w_tilde.x;
    sum_lambda += w_tilde.lambda;
  }
  ++count;
}

Iterate ErgodicState::point() const {
  if (count == 0)
    throw std::runtime_error("ErgodicState: no iterates accumulated");
  return {sum_x / count, sum_lambda / count};
}

double theorem_bound_gap(const Iterate& w_probe, const Iterate& ergodic,
                         const Iterate& w0, int t, const SolverParams& params,
                         const ProblemInstance& problem) {
  if (!params.validated)
    throw std::invalid_argument("theorem_bound_gap: params not validated");
  const Matrix& A = problem.A;
  // J at the probe: (-A^T lambda; A x - b)
  const Vector j_x = -(A.transpose() * w_probe.lambda);
  const Vector j_l = A * w_probe.x - problem.b;
  const double lhs = objective_value(problem.objective, ergodic.x) -
                     objective_value(problem.objective, w_probe.x) +
                     (ergodic.x - w_probe.x).dot(j_x) +
                     (ergodic.lambda - w_probe.lambda).dot(j_l);

  const Iterate d0{w0.x - w_probe.x, w0.lambda - w_probe.lambda};
  const double rhs =
      (quad_form(d0, params, A, ProxVariant::G_tilde) +
       (1.0 - params.rho) / params.s * (A * d0.x).squaredNorm()) /
      (2.0 * params.sigma * (t + 1));
  return rhs - lhs;
}

double gamma_bar(const Iterate& w0, const Vector& x_star,
                 const Vector& lambda_star, const SolverParams& params,
                 const ProblemInstance& problem) {
  const Matrix& A = problem.A;
  const double xi = 2.0 * lambda_star.norm() + 1.0;
  const Vector dx = w0.x - x_star;
  const Vector Adx = A * dx;
  // Over |lambda| = xi the G_tilde form in mu = lambda0 - lambda is
  //   s |lambda|^2 - 2 <lambda, v> + const,  v = s lambda0 + (theta-1) A dx,
  // maximized at lambda = -xi v / |v|.
  const Vector v = params.s * w0.lambda + (params.theta - 1.0) * Adx;
  Vector lam = Vector::Zero(A.rows());
  const double vn = v.norm();
  if (vn > 0.0)
    lam = -xi / vn * v;
  else if (A.rows() > 0)
    lam = Vector::Unit(A.rows(), 0) * xi;  // any point of the sphere
  const Iterate d{dx, w0.lambda - lam};
  return quad_form(d, params, A, ProxVariant::G_tilde) +
         (1.0 - params.rho) / params.s *
             (A * w0.x - problem.b).squaredNorm();
}

CorollaryCheck corollary_bounds(const Vector& x_t, const Vector& lambda_star,
                                double f_star, double gamma_bar_value, int t,
                                double sigma, const ProblemInstance& problem) {
  const double denom = 2.0 * sigma * (t + 1);
  const double feas = (problem.A * x_t - problem.b).norm();
  const double feas_bound =
      gamma_bar_value / (denom * (lambda_star.norm() + 1.0));
  const double obj_gap =
      std::abs(objective_value(problem.objective, x_t) - f_star);
  const double obj_bound = gamma_bar_value / denom;
  return {feas <= feas_bound, obj_gap <= obj_bound, feas_bound - feas,
          obj_bound - obj_gap};
}

double subproblem_residual(const Iterate& w_k, const Iterate& w_tilde,
                           const SolverParams& params,
                           const ProblemInstance& problem) {
  if (!params.validated)
    throw std::invalid_argument("subproblem_residual: params not validated");
  if (problem.objective.kind != ObjectiveSpec::Kind::l1_norm)
    throw std::runtime_error(
        "subproblem_residual: only the l1 objective is supported");
  const Matrix& A = problem.A;
  const double tm1 = params.theta - 1.0;
  const Vector dx = w_tilde.x - w_k.x;
  const Vector R = -(A.transpose() * w_tilde.lambda) + params.r * dx +
                   (tm1 * tm1 - params.rho) / params.s *
                       (A.transpose() * (A * dx)) +
                   tm1 * (A.transpose() * (w_tilde.lambda - w_k.lambda));

  const bool boxed = problem.set.kind == FeasibleSetSpec::Kind::box;
  double worst = 0.0;
  for (Index i = 0; i < R.size(); ++i) {
    const double xi = w_tilde.x[i];
    // Admissible set for -R_i: the subdifferential of |.| at x_i, widened by
    // the normal cone of the box when x_i sits on a bound.
    double lo, hi;
    if (xi > 0.0) {
      lo = hi = 1.0;
    } else if (xi < 0.0) {
      lo = hi = -1.0;
    } else {
      lo = -1.0;
      hi = 1.0;
    }
    if (boxed) {
      if (xi <= problem.set.lower[i]) lo = -std::numeric_limits<double>::infinity();
      if (xi >= problem.set.upper[i]) hi = std::numeric_limits<double>::infinity();
    }
    const double target = -R[i];
    double viol = 0.0;
    if (target < lo)
      viol = lo - target;
    else if (target > hi)
      viol = target - hi;
    worst = std::max(worst, viol);
  }
  return worst;
}

DiagnosticsReport DiagnosticsReport::build(std::vector<Row> in_rows) {
  DiagnosticsReport rep;
  rep.rows = std::move(in_rows);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const Row& row = rep.rows[i];
    if (i > 0) {
      const double prev = rep.rows[i - 1].lyapunov;
      const double slack = 1e-8 * (1.0 + prev);
      const double excess = row.lyapunov - (prev - row.t_form_b + slack);
      if (excess > 0.0) {
        rep.monotone = false;
        rep.worst_violation = std::max(rep.worst_violation, excess);
      }
    }
    if (row.bound_gap < -1e-8) {
      rep.bounds_hold = false;
      rep.worst_violation = std::max(rep.worst_violation, -row.bound_gap);
    }
  }
  return rep;
}

void DiagnosticsReport::write_csv(std::ostream& os) const {
  os << "k,lyapunov,t_form_a,t_form_b,bound_gap\n";
  char buf[160];
  for (const Row& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.6e,%.6e,%.6e,%.6e\n", row.k,
                  row.lyapunov, row.t_form_a, row.t_form_b, row.bound_gap);
    os << buf;
  }
}

}  // namespace rmppa
