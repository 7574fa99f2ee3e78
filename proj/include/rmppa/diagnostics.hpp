#pragma once

#include "rmppa/solver.hpp"

#include <iosfwd>

namespace rmppa {

enum class ProxVariant { G, G_tilde };

/// w^T M w for the proximal matrix (variant G) or its rho = 1 companion
/// (variant G_tilde), computed matrix-free:
///   r|x|^2 + c |Ax|^2 / s + 2 (theta-1) <lambda, Ax> + s |lambda|^2,
/// c = (theta-1)^2 - rho for G and (theta-1)^2 - 1 for G_tilde.
double quad_form(const Iterate& w, const SolverParams& params, const Matrix& A,
                 ProxVariant variant);

/// |w - w_ref|^2_{G_tilde} + ((1-rho)/s) |A (x - x_ref)|^2.
/// Nonincreasing along the iteration when w_ref is a saddle point.
double lyapunov(const Iterate& w, const Iterate& w_ref,
                const SolverParams& params, const Matrix& A);

struct TValue {
  double form_a;  // telescoped difference of G_tilde norms
  double form_b;  // (2-sigma)/sigma closed form; always >= 0
};

/// The per-step contraction amount, in both algebraic forms for
/// cross-checking.
TValue t_value(const Iterate& w_k, const Iterate& w_next,
               const Iterate& w_tilde, const SolverParams& params,
               const Matrix& A);

/// Running sums of tilde-iterates; point() is the ergodic average
/// (1/(t+1)) sum_{k=0..t} w_tilde^k.
struct ErgodicState {
  int count = 0;
  Vector sum_x;
  Vector sum_lambda;

  void accumulate(const Iterate& w_tilde);
  Iterate point() const;
};

/// RHS - LHS of the ergodic-rate inequality at the probe point; nonnegative
/// means the bound holds at this t.
double theorem_bound_gap(const Iterate& w_probe, const Iterate& ergodic,
                         const Iterate& w0, int t, const SolverParams& params,
                         const ProblemInstance& problem);

/// The rate constant evaluated at the single reference solution, with the
/// multiplier maximized in closed form over the sphere |lambda| = xi,
/// xi = 2 |lambda_star| + 1.
double gamma_bar(const Iterate& w0, const Vector& x_star,
                 const Vector& lambda_star, const SolverParams& params,
                 const ProblemInstance& problem);

struct CorollaryCheck {
  bool feas_ok;
  bool obj_ok;
  double feas_margin;  // bound minus |A x_t - b|
  double obj_margin;   // bound minus |f(x_t) - f_star|
};

CorollaryCheck corollary_bounds(const Vector& x_t, const Vector& lambda_star,
                                double f_star, double gamma_bar_value, int t,
                                double sigma, const ProblemInstance& problem);

/// Violation of the optimality inclusion 0 in df(x_tilde) + R + N_X(x_tilde),
/// where R is the intermediate residual of the proximal step evaluated at the
/// tilde pair. A correct subproblem solve keeps this at or below the inner
/// tolerance. Supported for the l1 objective.
double subproblem_residual(const Iterate& w_k, const Iterate& w_tilde,
                           const SolverParams& params,
                           const ProblemInstance& problem);

struct DiagnosticsReport {
  struct Row {
    int k;
    double lyapunov;
    double t_form_a;
    double t_form_b;
    double bound_gap;
  };
  std::vector<Row> rows;
  bool monotone = true;
  bool bounds_hold = true;
  double worst_violation = 0.0;

  static DiagnosticsReport build(std::vector<Row> rows);
  void write_csv(std::ostream& os) const;
};

}  // namespace rmppa
