#pragma once

#include "rmppa/linops.hpp"
#include "rmppa/prox.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmppa {

/// Primal-dual pair w = (x, lambda).
struct Iterate {
  Vector x;
  Vector lambda;

  static Iterate zero(Index n, Index m) {
    return {Vector::Zero(n), Vector::Zero(m)};
  }
};

/// Algorithm parameters. Valid region: r > 0, s > 0, r*s > lam_max(A^T A),
/// rho <= 1, sigma in (0, 2). lam_max is filled in by validate_params.
struct SolverParams {
  double theta = 0.5;
  double rho = 1.0;
  double r = 8.0;
  double s = 0.0;
  double sigma = 1.4;
  double lam_max = 0.0;
  bool validated = false;

  // Inner-solver controls for the rho < 1 (or constrained) x-subproblem.
  double inner_tol = 1e-10;
  int inner_max_iter = 10000;
};

struct ProblemInstance {
  ObjectiveSpec objective;
  Matrix A;
  Vector b;
  FeasibleSetSpec set;
  std::optional<Vector> x_orig;   // ground truth, for recovery error
  std::optional<Iterate> w_ref;   // reference saddle point, for diagnostics

  Index m() const { return A.rows(); }
  Index n() const { return A.cols(); }
};

struct StoppingSpec {
  double tol_it = 1e-4;
  double tol_eq = 1e-4;
  int max_iter = 50000;
};

enum class Termination { converged, max_iter, error };

struct DiagRecord {
  double lyapunov;
  double t_form_a;
  double t_form_b;
  double bound_gap;
};

struct IterRecord {
  int k;
  double it_err;
  double eq_err;
  double objective;
  std::optional<double> re;
  std::optional<DiagRecord> diag;
};

struct RunHistory {
  std::vector<IterRecord> records;
  Iterate final_iterate;
  Termination termination = Termination::error;
  int iterations = 0;
  bool eq_denominator_flagged = false;  // |b| = 0, denominator max(|b|,1)
  std::string error_message;
};

struct RunOptions {
  std::optional<Iterate> start;  // default (0, 0)
  bool diagnostics = false;      // requires problem.w_ref
  int diag_stride = 1;
  bool record_re = true;         // when x_orig is present
};

/// Fills lam_max and checks the parameter region; throws on violation with
/// both sides of the violated inequality in the message.
SolverParams validate_params(SolverParams params, const Matrix& A);

/// x-subproblem: argmin over X of
///   f(x) + (r/2)|x - c_k|^2 + ((1-rho)/(2s))|A(x - x_k)|^2,
/// c_k = x_k + (1/r) A^T [lambda_k - ((2-theta)/s)(A x_k - b)].
/// rho = 1 on all of R^n uses the prox oracle directly; otherwise a
/// proximal-gradient inner solve runs to first-order residual <= inner_tol.
Vector solve_x_subproblem(const ProblemInstance& problem,
                          const SolverParams& params, const Vector& x_k,
                          const Vector& lambda_k);

/// lambda_tilde = lambda_k - (1/s)[theta (A x_tilde - b) + (1-theta)(A x_k - b)]
Vector lambda_tilde_update(const ProblemInstance& problem,
                           const SolverParams& params, const Vector& x_k,
                           const Vector& x_tilde, const Vector& lambda_k);

/// w_next = (1 - sigma) w_k + sigma w_tilde on both blocks.
Iterate relax_step(const Iterate& w_k, const Iterate& w_tilde, double sigma);

/// It_err(k) = max(|x_k - x_{k-1}|, |l_k - l_{k-1}|) / max(|x_{k-1}|, |l_{k-1}|, 1)
double iter_error(const Iterate& prev, const Iterate& next);

/// Eq_err(k) = |A x - b| / |b|; a zero b switches the denominator to
/// max(|b|, 1) and sets *flagged.
double eq_error(const Matrix& A, const Vector& x, const Vector& b,
                bool* flagged = nullptr);

bool check_stop(double it_err, double eq_err, const StoppingSpec& stopping);

/// One iteration: x-subproblem, multiplier update, relaxation. Returns the
/// tilde pair (for ergodic accumulation) and the relaxed iterate.
std::pair<Iterate, Iterate> iterate_once(const ProblemInstance& problem,
                                         const SolverParams& params,
                                         const Iterate& w_k);

RunHistory run(const ProblemInstance& problem, const SolverParams& params,
               const StoppingSpec& stopping, const RunOptions& options = {});

enum class Preset { rm_ppa, m_ppa, c_ppa, p_ppa, linearized_alm };

Preset preset_from_name(const std::string& name);
std::string preset_name(Preset p);

/// Maps a named scheme onto (theta, rho, sigma). `extra` is the relaxation
/// factor gamma for c_ppa and the parameter t for p_ppa; ignored otherwise.
SolverParams preset(Preset name, SolverParams base, double extra = 0.0);

}  // namespace rmppa
