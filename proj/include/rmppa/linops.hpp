#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace rmppa {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when operand shapes do not conform.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative routine exhausts its iteration budget.
/// Carries the last estimate so callers can decide whether to accept it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last)
      : std::runtime_error(what), last_estimate(last) {}
  double last_estimate;
};

inline Vector matvec(const Matrix& A, const Vector& x) {
  if (A.cols() != x.size())
    throw DimensionError("matvec: A has " + std::to_string(A.cols()) +
                         " cols but x has dim " + std::to_string(x.size()));
  return A * x;
}

/// Largest eigenvalue of A^T A, by power iteration on x -> A^T (A x).
/// Deterministic: starts from the normalized all-ones vector.
double spectral_norm_sq(const Matrix& A, double tol = 1e-10,
                        int max_iter = 5000);

/// Deterministic Gaussian sampler. The stream is produced by a mt19937_64
/// engine feeding a Marsaglia polar transform, so identical seeds give
/// identical streams on any conforming standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits of the engine output.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), rejection-sampled for exactness.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// One standard-normal draw (polar method, spare value cached).
  double normal();

  /// Child generator with an independent stream, for parallel use.
  SeededRng spawn() { return SeededRng(engine_()); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// n i.i.d. draws from N(mean, std^2); std == 0 yields the constant vector
/// and consumes no engine output.
Vector normal_sample(SeededRng& rng, Index n, double mean = 0.0,
                     double std = 1.0);

}  // namespace rmppa
