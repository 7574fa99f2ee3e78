#include "rmppa/linops.hpp"

#include <cmath>

namespace rmppa {

double spectral_norm_sq(const Matrix& A, double tol, int max_iter) {
  if (A.size() == 0 || A.isZero(0.0))
    throw std::invalid_argument("spectral_norm_sq: A is zero");
  if (tol <= 0.0) throw std::invalid_argument("spectral_norm_sq: tol <= 0");
  if (max_iter < 1)
    throw std::invalid_argument("spectral_norm_sq: max_iter < 1");

  Vector v = Vector::Ones(A.cols());
  v.normalize();
  double estimate = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vector w = A.transpose() * (A * v);
    const double next = v.dot(w);  // Rayleigh quotient of A^T A
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;  // v in the null space of A
    v = w / nw;
    if (it > 0 && std::abs(next - estimate) <= tol * std::abs(next))
      return next;
    estimate = next;
  }
  throw ConvergenceError(
      "spectral_norm_sq: no convergence within " + std::to_string(max_iter) +
          " iterations (last estimate " + std::to_string(estimate) + ")",
      estimate);
}

std::uint64_t SeededRng::uniform_below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

double SeededRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, q;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    q = u * u + v * v;
  } while (q >= 1.0 || q == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(q) / q);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

Vector normal_sample(SeededRng& rng, Index n, double mean, double std) {
  if (n < 1) throw std::invalid_argument("normal_sample: n < 1");
  if (std < 0.0) throw std::invalid_argument("normal_sample: std < 0");
  if (std == 0.0) return Vector::Constant(n, mean);
  Vector out(n);
  for (Index i = 0; i < n; ++i) out[i] = mean + std * rng.normal();
  return out;
}

}  // namespace rmppa
