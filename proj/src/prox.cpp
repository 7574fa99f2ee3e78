#include "rmppa/prox.hpp"

#include <cmath>

namespace rmppa {

FeasibleSetSpec FeasibleSetSpec::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size())
    throw DimensionError("box: bound dims differ");
  if ((lo.array() > hi.array()).any())
    throw std::invalid_argument("box: lower > upper in some component");
  return {Kind::box, std::move(lo), std::move(hi)};
}

Vector prox_l1(const Vector& c, double tau) {
  if (tau <= 0.0) throw std::invalid_argument("prox_l1: tau <= 0");
  return c.array().sign() * (c.array().abs() - tau).max(0.0);
}

Vector project(const FeasibleSetSpec& set, const Vector& x) {
  if (set.kind == FeasibleSetSpec::Kind::all_space) return x;
  if (set.lower.size() != x.size())
    throw DimensionError("project: box dim " + std::to_string(set.lower.size()) +
                         " vs x dim " + std::to_string(x.size()));
  return x.cwiseMax(set.lower).cwiseMin(set.upper);
}

double objective_value(const ObjectiveSpec& f, const Vector& x) {
  if (f.kind == ObjectiveSpec::Kind::l1_norm) {
    // ordered accumulation keeps the value independent of SIMD width
    double sum = 0.0;
    for (Index i = 0; i < x.size(); ++i) sum += std::abs(x[i]);
    return sum;
  }
  if (!f.value)
    throw std::runtime_error("objective_value: custom spec has no value oracle");
  return f.value(x);
}

}  // namespace rmppa
