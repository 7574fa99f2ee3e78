#pragma once

#include "rmppa/linops.hpp"

#include <functional>

namespace rmppa {

/// Objective f: either the l1 norm (closed-form prox) or a user-supplied
/// pair of oracles. The prox oracle solves argmin_u f(u) + (1/(2 tau)) |u-c|^2.
struct ObjectiveSpec {
  enum class Kind { l1_norm, custom };
  Kind kind = Kind::l1_norm;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&, double)> prox;

  static ObjectiveSpec l1() { return {}; }
  static ObjectiveSpec make_custom(std::function<double(const Vector&)> value,
                                   std::function<Vector(const Vector&, double)> prox) {
    return {Kind::custom, std::move(value), std::move(prox)};
  }
};

/// Feasible set X: all of R^n, or a componentwise box.
struct FeasibleSetSpec {
  enum class Kind { all_space, box };
  Kind kind = Kind::all_space;
  Vector lower;
  Vector upper;

  static FeasibleSetSpec all_space() { return {}; }
  static FeasibleSetSpec box(Vector lo, Vector hi);
};

/// Soft threshold, the proximity operator of tau * |.|_1.
Vector prox_l1(const Vector& c, double tau);

/// Euclidean projection onto the set.
Vector project(const FeasibleSetSpec& set, const Vector& x);

double objective_value(const ObjectiveSpec& f, const Vector& x);

}  // namespace rmppa
