#include "rmppa/prox.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace rmppa;

namespace {

// Brute-force 1-D oracle for argmin_u tau |u| + 0.5 (u - c)^2: dense grid
// scan followed by ternary-search refinement of the convex objective.
double prox_l1_oracle_1d(double c, double tau) {
  auto obj = [&](double u) { return tau * std::abs(u) + 0.5 * (u - c) * (u - c); };
  const double span = std::abs(c) + tau + 1.0;
  double best = 0.0, best_val = obj(0.0);
  const int grid = 4001;
  for (int i = 0; i < grid; ++i) {
    const double u = -span + 2.0 * span * i / (grid - 1);
    const double v = obj(u);
    if (v < best_val) {
      best = u;
      best_val = v;
    }
  }
  double lo = best - 2.0 * span / (grid - 1), hi = best + 2.0 * span / (grid - 1);
  while (hi - lo > 1e-12) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (obj(m1) < obj(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

std::mt19937 gen(2024);

Vector random_vector(Index n, double scale = 3.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = dist(gen);
  return v;
}

}  // namespace

TEST_CASE("prox_l1 piecewise formula") {
  Vector c(3);
  c << 3.0, -0.5, 0.0;
  const Vector p = prox_l1(c, 1.0);
  CHECK(p[0] == 2.0);
  CHECK(p[1] == 0.0);
  CHECK(p[2] == 0.0);
}

TEST_CASE("prox_l1 matches the brute-force 1-D oracle") {
  std::uniform_real_distribution<double> cdist(-5.0, 5.0);
  std::uniform_real_distribution<double> taudist(0.01, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double tau = taudist(gen);
    Vector c(4);
    for (Index i = 0; i < 4; ++i) c[i] = cdist(gen);
    const Vector p = prox_l1(c, tau);
    for (Index i = 0; i < 4; ++i)
      CHECK(p[i] == doctest::Approx(prox_l1_oracle_1d(c[i], tau)).epsilon(1e-6));
  }
}

TEST_CASE("prox_l1 vanishing threshold limit") {
  Vector c(2);
  c << 5.0, -7.0;
  const Vector p = prox_l1(c, 1e-12);
  CHECK(std::abs(p[0] - 5.0) < 1e-10);
  CHECK(std::abs(p[1] + 7.0) < 1e-10);
}

TEST_CASE("prox_l1 rejects nonpositive tau") {
  CHECK_THROWS(prox_l1(Vector::Zero(2), 0.0));
}

TEST_CASE("prox_l1 is non-expansive") {
  for (int trial = 0; trial < 100; ++trial) {
    const Vector a = random_vector(6), b = random_vector(6);
    const double tau = 0.5 + trial * 0.01;
    CHECK((prox_l1(a, tau) - prox_l1(b, tau)).norm() <=
          (a - b).norm() + 1e-14);
  }
}

TEST_CASE("prox_l1 shrinks toward zero componentwise") {
  const Vector c = random_vector(20);
  const Vector p = prox_l1(c, 0.7);
  for (Index i = 0; i < c.size(); ++i) CHECK(std::abs(p[i]) <= std::abs(c[i]));
}

TEST_CASE("project onto all_space is the identity") {
  Vector x(2);
  x << 1.0, -2.0;
  CHECK(project(FeasibleSetSpec::all_space(), x) == x);
}

TEST_CASE("project onto a box clamps componentwise") {
  const auto box = FeasibleSetSpec::box(Vector::Zero(3), Vector::Ones(3));
  Vector x(3);
  x << -0.5, 0.3, 2.0;
  const Vector p = project(box, x);
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 0.3);
  CHECK(p[2] == 1.0);
}

TEST_CASE("project matches a 2-D grid search oracle") {
  Vector lo(2), hi(2);
  lo << -1.0, 0.5;
  hi << 2.0, 1.5;
  const auto box = FeasibleSetSpec::box(lo, hi);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = random_vector(2, 4.0);
    const Vector p = project(box, x);
    // exhaustive scan of the box
    const int grid = 201;
    Vector best(2);
    double best_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        Vector u(2);
        u << lo[0] + (hi[0] - lo[0]) * i / (grid - 1),
            lo[1] + (hi[1] - lo[1]) * j / (grid - 1);
        const double d = (u - x).norm();
        if (d < best_dist) {
          best_dist = d;
          best = u;
        }
      }
    const double grid_width =
        std::max((hi[0] - lo[0]), (hi[1] - lo[1])) / (grid - 1);
    CHECK((p - best).norm() <= 2.0 * grid_width);
  }
}

TEST_CASE("project is idempotent") {
  const auto box = FeasibleSetSpec::box(-Vector::Ones(5), Vector::Ones(5));
  const Vector x = random_vector(5);
  const Vector once = project(box, x);
  CHECK(project(box, once) == once);
}

TEST_CASE("box bounds must be ordered") {
  CHECK_THROWS(FeasibleSetSpec::box(Vector::Ones(2), Vector::Zero(2)));
}

TEST_CASE("objective_value for l1") {
  Vector x(3);
  x << 1.0, -2.0, 0.0;
  CHECK(objective_value(ObjectiveSpec::l1(), x) == 3.0);
  CHECK(objective_value(ObjectiveSpec::l1(), Vector::Zero(4)) == 0.0);
}

TEST_CASE("objective_value equals explicit loop sum") {
  const Vector x = random_vector(17);
  double sum = 0.0;
  for (Index i = 0; i < x.size(); ++i) sum += std::abs(x[i]);
  CHECK(objective_value(ObjectiveSpec::l1(), x) == sum);
}

TEST_CASE("custom objective without value oracle is rejected") {
  ObjectiveSpec f;
  f.kind = ObjectiveSpec::Kind::custom;
  CHECK_THROWS(objective_value(f, Vector::Zero(2)));
}
