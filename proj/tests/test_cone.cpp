// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "siegel/cone.hpp"
#include "siegel/sampling.hpp"

using namespace siegel;
using namespace siegel::testing;

namespace {

std::vector<Cone> catalog() {
  std::vector<Cone> cones;
  cones.push_back(Cone::lorentz(1));
  cones.push_back(Cone::lorentz(2));
  cones.push_back(Cone::lorentz(3));
  cones.push_back(Cone::orthant(2));
  cones.push_back(Cone::orthant(3));
  cones.push_back(Cone::orthant(5));
  cones.push_back(Cone::product({Cone::lorentz(1), Cone::orthant(2)}));
  cones.push_back(Cone::product({Cone::orthant(3), Cone::lorentz(2)}));
  return cones;
}

Vector vec(std::initializer_list<double> entries) {
  Vector v(static_cast<int>(entries.size()));
  int i = 0;
  for (double e : entries) v[i++] = e;
  return v;
}

/// A point whose margin is exactly `m` (up to rounding): the first leaf sits
/// at distance m from its boundary while every other leaf stays at margin 1.
Vector point_with_margin(const Cone& cone, double m) {
  Vector w = Vector::Zero(cone.dim());
  bool first = true;
  for (const LeafBlock& leaf : leaf_blocks(cone)) {
    Vector block;
    if (first) {
      if (leaf.cone->kind() == Cone::Kind::lorentz) {
        block = Vector::Zero(leaf.cone->dim());
        block[0] = 1.0 + m;
        block[1] = 1.0;
      } else {
        block = Vector::Ones(leaf.cone->dim());
        block[0] = m;
      }
      first = false;
    } else {
      block = leaf.cone->canonical_interior();
    }
    w.segment(leaf.offset, leaf.cone->dim()) = block;
  }
  return w;
}

}  // namespace

TEST_CASE("margin catalog values") {
  CHECK(margin(Cone::lorentz(1), vec({2, 1})) == doctest::Approx(1.0));
  CHECK(margin(Cone::orthant(3), vec({1, -1, 2})) == doctest::Approx(-1.0));
  CHECK(margin(Cone::lorentz(2), vec({1, 1, 0})) == doctest::Approx(0.0));
  // Product margin is the worst leaf margin.
  Cone prod = Cone::product({Cone::lorentz(1), Cone::orthant(2)});
  CHECK(margin(prod, vec({2, 1, 3, 0.5})) == doctest::Approx(0.5));
}

TEST_CASE("margin rejects bad input") {
  CHECK_THROWS_AS(margin(Cone::lorentz(1), vec({1, 2, 3})), error);
  Vector bad = vec({1, 0});
  bad[1] = std::nan("");
  CHECK_THROWS_AS(margin(Cone::lorentz(1), bad), error);
}

TEST_CASE("dual margin coincides with margin for self-dual kinds") {
  CHECK(dual_margin(Cone::lorentz(1), vec({1, 0})) == doctest::Approx(1.0));
  CHECK(dual_margin(Cone::orthant(2), vec({0, 1})) == doctest::Approx(0.0));
  CHECK(dual_margin(Cone::lorentz(1), vec({1, -2})) < 0.0);
  // Self-duality, brute force: the extreme rays (1, +-1) pair nonnegatively
  // with every dual-closure point.
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Vector y = closure_point(Cone::lorentz(1), rng);
    CHECK(y.dot(vec({1, 1})) >= -1e-12);
    CHECK(y.dot(vec({1, -1})) >= -1e-12);
  }
}

TEST_CASE("log_char catalog values") {
  CHECK(log_char(Cone::orthant(2), vec({1, 2})) == doctest::Approx(-std::log(2.0)));
  CHECK(log_char(Cone::lorentz(1), vec({2, 1})) == doctest::Approx(-std::log(3.0)));
  // Separable one-dimensional integrals: int_0^infty e^{-w y} dy = 1/w, so
  // the orthant value is the sum of -log w_i.
  CHECK(log_char(Cone::orthant(3), vec({1, 2, 4})) ==
        doctest::Approx(-std::log(1.0) - std::log(2.0) - std::log(4.0)));
  CHECK_THROWS_AS(log_char(Cone::lorentz(1), vec({1, 1})), error);
  CHECK_THROWS_AS(log_char(Cone::orthant(2), vec({1, -1})), error);
}

TEST_CASE("homogeneity of margin and log_char") {
  int idx = 0;
  for (const Cone& cone : catalog()) {
    Rng rng(derive_seed(101, idx++));
    for (int t = 0; t < 50; ++t) {
      Vector w = interior_point(cone, rng);
      double lam = rng.uniform(0.1, 10.0);
      CHECK(std::abs(margin(cone, lam * w) - lam * margin(cone, w)) < 1e-9 * (1.0 + lam));
      CHECK(std::abs(log_char(cone, lam * w) - log_char(cone, w) +
                     cone.degree() * std::log(lam)) < 1e-9);
    }
  }
}

TEST_CASE("dual map catalog values") {
  CHECK(rel_err(dual_map(Cone::lorentz(2), vec({1, 0, 0})), vec({3, 0, 0})) < 1e-15);
  CHECK(rel_err(dual_map(Cone::orthant(3), vec({1, 2, 4})), vec({1, 0.5, 0.25})) < 1e-15);
  CHECK(vec({1, 0, 0}).dot(dual_map(Cone::lorentz(2), vec({1, 0, 0}))) == doctest::Approx(3.0));
  CHECK_THROWS_AS(dual_map(Cone::lorentz(1), vec({0, 0})), error);
}

TEST_CASE("dual identity, range, scaling, monotonicity") {
  int idx = 0;
  for (const Cone& cone : catalog()) {
    Rng rng(derive_seed(102, idx++));
    for (int t = 0; t < 50; ++t) {
      Vector w = interior_point(cone, rng);
      Vector psi = dual_map(cone, w);
      // g(w, w*) equals the ambient dimension.
      CHECK(std::abs(w.dot(psi) - cone.dim()) < 1e-9 * cone.dim());
      // The image lies in the open dual cone.
      CHECK(dual_margin(cone, psi) > 0.0);
      // dual_map(lam w) = dual_map(w) / lam.
      double lam = rng.uniform(0.1, 10.0);
      CHECK(rel_err(dual_map(cone, lam * w), Vector(psi / lam)) < 1e-9);
      // Strict monotonicity of the gradient implies injectivity on pairs.
      Vector w2 = interior_point(cone, rng);
      if ((w - w2).norm() > 1e-8) {
        CHECK((dual_map(cone, w) - dual_map(cone, w2)).dot(w - w2) < 0.0);
      }
    }
  }
}

TEST_CASE("dual map matches the finite-difference gradient") {
  int idx = 0;
  for (const Cone& cone : catalog()) {
    Rng rng(derive_seed(103, idx++));
    for (int t = 0; t < 20; ++t) {
      Vector w = interior_point(cone, rng);
      if (margin(cone, w) < 1e-2) continue;  // keep truncation error small
      Vector fd = fd_gradient([&](const Vector& v) { return log_char(cone, v); }, w, 1e-6);
      CHECK(rel_err(dual_map(cone, w), Vector(-fd)) < 1e-6);
    }
  }
}

TEST_CASE("hessian catalog value and finite-difference match") {
  Matrix want = Matrix::Zero(2, 2);
  want(0, 0) = 1.0;
  want(1, 1) = 0.25;
  CHECK(rel_err(log_char_hessian(Cone::orthant(2), vec({1, 2})), want) < 1e-15);

  int idx = 0;
  for (const Cone& cone : catalog()) {
    Rng rng(derive_seed(104, idx++));
    for (int t = 0; t < 10; ++t) {
      Vector w = interior_point(cone, rng);
      if (margin(cone, w) < 1e-2) continue;
      Matrix fd = fd_jacobian([&](const Vector& v) { return Vector(-dual_map(cone, v)); }, w,
                              1e-5);
      CHECK(rel_err(log_char_hessian(cone, w), fd) < 1e-5);
      // Strict convexity: smallest eigenvalue positive.
      Eigen::SelfAdjointEigenSolver<Matrix> eig(log_char_hessian(cone, w));
      CHECK(eig.eigenvalues().minCoeff() > 0.0);
    }
  }
}

TEST_CASE("boundary blow-up of log_char") {
  for (const Cone& cone : catalog()) {
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 3; k <= 10; ++k) {
      Vector w = point_with_margin(cone, std::pow(10.0, -k));
      double value = log_char(cone, w);
      CHECK(value > prev);
      prev = value;
    }
    // The last value is genuinely large, not merely increasing.
    CHECK(prev > log_char(cone, point_with_margin(cone, 1.0)) + 5.0);
  }
}

TEST_CASE("projection catalog values") {
  CHECK(rel_err(project_closure(Cone::orthant(3), vec({1, -1, 2})), vec({1, 0, 2})) < 1e-15);
  CHECK(rel_err(project_closure(Cone::lorentz(1), vec({0, 2})), vec({1, 1})) < 1e-12);
  CHECK(project_closure(Cone::lorentz(1), vec({-3, 0})).norm() == doctest::Approx(0.0));
}

TEST_CASE("projection is idempotent, feasible, and optimal") {
  int idx = 0;
  for (const Cone& cone : catalog()) {
    Rng rng(derive_seed(105, idx++));
    for (int t = 0; t < 10; ++t) {
      Vector x = 3.0 * rng.gaussian(cone.dim());
      Vector p = project_closure(cone, x);
      CHECK(margin(cone, p) >= -1e-12);
      CHECK((project_closure(cone, p) - p).norm() < 1e-12);
      // Interior points are fixed.
      Vector w = interior_point(cone, rng);
      CHECK((project_closure(cone, w) - w).norm() == doctest::Approx(0.0));
    }
    // Optimality against densely sampled closure points.
    Vector x = 2.0 * rng.gaussian(cone.dim());
    Vector p = project_closure(cone, x);
    double dist = (x - p).norm();
    for (int s = 0; s < 10000; ++s) {
      Vector candidate = closure_point(cone, rng);
      CHECK((x - candidate).norm() >= dist - 1e-9);
    }
  }
}

TEST_CASE("lower bound constant catalog values") {
  CHECK(lower_bound_constant(Cone::lorentz(1), vec({1, 0})) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(lower_bound_constant(Cone::orthant(2), vec({2, 3})) == doctest::Approx(2.0));
  CHECK_THROWS_AS(lower_bound_constant(Cone::lorentz(1), vec({0, 1})), error);
}

TEST_CASE("lower bound constant bounds the pairing on the closure") {
  int idx = 0;
  for (const Cone& cone : catalog()) {
    Rng rng(derive_seed(106, idx++));
    Vector y = interior_point(cone, rng);
    double p = lower_bound_constant(cone, y);
    CHECK(p > 0.0);
    for (int t = 0; t < 1000; ++t) {
      Vector w = closure_point(cone, rng);
      CHECK(p * w.norm() <= w.dot(y) + 1e-12);
    }
    // Dense sampling of unit closure points never undercuts p by more than
    // sampling slack, so p is the actual minimum, not just a lower bound.
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 20000; ++t) {
      Vector w = closure_point(cone, rng);
      if (w.norm() > 1e-9) best = std::min(best, w.dot(y) / w.norm());
    }
    CHECK(best >= p - 1e-9);
    CHECK(best <= p + 0.3 * (1.0 + p));
  }
}

TEST_CASE("canonical interior point has unit margin both ways") {
  for (const Cone& cone : catalog()) {
    Vector e = cone.canonical_interior();
    CHECK(margin(cone, e) == doctest::Approx(1.0));
    CHECK(dual_margin(cone, e) == doctest::Approx(1.0));
  }
}

TEST_CASE("cone constructors validate their arguments") {
  CHECK_THROWS_AS(Cone::lorentz(0), error);
  CHECK_THROWS_AS(Cone::orthant(0), error);
  CHECK_THROWS_AS(Cone::product({}), error);
  Cone prod = Cone::product({Cone::lorentz(1), Cone::orthant(3)});
  CHECK(prod.dim() == 5);
  CHECK(prod.degree() == 5);
  CHECK(Cone::lorentz(3).dim() == 4);
}
