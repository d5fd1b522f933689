// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include "siegel/cone.hpp"

namespace siegel {

/// A real tangent vector at a point of the tube domain, split into the
/// derivative of the real and imaginary coordinates.
struct Tangent {
  Vector re;
  Vector im;
};

/// A point x = v + iw of the tube domain T = V + i(cone). Construction
/// validates that the imaginary part is interior to the cone.
class TubePoint {
 public:
  TubePoint(Cone cone, Vector re, Vector im);

  const Cone& cone() const { return cone_; }
  const Vector& re() const { return re_; }
  const Vector& im() const { return im_; }

 private:
  Cone cone_;
  Vector re_;
  Vector im_;
};

/// The Kaehler potential log of the characteristic function of Im x.
/// Depends on the imaginary part only.
double potential(const TubePoint& x);

/// The complex structure J: (re, im) -> (-im, re); J o J = -identity.
Tangent complex_mul_i(const Tangent& u);

/// Finite-difference oracle for the Kaehler form -dd^c(potential) evaluated
/// at x on constant vector fields u and w. Built from potential values only;
/// shrinks the stencil up to 3 times if it exits the domain, then fails.
double kahler_form_oracle(const TubePoint& x, const Tangent& u, const Tangent& w);

}  // namespace siegel
