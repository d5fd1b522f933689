// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <utility>
#include <vector>

#include "siegel/tube.hpp"

namespace siegel {

/// An element (A, a) of the affine Lie algebra: a linear map on V plus a
/// translation. Acts on the tube domain through the complex-linear extension
/// of A and the real translation a.
struct AffineGenerator {
  Matrix linear;
  Vector translation;
};

/// A basis of a subalgebra, kept as a plain list. Independence is checked
/// where a basis is required, not on construction.
using GeneratorSet = std::vector<AffineGenerator>;

/// The affine bracket [(A,a),(B,b)] = (AB - BA, Ab - Ba).
AffineGenerator bracket(const AffineGenerator& f, const AffineGenerator& g);

/// Whether the linear part lies in the Lie algebra of the cone's linear
/// automorphism group: lorentz(d): multiples of I plus so(1,d); orthant:
/// diagonal; product: block diagonal with compatible blocks. Tolerance 1e-10
/// on the defining relations.
bool is_cone_compatible(const Cone& cone, const AffineGenerator& xi, double tol = 1e-10);

/// Raises invalid_argument unless the generators are linearly independent as
/// vectors in matrix + translation space (singular-value ratio above 1e-10).
void check_independent(const GeneratorSet& gens);

/// The induced vector field at x: linear part applied to both coordinates,
/// translation added to the real coordinate.
Tangent vector_field(const AffineGenerator& xi, const TubePoint& x);

/// The Hamiltonian momentum function of xi at x = v + iw:
///   -dot(dual_map(w), linear v + translation).
double momentum(const AffineGenerator& xi, const TubePoint& x);

/// The momentum map restricted to a generator basis: one momentum value per
/// generator. Zero exactly on the reduced level set.
Vector momentum_map(const GeneratorSet& gens, const TubePoint& x);

/// The (k x 2n) Jacobian of momentum_map in (re, im) coordinates. Row j is
///   d_v mu = -(A_j^T dual_map(w)),  d_w mu = log_char_hessian(w) (A_j v + a_j).
Matrix momentum_jacobian(const GeneratorSet& gens, const TubePoint& x);

/// The one-parameter subgroup element exp(t xi) as an affine pair (E, b),
/// computed through the exponential of the augmented (n+1) square map.
std::pair<Matrix, Vector> exp_affine(const AffineGenerator& xi, double t);

/// Applies an affine pair to a tube point: re -> E re + b, im -> E im.
/// Raises not_in_domain when the image leaves the tube domain.
TubePoint apply_affine(const std::pair<Matrix, Vector>& transform, const TubePoint& x);

}  // namespace siegel
