// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <vector>

#include "siegel/error.hpp"

namespace siegel {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Points with margin below this threshold are treated as outside the open cone.
inline constexpr double kInteriorTol = 1e-12;

/// A proper open convex cone from the closed-form catalog.
///
/// Supported kinds:
///   - lorentz(d):  { w in R^{d+1} | w_0 > sqrt(w_1^2 + ... + w_d^2) }
///   - orthant(n):  { w in R^n | w_i > 0 }
///   - product:     direct products of the above, stored as concatenated blocks
///
/// The inner product is the Euclidean dot product in the stored coordinates;
/// lorentz and orthant cones are self-dual for it. The homogeneity degree of
/// the characteristic function equals the ambient dimension.
class Cone {
 public:
  enum class Kind { lorentz, orthant, product };

  static Cone lorentz(int d);
  static Cone orthant(int n);
  static Cone product(std::vector<Cone> factors);

  Kind kind() const { return kind_; }
  /// Ambient dimension dim V (d+1 for lorentz(d)).
  int dim() const { return dim_; }
  /// Homogeneity degree of the characteristic function; equals dim().
  int degree() const { return dim_; }
  /// The d parameter of a lorentz cone.
  int lorentz_d() const;
  const std::vector<Cone>& factors() const;

  /// A fixed interior point with margin exactly 1 (also interior to the dual).
  Vector canonical_interior() const;

 private:
  Cone(Kind kind, int dim) : kind_(kind), dim_(dim) {}
  Kind kind_;
  int dim_ = 0;
  std::vector<Cone> factors_;
};

/// One non-product leaf of a (possibly nested) product cone, with the offset
/// of its coordinate block. Pointers stay valid while the cone is alive.
struct LeafBlock {
  const Cone* cone;
  int offset;
};

/// The leaf cones of `cone` in coordinate order; a single block for
/// non-product kinds.
std::vector<LeafBlock> leaf_blocks(const Cone& cone);

/// Structural equality of cone descriptions.
bool same_cone(const Cone& a, const Cone& b);

/// Concave gauge of the cone: positive on the interior, zero on the boundary,
/// negative outside. Positively homogeneous of degree 1.
double margin(const Cone& cone, const Vector& w);

/// Gauge of the open dual cone; coincides with margin for these self-dual kinds.
double dual_margin(const Cone& cone, const Vector& y);

/// log of the characteristic function, up to an additive constant per kind:
///   orthant:    -sum_i log w_i                        (constant 0)
///   lorentz(d): -((d+1)/2) log(w_0^2 - |w_bar|^2)     (drops log c_d)
///   product:    sum over factors
/// Strictly convex on the cone, blows up at the boundary.
double log_char(const Cone& cone, const Vector& w);

/// The dual map w -> -grad log_char(w). Maps the cone bijectively onto its
/// dual and satisfies dot(w, dual_map(w)) == dim V.
Vector dual_map(const Cone& cone, const Vector& w);

/// Hessian of log_char; symmetric positive definite on the cone.
Matrix log_char_hessian(const Cone& cone, const Vector& w);

/// Euclidean projection onto the closed cone.
Vector project_closure(const Cone& cone, const Vector& x);

/// The largest p > 0 with p*|w| <= dot(w, y) for every w in the closed cone,
/// i.e. min of the linear functional over the unit sphere slice of the closure.
/// Requires y interior to the dual cone.
double lower_bound_constant(const Cone& cone, const Vector& y);

/// A supergradient of margin at w (the gradient wherever margin is smooth).
Vector margin_supergradient(const Cone& cone, const Vector& w);

/// One smooth piece of margin active within `eps` of the minimum, as
/// (value, gradient) pairs. Used by the bundle refinement in concave searches.
struct MarginPiece {
  double value;
  Vector gradient;
};
std::vector<MarginPiece> margin_active_pieces(const Cone& cone, const Vector& w, double eps);

}  // namespace siegel
