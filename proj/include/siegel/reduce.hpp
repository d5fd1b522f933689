// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>

#include "siegel/moment.hpp"

namespace siegel {

/// A linear subspace H of V, stored as a column-orthonormal basis together
/// with a column-orthonormal basis of the orthogonal complement. Input
/// columns are orthonormalized with modified Gram-Schmidt; rank deficiency at
/// 1e-12 is an error.
class Subspace {
 public:
  /// basis_candidate is n x k; k = 0 is the zero subspace.
  explicit Subspace(const Matrix& basis_candidate);

  static Subspace zero(int ambient_dim);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  /// n x k, orthonormal columns spanning H.
  const Matrix& basis() const { return basis_; }
  /// n x (n-k), orthonormal columns spanning the orthogonal complement.
  const Matrix& complement() const { return complement_; }

 private:
  Subspace(Matrix basis, Matrix complement);
  Matrix basis_;
  Matrix complement_;
};

/// The translation generators (0, b_j) for the columns b_j of the basis of H.
GeneratorSet translation_generators(const Subspace& h);

enum class Verdict { admissible, inadmissible, undecided };

const char* verdict_name(Verdict v);

/// Outcome of the admissibility test. For admissible H the witness is a
/// point of the complement interior to the dual cone; for inadmissible H it
/// is a unit vector of H in the closed cone (up to the decision band).
struct AdmissibilityCertificate {
  Verdict verdict;
  Vector witness;
  double witness_margin;
};

/// Decides whether H meets the closed cone only at 0, equivalently whether
/// the complement meets the open dual cone. Searches the admissible side
/// first (projected supergradient ascent of the margin over the unit ball of
/// the complement, which is a concave maximization free of spurious local
/// maxima), then the inadmissible side over the unit ball of H, then chases
/// tangent rays of H on the unit sphere. Decision band 1e-9; within the band
/// the verdict is undecided.
AdmissibilityCertificate check_admissible(const Cone& cone, const Subspace& h, std::uint64_t seed);

/// Whether w lies on the zero cone of H: the dual image of w is orthogonal
/// to H within tol. Requires w interior.
bool in_zero_cone(const Cone& cone, const Subspace& h, const Vector& w, double tol);

struct ReduceOptions {
  double grad_tol = 1e-10;
  int max_iter = 200;
  double armijo = 1e-4;
  double backtrack = 0.5;
  /// Run check_admissible before solving; disable when the caller has
  /// already certified the subspace.
  bool check_admissibility = true;
  std::uint64_t seed = 0;
};

/// The zero-momentum representative of the complexified-H orbit of x.
struct ReductionResult {
  TubePoint point;
  /// The imaginary shift into H: Im(point) = Im(x) + shift.
  Vector shift;
  /// Max-norm of the momentum map of the translation generators at point.
  double residual;
  int iterations;
};

/// Minimizes the potential along the imaginary H-slice through x by damped
/// Newton with Armijo backtracking, rejecting steps that leave the cone.
/// The real part of x is kept unchanged.
ReductionResult reduce_point(const Cone& cone, const Subspace& h, const TubePoint& x,
                             const ReduceOptions& options = {});

/// Reduces `trials` random complexified-H translates of x and returns the
/// largest max-norm deviation of the reduced imaginary parts from the first
/// trial's. Small values realize the uniqueness of the orbit representative.
double orbit_agreement(const Cone& cone, const Subspace& h, const TubePoint& x, int trials,
                       std::uint64_t seed);

enum class Membership { member, non_member, undecided };

const char* membership_name(Membership m);

/// Outcome of the quotient feasibility search for t in complement
/// coordinates: whether some h in H moves complement*t into the open cone.
struct MembershipResult {
  Membership status;
  /// The maximizing shift h (coordinates in the basis of H).
  Vector witness;
  double achieved_margin;
};

/// Decides membership of the imaginary quotient coordinate t in the
/// projected cone by maximizing the concave margin over the H-shift
/// (supergradient ascent with line search, started from 0 and from a
/// projection heuristic, finished by a bundle stationarity test). Margins
/// inside the band [-1e-9, 1e-9] give status undecided.
MembershipResult quotient_membership(const Cone& cone, const Subspace& h, const Vector& t,
                                     std::uint64_t seed);

/// Holomorphic splitting of a point of Z = V + i(cone + H) into quotient
/// coordinates (complement components) and fiber coordinates (H components).
struct SplitCoordinates {
  Vector quotient_re;
  Vector quotient_im;
  Vector fiber_re;
  Vector fiber_im;
};

/// Splits z = re + i im. Certifies Im(z) in cone + H through
/// quotient_membership and raises not_in_z on failure.
SplitCoordinates split_map(const Cone& cone, const Subspace& h, const Vector& re,
                           const Vector& im, std::uint64_t seed = 0);

/// Reduces x and returns the quotient coordinates of the representative.
/// Equals the quotient coordinates of x itself: reduction moves the point
/// only inside the complexified fiber.
SplitCoordinates reduced_coordinates(const Cone& cone, const Subspace& h, const TubePoint& x,
                                     const ReduceOptions& options = {});

/// Explicit norm bound for the closed-cone part of (K + H) when K is the
/// centered ball of radius k_radius: k_radius * |y| / lower_bound_constant(y)
/// for an admissibility witness y (in the complement, interior to the dual).
double slice_bound(const Cone& cone, const Subspace& h, double k_radius, const Vector& y);

}  // namespace siegel
