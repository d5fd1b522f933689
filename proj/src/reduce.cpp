// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/reduce.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "siegel/sampling.hpp"

namespace siegel {

namespace {

constexpr double kDecisionBand = 1e-9;

void check_cone_subspace(const Cone& cone, const Subspace& h, const char* op) {
  if (h.ambient_dim() != cone.dim())
    raise(errc::dimension_mismatch, std::string(op) + ": subspace ambient dimension mismatch");
}

void check_cone_point(const Cone& cone, const TubePoint& x, const char* op) {
  if (!same_cone(cone, x.cone()))
    raise(errc::invalid_argument, std::string(op) + ": point belongs to a different cone");
}

}  // namespace

Subspace::Subspace(Matrix basis, Matrix complement)
    : basis_(std::move(basis)), complement_(std::move(complement)) {}

Subspace::Subspace(const Matrix& basis_candidate) {
  const int n = static_cast<int>(basis_candidate.rows());
  const int k = static_cast<int>(basis_candidate.cols());
  if (n < 1) raise(errc::invalid_argument, "subspace: ambient dimension must be positive");
  if (k > n) raise(errc::invalid_argument, "subspace: more basis columns than ambient dimension");
  if (k > 0 && !basis_candidate.allFinite())
    raise(errc::invalid_argument, "subspace: non-finite entry in basis");

  Matrix b(n, k);
  for (int j = 0; j < k; ++j) {
    Vector v = basis_candidate.col(j);
    const double original = v.norm();
    // Two modified Gram-Schmidt passes keep orthogonality at rounding level.
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) v -= b.col(i).dot(v) * b.col(i);
    if (v.norm() <= 1e-12 * std::max(1.0, original))
      raise(errc::invalid_argument,
            "subspace: basis is rank deficient at column " + std::to_string(j));
    b.col(j) = v / v.norm();
  }
  basis_ = b;

  if (k == 0) {
    complement_ = Matrix::Identity(n, n);
  } else if (k == n) {
    complement_ = Matrix(n, 0);
  } else {
    Eigen::HouseholderQR<Matrix> qr(basis_);
    Matrix q = qr.householderQ();
    complement_ = q.rightCols(n - k);
  }
  // Householder column signs are arbitrary; fix the orientation so quotient
  // coordinates are reproducible: largest-magnitude entry positive.
  for (int j = 0; j < complement_.cols(); ++j) {
    int imax = 0;
    complement_.col(j).cwiseAbs().maxCoeff(&imax);
    if (complement_(imax, j) < 0.0) complement_.col(j) = -complement_.col(j);
  }
}

Subspace Subspace::zero(int ambient_dim) {
  if (ambient_dim < 1) raise(errc::invalid_argument, "subspace: ambient dimension must be positive");
  return Subspace(Matrix(ambient_dim, 0), Matrix::Identity(ambient_dim, ambient_dim));
}

GeneratorSet translation_generators(const Subspace& h) {
  const int n = h.ambient_dim();
  GeneratorSet gens;
  gens.reserve(h.dim());
  for (int j = 0; j < h.dim(); ++j) gens.push_back({Matrix::Zero(n, n), h.basis().col(j)});
  return gens;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::admissible: return "admissible";
    case Verdict::inadmissible: return "inadmissible";
    case Verdict::undecided: return "undecided";
  }
  return "unknown";
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::undecided: return "undecided";
  }
  return "unknown";
}

namespace {

// The margin is the minimum of one concave constraint per orthant
// coordinate and per lorentz leaf. The orthant constraints are linear; the
// lorentz gauge w0 - |w_bar| is itself nonsmooth where w_bar vanishes, so it
// enters through its hyperbolic regularization w0 - sqrt(|w_bar|^2 + tau^2),
// which is smooth, concave, and within tau below the gauge. Log-sum-exp at
// temperature tau over these pieces then yields a globally smooth concave
// minorant within tau * (1 + log #pieces) of the margin, which turns the
// nonsmooth concave searches below into plain gradient ascents with a gap
// the graduated temperature schedule sends to zero.
struct SmoothMargin {
  double value;
  Vector gradient;
};

SmoothMargin smooth_margin(const Cone& cone, const Vector& w, double tau) {
  std::vector<MarginPiece> pieces;
  for (const LeafBlock& lb : leaf_blocks(cone)) {
    const Cone& leaf = *lb.cone;
    if (leaf.kind() == Cone::Kind::orthant) {
      for (int i = 0; i < leaf.dim(); ++i) {
        Vector g = Vector::Zero(w.size());
        g(lb.offset + i) = 1.0;
        pieces.push_back({w(lb.offset + i), std::move(g)});
      }
    } else {
      const int d = leaf.dim() - 1;
      const auto bar = w.segment(lb.offset + 1, d);
      const double s = std::sqrt(bar.squaredNorm() + tau * tau);
      Vector g = Vector::Zero(w.size());
      g(lb.offset) = 1.0;
      g.segment(lb.offset + 1, d) = -bar / s;
      pieces.push_back({w(lb.offset) - s, std::move(g)});
    }
  }
  double mmin = std::numeric_limits<double>::infinity();
  for (const MarginPiece& p : pieces) mmin = std::min(mmin, p.value);
  double sum = 0.0;
  Vector g = Vector::Zero(w.size());
  for (const MarginPiece& p : pieces) {
    const double e = std::exp(-(p.value - mmin) / tau);
    sum += e;
    g += e * p.gradient;
  }
  return {mmin - tau * std::log(sum), g / sum};
}

struct BestPoint {
  double value = -std::numeric_limits<double>::infinity();
  Vector point;
};

// Maximizes margin(M z) over the unit ball of R^m by projected gradient
// ascent on the smoothed margin with graduated temperatures. The smoothed
// margin is concave and the ball is convex, so no start can be trapped at a
// spurious local maximum; by homogeneity the ball maximum equals
// max(0, sphere maximum) and is attained on the sphere whenever positive.
// Records the best exact margin over the normalized iterates (M has
// orthonormal columns, so normalizing z normalizes M z). Returns early once
// the best clears stop_above: a certificate needs no polish.
void ball_ascend(const Cone& cone, const Matrix& m, Vector z, BestPoint& best,
                 double stop_above) {
  const double zn = z.norm();
  if (zn <= 1e-14) return;
  if (zn > 1.0) z /= zn;
  auto record = [&](const Vector& zz) {
    const double nn = zz.norm();
    if (nn <= 1e-14) return;
    const Vector unit = zz / nn;
    const double v = margin(cone, m * unit);
    if (v > best.value) {
      best.value = v;
      best.point = unit;
    }
  };
  record(z);
  for (int stage = 1; stage <= 10 && best.value <= stop_above; ++stage) {
    const double tau = std::pow(10.0, -stage);
    for (int it = 0; it < 60 && best.value <= stop_above; ++it) {
      const SmoothMargin e = smooth_margin(cone, m * z, tau);
      const Vector g = m.transpose() * e.gradient;
      if (g.norm() <= std::max(1e-14, 1e-3 * tau)) break;
      double alpha = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 60; ++bt) {
        Vector cand = z + alpha * g;
        const double cn = cand.norm();
        if (cn > 1.0) cand /= cn;
        const double along = g.dot(cand - z);
        if (along > 0.0 && smooth_margin(cone, m * cand, tau).value >= e.value + 1e-4 * along) {
          z = cand;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
      record(z);
    }
  }
}

// Decides the sign of the sphere maximum of margin(M z) through the ball
// relaxation: the projection of the canonical interior point plus two seeded
// random starts; the two sphere points are evaluated exactly when m = 1.
// Stops at the first start whose normalized margin clears stop_above.
BestPoint ball_maximize(const Cone& cone, const Matrix& m, Rng& rng, double stop_above) {
  const int cols = static_cast<int>(m.cols());
  BestPoint best;
  if (cols == 0) return best;
  if (cols == 1) {
    Vector z(1);
    z(0) = 1.0;
    for (double s : {1.0, -1.0}) {
      const double v = margin(cone, m * (s * z));
      if (v > best.value) {
        best.value = v;
        best.point = s * z;
      }
    }
    return best;
  }
  ball_ascend(cone, m, m.transpose() * cone.canonical_interior(), best, stop_above);
  for (int start = 0; start < 2 && best.value <= stop_above; ++start)
    ball_ascend(cone, m, rng.gaussian(cols), best, stop_above);
  return best;
}

// Maximizes margin(M z) over the unit sphere by Riemannian gradient ascent
// on the smoothed margin with graduated temperatures, recording the best
// exact margin seen. M has orthonormal columns. Returns early once the best
// exact margin exceeds stop_above: a certificate needs no polish. Unlike the
// ball relaxation this can be trapped at spurious local maxima, so it only
// serves as the fallback hunting tangent rays, whose sphere maximum is
// exactly zero and therefore invisible to the ball ascent.
void sphere_ascend(const Cone& cone, const Matrix& m, Vector z, BestPoint& best,
                   double stop_above) {
  const double zn = z.norm();
  if (zn <= 1e-14) return;
  z /= zn;
  auto record = [&](const Vector& zz) {
    const double v = margin(cone, m * zz);
    if (v > best.value) {
      best.value = v;
      best.point = zz;
    }
  };
  record(z);
  for (int stage = 1; stage <= 10; ++stage) {
    if (best.value > stop_above) return;
    const double tau = std::pow(10.0, -stage);
    for (int it = 0; it < 60; ++it) {
      const SmoothMargin e = smooth_margin(cone, m * z, tau);
      Vector g = m.transpose() * e.gradient;
      g -= g.dot(z) * z;
      const double gn = g.norm();
      if (gn <= std::max(1e-14, 1e-3 * tau)) break;
      double alpha = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 60; ++bt) {
        const Vector cand = (z + alpha * g).normalized();
        if (smooth_margin(cone, m * cand, tau).value >= e.value + 1e-4 * alpha * gn * gn) {
          z = cand;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    record(z);
  }
}

// Multi-start wrapper for the sphere fallback: the projection of the
// canonical interior point plus 8 * m seeded random starts; the two sphere
// points are evaluated exactly when m = 1. Stops at the first start whose
// margin clears stop_above.
BestPoint sphere_maximize(const Cone& cone, const Matrix& m, Rng& rng, double stop_above) {
  const int cols = static_cast<int>(m.cols());
  BestPoint best;
  if (cols == 0) return best;
  if (cols == 1) {
    Vector z(1);
    z(0) = 1.0;
    for (double s : {1.0, -1.0}) {
      const double v = margin(cone, m * (s * z));
      if (v > best.value) {
        best.value = v;
        best.point = s * z;
      }
    }
    return best;
  }
  sphere_ascend(cone, m, m.transpose() * cone.canonical_interior(), best, stop_above);
  for (int start = 0; start < 8 * cols && best.value <= stop_above; ++start)
    sphere_ascend(cone, m, rng.gaussian(cols), best, stop_above);
  return best;
}

// Maximizes the concave function h -> margin(base + B h) over all of R^k by
// gradient ascent on the graduated smoothed margin. Unconstrained concave
// ascent converges to the global supremum, which is attained because the
// subspace meets the closed cone only at the origin. Returns early once the
// exact margin clears stop_above (a membership certificate needs no polish)
// and skips the cold tail of the temperature schedule when the maximum has
// clearly settled far below zero.
BestPoint free_ascend(const Cone& cone, const Vector& base, const Matrix& b,
                      const std::vector<Vector>& starts, double stop_above) {
  BestPoint best;
  const double scale = 1.0 + base.cwiseAbs().maxCoeff();
  for (const Vector& start : starts) {
    if (best.value > stop_above) break;
    Vector h = start;
    const double v0 = margin(cone, base + b * h);
    if (v0 > best.value) {
      best.value = v0;
      best.point = h;
    }
    double prev_stage_value = v0;
    for (int stage = 1; stage <= 12; ++stage) {
      if (best.value > stop_above) break;
      const double tau = scale * std::pow(10.0, -stage);
      for (int it = 0; it < 80; ++it) {
        const SmoothMargin e = smooth_margin(cone, base + b * h, tau);
        const Vector g = b.transpose() * e.gradient;
        const double gn = g.norm();
        if (gn <= std::max(1e-14, 1e-3 * tau / scale)) break;
        double alpha = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
          const Vector cand = h + alpha * g;
          if (smooth_margin(cone, base + b * cand, tau).value >=
              e.value + 1e-4 * alpha * gn * gn) {
            h = cand;
            moved = true;
            break;
          }
          alpha *= 0.5;
        }
        if (!moved) break;
      }
      const double v = margin(cone, base + b * h);
      if (v > best.value) {
        best.value = v;
        best.point = h;
      }
      // Settled far on the negative side: the remaining smoothing gap
      // (tau * log #pieces) cannot move the verdict across the band.
      if (stage >= 4 && tau <= 1e-4 * scale && v < -1e-2 * scale &&
          std::abs(v - prev_stage_value) <= 1e-6 * scale)
        break;
      prev_stage_value = v;
    }
  }
  return best;
}

}  // namespace

AdmissibilityCertificate check_admissible(const Cone& cone, const Subspace& h,
                                          std::uint64_t seed) {
  check_cone_subspace(cone, h, "check_admissible");
  const int n = cone.dim();
  const int k = h.dim();
  Rng rng(derive_seed(seed, 0));

  // Side one: a point of the complement interior to the dual cone certifies
  // admissibility no matter how it was found.
  double dual_best = -std::numeric_limits<double>::infinity();
  if (k < n) {
    const BestPoint best = ball_maximize(cone, h.complement(), rng, kDecisionBand);
    dual_best = best.value;
    if (best.value > kDecisionBand)
      return {Verdict::admissible, h.complement() * best.point, best.value};
  }

  // Side two: a unit vector of H inside the cone certifies inadmissibility.
  if (k > 0) {
    const BestPoint best = ball_maximize(cone, h.basis(), rng, kDecisionBand);
    if (best.value > kDecisionBand)
      return {Verdict::inadmissible, h.basis() * best.point, best.value};

    // Tangent rays: H meets the closed cone along boundary rays only, so the
    // sphere maximum is exactly zero and the ball ascent cannot surface it.
    // Chase it on the sphere directly; values inside the band still certify
    // a closure ray up to the band.
    const BestPoint graze = sphere_maximize(cone, h.basis(), rng, -kDecisionBand);
    if (graze.value >= -kDecisionBand)
      return {Verdict::inadmissible, h.basis() * graze.point, graze.value};
  }

  return {Verdict::undecided, Vector(), dual_best};
}

bool in_zero_cone(const Cone& cone, const Subspace& h, const Vector& w, double tol) {
  check_cone_subspace(cone, h, "in_zero_cone");
  if (w.size() != cone.dim()) raise(errc::dimension_mismatch, "in_zero_cone: vector length");
  if (margin(cone, w) <= kInteriorTol)
    raise(errc::not_in_cone, "in_zero_cone: point is not interior to the cone");
  if (h.dim() == 0) return true;
  return (h.basis().transpose() * dual_map(cone, w)).lpNorm<Eigen::Infinity>() <= tol;
}

ReductionResult reduce_point(const Cone& cone, const Subspace& h, const TubePoint& x,
                             const ReduceOptions& options) {
  check_cone_subspace(cone, h, "reduce_point");
  check_cone_point(cone, x, "reduce_point");
  if (options.check_admissibility) {
    const AdmissibilityCertificate cert = check_admissible(cone, h, options.seed);
    if (cert.verdict == Verdict::inadmissible)
      raise(errc::not_admissible, "reduce_point: subspace meets the closed cone");
    if (cert.verdict == Verdict::undecided)
      raise(errc::undecided, "reduce_point: admissibility within the decision band");
  }

  const int k = h.dim();
  const Matrix& b = h.basis();
  const Vector& w0 = x.im();

  Vector c = Vector::Zero(k);
  double f = log_char(cone, w0);
  int iterations = 0;
  bool converged = false;
  for (int iter = 0; iter <= options.max_iter; ++iter) {
    const Vector w = w0 + b * c;
    const Vector grad = -(b.transpose() * dual_map(cone, w));
    if (k == 0 || grad.lpNorm<Eigen::Infinity>() <= options.grad_tol) {
      iterations = iter;
      converged = true;
      break;
    }
    if (iter == options.max_iter) {
      iterations = iter;
      break;
    }
    const Matrix hess = b.transpose() * log_char_hessian(cone, w) * b;
    Vector p = hess.llt().solve(-grad);
    double gp = grad.dot(p);
    bool newton_dir = p.allFinite() && gp < 0.0;
    if (!newton_dir) {
      p = -grad;  // steepest descent fallback; the slice Hessian is positive definite
      gp = grad.dot(p);
    }
    // Once the Newton decrement is in the quadratic basin the predicted
    // decrease sits below the rounding noise of the barrier value and the
    // Armijo test can no longer certify it; the unit Newton step is then
    // accepted on feasibility alone.
    const bool quadratic_phase = newton_dir && -gp <= 1e-12;
    double alpha = 1.0;
    bool accepted = false;
    while (alpha >= 1e-16) {
      const Vector cand = c + alpha * p;
      if (margin(cone, w0 + b * cand) > kInteriorTol) {
        const double fc = log_char(cone, w0 + b * cand);
        if (quadratic_phase || fc <= f + options.armijo * alpha * gp) {
          c = cand;
          f = fc;
          accepted = true;
          break;
        }
      }
      alpha *= options.backtrack;
    }
    if (!accepted) {
      iterations = iter;
      break;
    }
  }
  if (!converged)
    raise(errc::max_iterations, "reduce_point: Newton did not reach the gradient tolerance");

  const Vector w = w0 + b * c;
  const double residual =
      (k == 0) ? 0.0 : (b.transpose() * dual_map(cone, w)).lpNorm<Eigen::Infinity>();
  return {TubePoint(cone, x.re(), w), b * c, residual, iterations};
}

double orbit_agreement(const Cone& cone, const Subspace& h, const TubePoint& x, int trials,
                       std::uint64_t seed) {
  check_cone_subspace(cone, h, "orbit_agreement");
  check_cone_point(cone, x, "orbit_agreement");
  if (trials <= 0) return 0.0;
  const AdmissibilityCertificate cert = check_admissible(cone, h, seed);
  if (cert.verdict == Verdict::inadmissible)
    raise(errc::not_admissible, "orbit_agreement: subspace meets the closed cone");
  if (cert.verdict == Verdict::undecided)
    raise(errc::undecided, "orbit_agreement: admissibility within the decision band");

  ReduceOptions opts;
  opts.check_admissibility = false;
  const int k = h.dim();
  Rng rng(derive_seed(seed, 1));
  Vector base_im;
  double worst = 0.0;
  for (int j = 0; j < trials; ++j) {
    const Vector a = rng.gaussian(k);
    Vector bshift = rng.gaussian(k);
    Vector w = x.im() + h.basis() * bshift;
    int guard = 0;
    while (margin(cone, w) <= kInteriorTol) {
      // Halving the shift reaches the open cone: the start is interior and
      // the margin is concave along the segment.
      bshift *= 0.5;
      w = x.im() + h.basis() * bshift;
      if (++guard > 200) raise(errc::sampling_failure, "orbit_agreement: shift never feasible");
    }
    const TubePoint z(cone, x.re() + h.basis() * a, w);
    const ReductionResult r = reduce_point(cone, h, z, opts);
    if (j == 0)
      base_im = r.point.im();
    else
      worst = std::max(worst, (r.point.im() - base_im).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

MembershipResult quotient_membership(const Cone& cone, const Subspace& h, const Vector& t,
                                     std::uint64_t seed) {
  check_cone_subspace(cone, h, "quotient_membership");
  const int k = h.dim();
  if (t.size() != cone.dim() - k)
    raise(errc::dimension_mismatch,
          "quotient_membership: t length must match the complement dimension");
  const Vector base = h.complement() * t;

  // The apex: for admissible H no shift reaches the open cone and the
  // supremum 0 is attained at h = 0, outside the open set.
  if (t.size() == 0 || t.cwiseAbs().maxCoeff() == 0.0)
    return {Membership::non_member, Vector::Zero(k), 0.0};

  double value;
  Vector witness;
  if (k == 0) {
    value = margin(cone, base);
    witness = Vector(0);
  } else {
    std::vector<Vector> starts;
    starts.push_back(Vector::Zero(k));
    const Vector projected = project_closure(cone, base);
    starts.push_back(h.basis().transpose() * (projected - base));
    Rng rng(derive_seed(seed, 2));
    const double spread = 1.0 + t.cwiseAbs().maxCoeff();
    starts.push_back(spread * rng.gaussian(k));
    starts.push_back(spread * rng.gaussian(k));
    const BestPoint best = free_ascend(cone, base, h.basis(), starts, kDecisionBand);
    value = best.value;
    witness = best.point;
  }

  Membership status;
  if (value > kDecisionBand)
    status = Membership::member;
  else if (value < -kDecisionBand)
    status = Membership::non_member;
  else
    status = Membership::undecided;
  return {status, witness, value};
}

SplitCoordinates split_map(const Cone& cone, const Subspace& h, const Vector& re,
                           const Vector& im, std::uint64_t seed) {
  check_cone_subspace(cone, h, "split_map");
  if (re.size() != cone.dim() || im.size() != cone.dim())
    raise(errc::dimension_mismatch, "split_map: coordinate length does not match the cone");
  const Vector t = h.complement().transpose() * im;
  // Interior imaginary parts are in the sum trivially; the membership search
  // only decides the remaining cases.
  if (margin(cone, im) <= kInteriorTol) {
    const MembershipResult mem = quotient_membership(cone, h, t, seed);
    if (mem.status == Membership::non_member)
      raise(errc::not_in_z, "split_map: imaginary part is not in cone + H");
    if (mem.status == Membership::undecided)
      raise(errc::undecided, "split_map: membership within the decision band");
  }
  return {h.complement().transpose() * re, t, h.basis().transpose() * re,
          h.basis().transpose() * im};
}

SplitCoordinates reduced_coordinates(const Cone& cone, const Subspace& h, const TubePoint& x,
                                     const ReduceOptions& options) {
  const ReductionResult r = reduce_point(cone, h, x, options);
  const Matrix& ct = h.complement().transpose();
  const Matrix& bt = h.basis().transpose();
  return {ct * r.point.re(), ct * r.point.im(), bt * r.point.re(), bt * r.point.im()};
}

double slice_bound(const Cone& cone, const Subspace& h, double k_radius, const Vector& y) {
  check_cone_subspace(cone, h, "slice_bound");
  if (y.size() != cone.dim()) raise(errc::dimension_mismatch, "slice_bound: witness length");
  if (!(k_radius >= 0.0)) raise(errc::invalid_argument, "slice_bound: radius must be nonnegative");
  if (dual_margin(cone, y) <= kInteriorTol)
    raise(errc::not_in_dual_cone, "slice_bound: witness is not interior to the dual cone");
  if (h.dim() > 0 &&
      (h.basis().transpose() * y).lpNorm<Eigen::Infinity>() > 1e-9 * (1.0 + y.norm()))
    raise(errc::invalid_argument, "slice_bound: witness is not orthogonal to the subspace");
  return k_radius * y.norm() / lower_bound_constant(cone, y);
}

}  // namespace siegel
