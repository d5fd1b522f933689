// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/liecond.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "siegel/sampling.hpp"

namespace siegel {

namespace {

constexpr double kZeroSetTol = 1e-8;
constexpr double kRankCutoffRel = 1e-9;
constexpr double kSpanTol = 1e-6;
constexpr double kBracketTol = 1e-8;
constexpr double kOrbitTol = 1e-6;

// Null space columns of a matrix by full SVD with a relative cutoff; raises
// when singular values fall inside the ambiguity band around the cutoff.
Matrix null_space(const Matrix& a, const char* op) {
  const int cols = static_cast<int>(a.cols());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (smax == 0.0) return Matrix::Identity(cols, cols);
  const double cutoff = kRankCutoffRel * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > 0.1 * cutoff && sv(i) < 10.0 * cutoff)
      raise(errc::rank_ambiguous,
            std::string(op) + ": singular value inside the rank decision band");
    if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

// Orthonormal basis of the column span, rank-revealed by SVD.
Matrix span_basis(const Matrix& a) {
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return Matrix(a.rows(), 0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankCutoffRel * smax) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix complex_structure(int n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Matrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  return j;
}

Vector flatten_tangent(const Tangent& t) {
  Vector v(t.re.size() + t.im.size());
  v << t.re, t.im;
  return v;
}

Vector flatten_generator(const AffineGenerator& g) {
  const int n = static_cast<int>(g.linear.rows());
  Vector v(n * n + n);
  v.head(n * n) = Eigen::Map<const Vector>(g.linear.data(), n * n);
  v.tail(n) = g.translation;
  return v;
}

void check_zero_set(const GeneratorSet& gens, const TubePoint& x, const char* op) {
  if (gens.empty()) return;
  if (momentum_map(gens, x).lpNorm<Eigen::Infinity>() > kZeroSetTol)
    raise(errc::not_on_zero_set, std::string(op) + ": point is off the zero level set");
}

}  // namespace

Matrix kernel_basis(const GeneratorSet& gens, const TubePoint& x) {
  const int n = x.cone().dim();
  check_zero_set(gens, x, "kernel_basis");
  if (gens.empty()) return Matrix::Identity(2 * n, 2 * n);
  return null_space(momentum_jacobian(gens, x), "kernel_basis");
}

Matrix w_space(const GeneratorSet& gens, const TubePoint& x) {
  const int n = x.cone().dim();
  const Matrix k = kernel_basis(gens, x);
  const Matrix pk = k * k.transpose();
  const Matrix jmat = complex_structure(n);
  Matrix stacked(4 * n, 2 * n);
  stacked.topRows(2 * n) = Matrix::Identity(2 * n, 2 * n) - pk;
  stacked.bottomRows(2 * n) = (Matrix::Identity(2 * n, 2 * n) - pk) * jmat;
  return null_space(stacked, "w_space");
}

LieConditionReport verify_lie_condition(const Cone& cone, const GeneratorSet& gens,
                                        const TubePoint& x0, const GeneratorSet& s, int samples,
                                        std::uint64_t seed) {
  if (!same_cone(cone, x0.cone()))
    raise(errc::invalid_argument, "verify_lie_condition: point belongs to a different cone");
  const int n = cone.dim();
  for (const AffineGenerator& xi : s)
    if (!is_cone_compatible(cone, xi))
      raise(errc::invalid_argument,
            "verify_lie_condition: candidate generator is not cone compatible");
  check_independent(gens);
  check_independent(s);
  check_zero_set(gens, x0, "verify_lie_condition");

  LieConditionReport rep;
  const Matrix kernel = kernel_basis(gens, x0);
  const Matrix w = w_space(gens, x0);
  rep.dim_kernel = static_cast<int>(kernel.cols());
  rep.dim_w = static_cast<int>(w.cols());

  const int q = static_cast<int>(s.size());
  Matrix dirs(2 * n, q);
  for (int j = 0; j < q; ++j) dirs.col(j) = flatten_tangent(vector_field(s[j], x0));
  const Matrix sbasis = span_basis(dirs);

  // Largest principal angle between the candidate orbit directions and the
  // maximal complex subspace; a dimension mismatch can never pass.
  const bool dims_match = sbasis.cols() == w.cols();
  if (sbasis.cols() == 0 && w.cols() == 0) {
    rep.span_residual = 0.0;
  } else if (!dims_match || sbasis.cols() == 0 || w.cols() == 0) {
    rep.span_residual = M_PI / 2.0;
  } else {
    // Hybrid cosine/sine formula: the cosine (acos of the smallest singular
    // value of W^T S) flattens below sqrt(eps), so small angles are taken
    // from the projection defect instead.
    Eigen::JacobiSVD<Matrix> cos_svd(Matrix(w.transpose() * sbasis));
    const double smin = std::clamp(cos_svd.singularValues().minCoeff(), -1.0, 1.0);
    Eigen::JacobiSVD<Matrix> sin_svd(Matrix(sbasis - w * (w.transpose() * sbasis)));
    const double smax = std::clamp(sin_svd.singularValues().maxCoeff(), 0.0, 1.0);
    rep.span_residual = smax * smax <= 0.5 ? std::asin(smax) : std::acos(smin);
  }

  if (q >= 2) {
    Matrix flat(n * n + n, q);
    for (int j = 0; j < q; ++j) flat.col(j) = flatten_generator(s[j]);
    const Matrix fbasis = span_basis(flat);
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        const Vector br = flatten_generator(bracket(s[i], s[j]));
        const double dist = (br - fbasis * (fbasis.transpose() * br)).norm();
        rep.bracket_residual = std::max(rep.bracket_residual, dist);
      }
    }
  }

  if (q > 0 && samples > 0) {
    Rng rng(derive_seed(seed, 3));
    const long long budget = 100LL * samples;
    long long draws = 0;
    int accepted = 0;
    while (accepted < samples) {
      if (++draws > budget)
        raise(errc::sampling_failure, "verify_lie_condition: orbit rejection budget exhausted");
      const int length = rng.uniform_int(1, 3);
      Vector re = x0.re();
      Vector im = x0.im();
      bool ok = true;
      for (int step = 0; step < length; ++step) {
        const int idx = rng.uniform_int(0, q - 1);
        const double t = rng.uniform(-2.0, 2.0);
        const auto [e, bvec] = exp_affine(s[idx], t);
        re = e * re + bvec;
        im = e * im;
        if (margin(cone, im) <= kInteriorTol) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++accepted;
      if (!gens.empty()) {
        const TubePoint z(cone, re, im);
        rep.orbit_residual =
            std::max(rep.orbit_residual, momentum_map(gens, z).lpNorm<Eigen::Infinity>());
      }
    }
  }

  // Local saturation: subgroup directions plus candidate directions fill the
  // kernel at the base point.
  Matrix combined(2 * n, gens.size() + q);
  for (std::size_t j = 0; j < gens.size(); ++j)
    combined.col(j) = flatten_tangent(vector_field(gens[j], x0));
  combined.rightCols(q) = dirs;
  rep.saturated = span_basis(combined).cols() == rep.dim_kernel;

  if (!dims_match) {
    rep.pass = false;
    rep.reason = "span";
  } else if (rep.span_residual > kSpanTol) {
    rep.pass = false;
    rep.reason = "span";
  } else if (rep.bracket_residual > kBracketTol) {
    rep.pass = false;
    rep.reason = "bracket";
  } else if (rep.orbit_residual > kOrbitTol) {
    rep.pass = false;
    rep.reason = "orbit";
  } else {
    rep.pass = true;
  }
  return rep;
}

}  // namespace siegel
