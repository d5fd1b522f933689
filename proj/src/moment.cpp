// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/moment.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace siegel {

namespace {

void check_generator_dims(const AffineGenerator& xi, int n, const char* op) {
  if (xi.linear.rows() != n || xi.linear.cols() != n || xi.translation.size() != n)
    raise(errc::dimension_mismatch, std::string(op) + ": generator size does not match");
}

}  // namespace

AffineGenerator bracket(const AffineGenerator& f, const AffineGenerator& g) {
  const int n = static_cast<int>(f.linear.rows());
  check_generator_dims(f, n, "bracket");
  check_generator_dims(g, n, "bracket");
  return {f.linear * g.linear - g.linear * f.linear,
          f.linear * g.translation - g.linear * f.translation};
}

namespace {

bool linear_part_compatible(const Cone& cone, const Matrix& a, double tol) {
  switch (cone.kind()) {
    case Cone::Kind::lorentz: {
      const int n = cone.dim();
      const double lambda = a.trace() / n;
      Matrix m = a - lambda * Matrix::Identity(n, n);
      // so(1, d) relation M^T Q + Q M = 0 with Q = diag(1, -1, ..., -1),
      // written out as Q M = -(Q M)^T.
      Matrix qm = -m;
      qm.row(0) = m.row(0);
      return (qm + qm.transpose()).cwiseAbs().maxCoeff() <= tol;
    }
    case Cone::Kind::orthant: {
      Matrix off = a;
      off.diagonal().setZero();
      return off.cwiseAbs().maxCoeff() <= tol;
    }
    case Cone::Kind::product: {
      const auto blocks = leaf_blocks(cone);
      for (const LeafBlock& bi : blocks) {
        for (const LeafBlock& bj : blocks) {
          if (bi.offset == bj.offset) continue;
          if (a.block(bi.offset, bj.offset, bi.cone->dim(), bj.cone->dim())
                  .cwiseAbs()
                  .maxCoeff() > tol)
            return false;
        }
      }
      for (const LeafBlock& b : blocks) {
        if (!linear_part_compatible(*b.cone,
                                    a.block(b.offset, b.offset, b.cone->dim(), b.cone->dim()),
                                    tol))
          return false;
      }
      return true;
    }
  }
  raise(errc::invalid_argument, "is_cone_compatible: unknown cone kind");
}

}  // namespace

bool is_cone_compatible(const Cone& cone, const AffineGenerator& xi, double tol) {
  check_generator_dims(xi, cone.dim(), "is_cone_compatible");
  return linear_part_compatible(cone, xi.linear, tol);
}

void check_independent(const GeneratorSet& gens) {
  if (gens.size() < 2) return;
  const int n = static_cast<int>(gens[0].linear.rows());
  const int flat = n * n + n;
  if (static_cast<int>(gens.size()) > flat)
    raise(errc::invalid_argument, "generator set larger than the affine algebra dimension");
  Matrix stacked(flat, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    check_generator_dims(gens[j], n, "check_independent");
    stacked.col(j).head(n * n) = Eigen::Map<const Vector>(gens[j].linear.data(), n * n);
    stacked.col(j).tail(n) = gens[j].translation;
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-10 * sv(0))
    raise(errc::invalid_argument, "generators are linearly dependent");
}

Tangent vector_field(const AffineGenerator& xi, const TubePoint& x) {
  check_generator_dims(xi, x.cone().dim(), "vector_field");
  return {xi.linear * x.re() + xi.translation, xi.linear * x.im()};
}

double momentum(const AffineGenerator& xi, const TubePoint& x) {
  check_generator_dims(xi, x.cone().dim(), "momentum");
  return -dual_map(x.cone(), x.im()).dot(xi.linear * x.re() + xi.translation);
}

Vector momentum_map(const GeneratorSet& gens, const TubePoint& x) {
  Vector mu(gens.size());
  if (gens.empty()) return mu;
  const Vector psi = dual_map(x.cone(), x.im());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    check_generator_dims(gens[j], x.cone().dim(), "momentum_map");
    mu(j) = -psi.dot(gens[j].linear * x.re() + gens[j].translation);
  }
  return mu;
}

Matrix momentum_jacobian(const GeneratorSet& gens, const TubePoint& x) {
  const int n = x.cone().dim();
  Matrix jac(gens.size(), 2 * n);
  if (gens.empty()) return jac;
  const Vector psi = dual_map(x.cone(), x.im());
  const Matrix hess = log_char_hessian(x.cone(), x.im());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    check_generator_dims(gens[j], n, "momentum_jacobian");
    jac.row(j).head(n) = -(gens[j].linear.transpose() * psi);
    jac.row(j).tail(n) = hess * (gens[j].linear * x.re() + gens[j].translation);
  }
  return jac;
}

std::pair<Matrix, Vector> exp_affine(const AffineGenerator& xi, double t) {
  const int n = static_cast<int>(xi.linear.rows());
  check_generator_dims(xi, n, "exp_affine");
  Matrix aug = Matrix::Zero(n + 1, n + 1);
  aug.topLeftCorner(n, n) = t * xi.linear;
  aug.topRightCorner(n, 1) = t * xi.translation;
  const Matrix e = aug.exp();
  return {e.topLeftCorner(n, n), e.topRightCorner(n, 1)};
}

TubePoint apply_affine(const std::pair<Matrix, Vector>& transform, const TubePoint& x) {
  const Matrix& e = transform.first;
  const Vector& b = transform.second;
  if (e.rows() != x.cone().dim() || e.cols() != x.cone().dim() || b.size() != x.cone().dim())
    raise(errc::dimension_mismatch, "apply_affine: transform size does not match");
  return TubePoint(x.cone(), e * x.re() + b, e * x.im());
}

}  // namespace siegel
