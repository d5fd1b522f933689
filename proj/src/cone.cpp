// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/cone.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace siegel {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::not_in_cone: return "not in cone";
    case errc::not_in_dual_cone: return "not in dual cone";
    case errc::not_in_domain: return "not in domain";
    case errc::not_admissible: return "not admissible";
    case errc::max_iterations: return "max iterations";
    case errc::undecided: return "undecided";
    case errc::not_on_zero_set: return "not on zero set";
    case errc::rank_ambiguous: return "rank ambiguous";
    case errc::not_in_z: return "not in Z";
    case errc::invalid_argument: return "invalid argument";
    case errc::invalid_config: return "invalid config";
    case errc::sampling_failure: return "sampling failure";
  }
  return "unknown error";
}

Cone Cone::lorentz(int d) {
  if (d < 1) raise(errc::invalid_argument, "lorentz cone needs d >= 1");
  return Cone(Kind::lorentz, d + 1);
}

Cone Cone::orthant(int n) {
  if (n < 1) raise(errc::invalid_argument, "orthant cone needs n >= 1");
  return Cone(Kind::orthant, n);
}

Cone Cone::product(std::vector<Cone> factors) {
  if (factors.empty()) raise(errc::invalid_argument, "product cone needs at least one factor");
  int total = 0;
  for (const Cone& f : factors) total += f.dim();
  Cone c(Kind::product, total);
  c.factors_ = std::move(factors);
  return c;
}

int Cone::lorentz_d() const {
  if (kind_ != Kind::lorentz) raise(errc::invalid_argument, "not a lorentz cone");
  return dim_ - 1;
}

const std::vector<Cone>& Cone::factors() const {
  if (kind_ != Kind::product) raise(errc::invalid_argument, "not a product cone");
  return factors_;
}

Vector Cone::canonical_interior() const {
  Vector w = Vector::Zero(dim_);
  switch (kind_) {
    case Kind::lorentz:
      w(0) = 1.0;
      break;
    case Kind::orthant:
      w.setOnes();
      break;
    case Kind::product: {
      int off = 0;
      for (const Cone& f : factors_) {
        w.segment(off, f.dim()) = f.canonical_interior();
        off += f.dim();
      }
      break;
    }
  }
  return w;
}

namespace {

void check_dim(const Cone& cone, const Vector& w, const char* op) {
  if (w.size() != cone.dim())
    raise(errc::dimension_mismatch, std::string(op) + ": vector has length " +
                                        std::to_string(w.size()) + ", cone dimension is " +
                                        std::to_string(cone.dim()));
}

// Visits the leaf cones of a (possibly nested) product with their offsets.
template <class F>
void for_each_leaf(const Cone& cone, int offset, F&& f) {
  if (cone.kind() == Cone::Kind::product) {
    int off = offset;
    for (const Cone& fac : cone.factors()) {
      for_each_leaf(fac, off, f);
      off += fac.dim();
    }
  } else {
    f(cone, offset);
  }
}

double lorentz_q(const Vector& w) { return w(0) * w(0) - w.tail(w.size() - 1).squaredNorm(); }

}  // namespace

std::vector<LeafBlock> leaf_blocks(const Cone& cone) {
  std::vector<LeafBlock> blocks;
  for_each_leaf(cone, 0, [&](const Cone& leaf, int off) { blocks.push_back({&leaf, off}); });
  return blocks;
}

bool same_cone(const Cone& a, const Cone& b) {
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  if (a.kind() != Cone::Kind::product) return true;
  if (a.factors().size() != b.factors().size()) return false;
  for (std::size_t i = 0; i < a.factors().size(); ++i)
    if (!same_cone(a.factors()[i], b.factors()[i])) return false;
  return true;
}

double margin(const Cone& cone, const Vector& w) {
  check_dim(cone, w, "margin");
  if (!w.allFinite()) raise(errc::invalid_argument, "margin: non-finite entry");
  switch (cone.kind()) {
    case Cone::Kind::lorentz:
      return w(0) - w.tail(w.size() - 1).norm();
    case Cone::Kind::orthant:
      return w.minCoeff();
    case Cone::Kind::product: {
      double m = std::numeric_limits<double>::infinity();
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        m = std::min(m, margin(leaf, w.segment(off, leaf.dim())));
      });
      return m;
    }
  }
  raise(errc::invalid_argument, "margin: unknown cone kind");
}

double dual_margin(const Cone& cone, const Vector& y) {
  check_dim(cone, y, "dual_margin");
  // Self-dual kinds under the Euclidean inner product.
  return margin(cone, y);
}

double log_char(const Cone& cone, const Vector& w) {
  check_dim(cone, w, "log_char");
  if (margin(cone, w) <= kInteriorTol) raise(errc::not_in_cone, "log_char: point is not interior to the cone");
  switch (cone.kind()) {
    case Cone::Kind::lorentz:
      return -0.5 * cone.dim() * std::log(lorentz_q(w));
    case Cone::Kind::orthant:
      return -w.array().log().sum();
    case Cone::Kind::product: {
      double s = 0.0;
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        s += log_char(leaf, w.segment(off, leaf.dim()));
      });
      return s;
    }
  }
  raise(errc::invalid_argument, "log_char: unknown cone kind");
}

Vector dual_map(const Cone& cone, const Vector& w) {
  check_dim(cone, w, "dual_map");
  if (margin(cone, w) <= kInteriorTol) raise(errc::not_in_cone, "dual_map: point is not interior to the cone");
  switch (cone.kind()) {
    case Cone::Kind::lorentz: {
      const double scale = cone.dim() / lorentz_q(w);
      Vector y = -scale * w;
      y(0) = scale * w(0);
      return y;
    }
    case Cone::Kind::orthant:
      return w.cwiseInverse();
    case Cone::Kind::product: {
      Vector y(cone.dim());
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        y.segment(off, leaf.dim()) = dual_map(leaf, w.segment(off, leaf.dim()));
      });
      return y;
    }
  }
  raise(errc::invalid_argument, "dual_map: unknown cone kind");
}

Matrix log_char_hessian(const Cone& cone, const Vector& w) {
  check_dim(cone, w, "log_char_hessian");
  if (margin(cone, w) <= kInteriorTol) raise(errc::not_in_cone, "log_char_hessian: point is not interior to the cone");
  switch (cone.kind()) {
    case Cone::Kind::lorentz: {
      const int n = cone.dim();
      const double q = lorentz_q(w);
      Vector qw = -w;
      qw(0) = w(0);  // Q w with Q = diag(1,-1,...,-1)
      Matrix h = (2.0 * n / (q * q)) * (qw * qw.transpose());
      h.diagonal().array() += n / q;
      h(0, 0) -= 2.0 * n / q;
      return h;
    }
    case Cone::Kind::orthant:
      return w.array().square().inverse().matrix().asDiagonal();
    case Cone::Kind::product: {
      Matrix h = Matrix::Zero(cone.dim(), cone.dim());
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        h.block(off, off, leaf.dim(), leaf.dim()) =
            log_char_hessian(leaf, w.segment(off, leaf.dim()));
      });
      return h;
    }
  }
  raise(errc::invalid_argument, "log_char_hessian: unknown cone kind");
}

Vector project_closure(const Cone& cone, const Vector& x) {
  check_dim(cone, x, "project_closure");
  switch (cone.kind()) {
    case Cone::Kind::lorentz: {
      const double s = x(0);
      const double r = x.tail(x.size() - 1).norm();
      if (s >= r) return x;        // already in the closure
      if (s <= -r) return Vector::Zero(x.size());  // in the polar cone, project to apex
      Vector p(x.size());
      const double a = 0.5 * (s + r);
      p(0) = a;
      p.tail(x.size() - 1) = (a / r) * x.tail(x.size() - 1);
      return p;
    }
    case Cone::Kind::orthant:
      return x.cwiseMax(0.0);
    case Cone::Kind::product: {
      Vector p(cone.dim());
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        p.segment(off, leaf.dim()) = project_closure(leaf, x.segment(off, leaf.dim()));
      });
      return p;
    }
  }
  raise(errc::invalid_argument, "project_closure: unknown cone kind");
}

namespace {

// min of f over [a, b] by golden-section search, returning the best of the
// bracket and both endpoints.
template <class F>
double golden_min(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  const double fa = f(a), fb = f(b);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min({fa, fb, f1, f2});
}

}  // namespace

double lower_bound_constant(const Cone& cone, const Vector& y) {
  check_dim(cone, y, "lower_bound_constant");
  if (dual_margin(cone, y) <= kInteriorTol)
    raise(errc::not_in_dual_cone, "lower_bound_constant: y not interior to the dual cone");
  switch (cone.kind()) {
    case Cone::Kind::lorentz: {
      // Unit vectors of the closed cone are (cos t, sin t * u), |u| = 1,
      // t in [0, pi/4]; the worst u is -ybar/|ybar|, leaving a 1-D search.
      const double y0 = y(0);
      const double rbar = y.tail(y.size() - 1).norm();
      auto f = [&](double t) { return y0 * std::cos(t) - rbar * std::sin(t); };
      return golden_min(f, 0.0, 0.25 * M_PI, 1e-10);
    }
    case Cone::Kind::orthant:
      // dot(w, y) >= min_i y_i * sum w_i >= min_i y_i for unit w >= 0.
      return y.minCoeff();
    case Cone::Kind::product: {
      double p = std::numeric_limits<double>::infinity();
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        p = std::min(p, lower_bound_constant(leaf, y.segment(off, leaf.dim())));
      });
      return p;
    }
  }
  raise(errc::invalid_argument, "lower_bound_constant: unknown cone kind");
}

Vector margin_supergradient(const Cone& cone, const Vector& w) {
  check_dim(cone, w, "margin_supergradient");
  switch (cone.kind()) {
    case Cone::Kind::lorentz: {
      Vector g = Vector::Zero(w.size());
      g(0) = 1.0;
      const double r = w.tail(w.size() - 1).norm();
      if (r > 0) g.tail(w.size() - 1) = -w.tail(w.size() - 1) / r;
      return g;
    }
    case Cone::Kind::orthant: {
      Vector g = Vector::Zero(w.size());
      int imin = 0;
      w.minCoeff(&imin);
      g(imin) = 1.0;
      return g;
    }
    case Cone::Kind::product: {
      double best = std::numeric_limits<double>::infinity();
      int best_off = 0;
      const Cone* best_leaf = nullptr;
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        const double m = margin(leaf, w.segment(off, leaf.dim()));
        if (m < best) {
          best = m;
          best_off = off;
          best_leaf = &leaf;
        }
      });
      Vector g = Vector::Zero(w.size());
      g.segment(best_off, best_leaf->dim()) =
          margin_supergradient(*best_leaf, w.segment(best_off, best_leaf->dim()));
      return g;
    }
  }
  raise(errc::invalid_argument, "margin_supergradient: unknown cone kind");
}

std::vector<MarginPiece> margin_active_pieces(const Cone& cone, const Vector& w, double eps) {
  check_dim(cone, w, "margin_active_pieces");
  const double m = margin(cone, w);
  std::vector<MarginPiece> pieces;
  switch (cone.kind()) {
    case Cone::Kind::lorentz:
      pieces.push_back({m, margin_supergradient(cone, w)});
      break;
    case Cone::Kind::orthant:
      for (int i = 0; i < w.size(); ++i) {
        if (w(i) <= m + eps) {
          Vector g = Vector::Zero(w.size());
          g(i) = 1.0;
          pieces.push_back({w(i), g});
        }
      }
      break;
    case Cone::Kind::product:
      for_each_leaf(cone, 0, [&](const Cone& leaf, int off) {
        const Vector seg = w.segment(off, leaf.dim());
        if (margin(leaf, seg) <= m + eps) {
          for (const MarginPiece& p : margin_active_pieces(leaf, seg, eps)) {
            Vector g = Vector::Zero(w.size());
            g.segment(off, leaf.dim()) = p.gradient;
            pieces.push_back({p.value, g});
          }
        }
      });
      break;
  }
  return pieces;
}

}  // namespace siegel
