// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/sampling.hpp"

#include <cmath>

namespace siegel {

namespace {

std::uint64_t splitmix64_round(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64_round(master ^ index);
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
  // Box-Muller on explicitly constructed uniforms; one coordinate per call
  // keeps the draw count predictable.
  const double u1 = 1.0 - uniform(0.0, 1.0);  // (0, 1]
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Vector Rng::gaussian(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Vector interior_point(const Cone& cone, Rng& rng) {
  const Vector g = rng.gaussian(cone.dim());
  const double lift = rng.uniform(0.2, 1.6);
  const Vector w = project_closure(cone, g) + lift * cone.canonical_interior();
  // margin(w) >= lift by superadditivity of the concave homogeneous margin.
  return std::exp(rng.uniform(-1.0, 1.0)) * w;
}

Vector boundary_adjacent_point(const Cone& cone, Rng& rng, double eps) {
  if (!(eps > 0.0)) raise(errc::invalid_argument, "boundary_adjacent_point: eps must be positive");
  const Vector w = interior_point(cone, rng);
  Vector d;
  for (int tries = 0;; ++tries) {
    if (tries >= 64) raise(errc::sampling_failure, "boundary_adjacent_point: no exit direction");
    d = rng.gaussian(cone.dim());
    const double dm = margin(cone, d);
    if (std::abs(dm) <= 1e-9 * d.norm()) continue;
    if (dm > 0.0) d = -d;
    break;
  }
  // Along w + s d the margin is concave, starts above eps, and tends to
  // -infinity; bracket the eps crossing and bisect onto [eps, 1.5 eps].
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (margin(cone, w + hi * d) >= eps) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 128) raise(errc::sampling_failure, "boundary_adjacent_point: no crossing");
  }
  for (int it = 0; it < 200 && margin(cone, w + lo * d) > 1.5 * eps; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (margin(cone, w + mid * d) >= eps)
      lo = mid;
    else
      hi = mid;
  }
  return w + lo * d;
}

TubePoint tube_point(const Cone& cone, Rng& rng) {
  const Vector re = 1.5 * rng.gaussian(cone.dim());
  return TubePoint(cone, re, interior_point(cone, rng));
}

Subspace random_subspace(int ambient_dim, int k, Rng& rng) {
  Matrix g(ambient_dim, k);
  for (int j = 0; j < k; ++j) g.col(j) = rng.gaussian(ambient_dim);
  return Subspace(g);
}

Subspace admissible_subspace(const Cone& cone, int k, Rng& rng) {
  const int n = cone.dim();
  if (k >= n)
    raise(errc::invalid_argument, "admissible_subspace: dimension must be below the ambient");
  if (k == 0) return Subspace::zero(n);
  const Vector yhat = interior_point(cone, rng).normalized();
  Matrix g(n, k);
  for (int j = 0; j < k; ++j) {
    const Vector col = rng.gaussian(n);
    g.col(j) = col - yhat.dot(col) * yhat;
  }
  // Columns lie in the orthogonal complement of an interior dual point, so
  // that point certifies admissibility.
  return Subspace(g);
}

AffineGenerator compatible_generator(const Cone& cone, Rng& rng, bool with_translation) {
  const int n = cone.dim();
  Matrix a = Matrix::Zero(n, n);
  for (const LeafBlock& block : leaf_blocks(cone)) {
    const int m = block.cone->dim();
    if (block.cone->kind() == Cone::Kind::orthant) {
      for (int i = 0; i < m; ++i) a(block.offset + i, block.offset + i) = rng.uniform(-1.0, 1.0);
    } else {
      const int d = m - 1;
      const double lambda = rng.uniform(-1.0, 1.0);
      const Vector bvec = rng.gaussian(d);
      Matrix skew = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          const double s = rng.normal();
          skew(i, j) = s;
          skew(j, i) = -s;
        }
      Matrix leaf = Matrix::Zero(m, m);
      leaf(0, 0) = lambda;
      leaf.block(0, 1, 1, d) = bvec.transpose();
      leaf.block(1, 0, d, 1) = bvec;
      leaf.block(1, 1, d, d) = lambda * Matrix::Identity(d, d) + skew;
      a.block(block.offset, block.offset, m, m) = leaf;
    }
  }
  Vector t = with_translation ? Vector(rng.gaussian(n)) : Vector(Vector::Zero(n));
  return {a, t};
}

}  // namespace siegel
