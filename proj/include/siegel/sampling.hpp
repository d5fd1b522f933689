// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <random>

#include "siegel/reduce.hpp"

namespace siegel {

/// Derives a per-instance seed from a master seed: XOR with the index, then
/// one splitmix64 mixing round. Keeps batch drivers reproducible while
/// decorrelating instances.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic random source. The transforms from raw 64-bit draws to
/// doubles are spelled out here instead of using std distributions, whose
/// output is implementation-defined; identical seeds give identical streams
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform on {lo, ..., hi} inclusive.
  int uniform_int(int lo, int hi);
  /// Standard normal via Box-Muller (first coordinate only).
  double normal();
  Vector gaussian(int n);

 private:
  std::mt19937_64 engine_;
};

/// A random interior point: projection of a gaussian onto the closed cone
/// plus a positive multiple of the canonical interior point, then a random
/// overall scale. Margin at least 0.1 before scaling.
Vector interior_point(const Cone& cone, Rng& rng);

/// An interior point with margin within [0.5, 2] times eps, produced by
/// bisection from an interior point along an exiting direction.
Vector boundary_adjacent_point(const Cone& cone, Rng& rng, double eps);

/// A random tube point: gaussian real part, interior imaginary part.
TubePoint tube_point(const Cone& cone, Rng& rng);

/// A uniformly random k-dimensional subspace (orthonormalized gaussian).
Subspace random_subspace(int ambient_dim, int k, Rng& rng);

/// A random admissible subspace: k gaussian columns projected into the
/// orthogonal complement of a random interior dual point, so the complement
/// meets the open dual cone by construction. Requires k < ambient_dim.
Subspace admissible_subspace(const Cone& cone, int k, Rng& rng);

/// A random generator of the cone's linear automorphism algebra (plus a
/// gaussian translation when with_translation): lorentz: multiples of I plus
/// so(1,d); orthant: diagonal; product: compatible blocks.
AffineGenerator compatible_generator(const Cone& cone, Rng& rng, bool with_translation = true);

}  // namespace siegel
