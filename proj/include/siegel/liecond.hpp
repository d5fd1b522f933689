// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>

#include "siegel/reduce.hpp"

namespace siegel {

/// Result of the Lie-condition verification. Connectedness of the zero level
/// set is an assumption of the condition, not something samples can decide;
/// reports record it as such.
struct LieConditionReport {
  int dim_kernel = 0;
  int dim_w = 0;
  /// Largest principal angle (radians) between the candidate orbit directions
  /// at the base point and the maximal complex subspace of the kernel.
  double span_residual = 0.0;
  /// Largest distance of a pairwise bracket to the span of the candidate.
  double bracket_residual = 0.0;
  /// Largest momentum max-norm over the sampled candidate-group orbit.
  double orbit_residual = 0.0;
  /// Whether the subgroup directions plus candidate directions fill the
  /// kernel at the base point (local saturation of the zero level set).
  bool saturated = false;
  bool pass = false;
  /// Empty when pass; otherwise the first failing check: "span" (covering
  /// dimension mismatches), "bracket", or "orbit".
  std::string reason;
};

/// Orthonormal basis (2n x m columns) of the null space of the momentum
/// Jacobian at x, the tangent space of the zero level set. Requires x on the
/// zero set at 1e-8. Rank cutoff 1e-9 relative to the largest singular
/// value; values inside [0.1, 10] times the cutoff raise rank_ambiguous.
Matrix kernel_basis(const GeneratorSet& gens, const TubePoint& x);

/// Orthonormal basis of the maximal complex subspace K of the kernel: the
/// intersection of the kernel with its image under the complex structure,
/// computed as the null space of stacked projector constraints.
Matrix w_space(const GeneratorSet& gens, const TubePoint& x);

/// Verifies a candidate subalgebra s against the Lie condition for the
/// subgroup generated by gens at base point x0: span match with w_space,
/// bracket closure of s, and vanishing momentum along sampled exp-word
/// orbits of s. Thresholds: span 1e-6, bracket 1e-8, orbit 1e-6.
LieConditionReport verify_lie_condition(const Cone& cone, const GeneratorSet& gens,
                                        const TubePoint& x0, const GeneratorSet& s, int samples,
                                        std::uint64_t seed);

}  // namespace siegel
