// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/cone.hpp"
#include "siegel/tolerances.hpp"

namespace siegel {

struct InvariantResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// Largest residual observed; each invariant's residual is defined so that
  /// a trial passes exactly when residual <= threshold.
  double worst = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

struct VerifyReport {
  std::vector<InvariantResult> invariants;
  bool all_pass = true;
  /// Name of the first failing invariant; empty when all pass.
  std::string first_failure;
};

/// The built-in cone family used when no cone is configured.
std::vector<Cone> default_verify_cones();

/// Runs the randomized invariant suite: `trials` instances per invariant,
/// spread round-robin over `cones`, deterministic in (cones, trials, seed,
/// tolerances).
VerifyReport run_verify_suite(const std::vector<Cone>& cones, int trials, std::uint64_t seed,
                              const Tolerances& tol);

}  // namespace siegel
