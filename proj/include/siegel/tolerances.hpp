// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <map>
#include <string>

#include "siegel/error.hpp"

namespace siegel {

/// Named numeric thresholds consumed by the CLI commands and the
/// verification suite. Overrides apply per run and every report echoes the
/// full table. Unknown names are rejected.
///
/// Names and defaults:
///   band         1e-9   admissibility and membership decision band (echo)
///   newton_grad  1e-10  reduction gradient stopping tolerance
///   residual     1e-8   zero-set residual contract
///   zero_cone    1e-8   dual-orthogonality test threshold
///   agreement    1e-6   orbit representative agreement
///   roundtrip    1e-8   quotient lift-then-project error
///   span         1e-6   candidate span principal angle
///   bracket      1e-8   candidate bracket closure distance
///   orbit        1e-6   candidate orbit momentum bound
///   identity     1e-9   closed-form identity checks
///   fd_gradient  1e-6   finite-difference gradient match
///   fd_hessian   1e-5   finite-difference Hessian and Jacobian match
///   fd_form      1e-4   finite-difference Kaehler form checks
class Tolerances {
 public:
  Tolerances();

  double get(const std::string& name) const;
  void set(const std::string& name, double value);
  const std::map<std::string, double>& all() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

}  // namespace siegel
