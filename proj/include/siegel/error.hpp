// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

/// Failure categories surfaced by the library. The CLI maps these to exit codes.
enum class errc {
  dimension_mismatch,
  not_in_cone,
  not_in_dual_cone,
  not_in_domain,
  not_admissible,
  max_iterations,
  undecided,
  not_on_zero_set,
  rank_ambiguous,
  not_in_z,
  invalid_argument,
  invalid_config,
  sampling_failure,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace siegel
