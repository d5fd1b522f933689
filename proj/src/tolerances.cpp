// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/tolerances.hpp"

namespace siegel {

Tolerances::Tolerances()
    : values_{{"band", 1e-9},      {"newton_grad", 1e-10}, {"residual", 1e-8},
              {"zero_cone", 1e-8}, {"agreement", 1e-6},    {"roundtrip", 1e-8},
              {"span", 1e-6},      {"bracket", 1e-8},      {"orbit", 1e-6},
              {"identity", 1e-9},  {"fd_gradient", 1e-6},  {"fd_hessian", 1e-5},
              {"fd_form", 1e-4}} {}

double Tolerances::get(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) raise(errc::invalid_config, "unknown tolerance name '" + name + "'");
  return it->second;
}

void Tolerances::set(const std::string& name, double value) {
  const auto it = values_.find(name);
  if (it == values_.end()) raise(errc::invalid_config, "unknown tolerance name '" + name + "'");
  it->second = value;
}

}  // namespace siegel
