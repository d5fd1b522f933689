// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "siegel/reduce.hpp"
#include "siegel/tolerances.hpp"

namespace siegel {

using Json = nlohmann::json;

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double x);

/// Formats a vector as a JSON array of 17-digit numbers.
std::string format_vector(const Vector& v);

Cone parse_cone(const Json& j);
Vector parse_vector(const Json& j, const std::string& where);
Subspace parse_subspace(const Json& j, int ambient_dim);
std::pair<Vector, Vector> parse_point(const Json& j, int ambient_dim);
AffineGenerator parse_generator(const Json& j, int ambient_dim);
GeneratorSet parse_generators(const Json& j, int ambient_dim);

/// A loaded run configuration. Dimensions are validated against the cone;
/// unknown keys anywhere are rejected with the offending key named.
struct Config {
  Cone cone;
  std::optional<Subspace> subspace;
  std::optional<GeneratorSet> candidate;
  std::optional<std::pair<Vector, Vector>> base_point;
  Tolerances tolerances;
  std::uint64_t seed = 0;
  bool has_seed = false;
};

Config parse_config(const Json& j);
Config load_config(const std::string& path);

}  // namespace siegel
