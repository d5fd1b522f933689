// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace siegel {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(v(i));
  }
  out += "]";
  return out;
}

namespace {

void require_keys(const Json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!obj.is_object()) raise(errc::invalid_config, where + " must be an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known) raise(errc::invalid_config, "unknown key '" + item.key() + "' in " + where);
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) raise(errc::invalid_config, where + " is missing key '" + key + "'");
  return *it;
}

double parse_number(const Json& j, const std::string& where) {
  if (!j.is_number()) raise(errc::invalid_config, where + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) raise(errc::invalid_config, where + " must be finite");
  return x;
}

int parse_positive_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    raise(errc::invalid_config, where + " must be a positive integer");
  return static_cast<int>(j.get<long long>());
}

}  // namespace

Cone parse_cone(const Json& j) {
  require_keys(j, {"type", "d", "factors"}, "cone");
  const Json& type_j = require(j, "type", "cone");
  if (!type_j.is_string()) raise(errc::invalid_config, "cone 'type' must be a string");
  const std::string type = type_j.get<std::string>();
  if (type == "lorentz") {
    require_keys(j, {"type", "d"}, "lorentz cone");
    return Cone::lorentz(parse_positive_int(require(j, "d", "lorentz cone"), "cone 'd'"));
  }
  if (type == "orthant") {
    require_keys(j, {"type", "d"}, "orthant cone");
    return Cone::orthant(parse_positive_int(require(j, "d", "orthant cone"), "cone 'd'"));
  }
  if (type == "product") {
    require_keys(j, {"type", "factors"}, "product cone");
    const Json& factors = require(j, "factors", "product cone");
    if (!factors.is_array() || factors.empty())
      raise(errc::invalid_config, "product cone 'factors' must be a nonempty array");
    std::vector<Cone> parsed;
    for (const Json& f : factors) parsed.push_back(parse_cone(f));
    return Cone::product(std::move(parsed));
  }
  raise(errc::invalid_config, "unknown cone type '" + type + "'");
}

Vector parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) raise(errc::invalid_config, where + " must be an array of numbers");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<int>(i)) = parse_number(j[i], where + " entry " + std::to_string(i));
  return v;
}

Subspace parse_subspace(const Json& j, int ambient_dim) {
  require_keys(j, {"basis"}, "subspace");
  const Json& basis = require(j, "basis", "subspace");
  if (!basis.is_array()) raise(errc::invalid_config, "subspace 'basis' must be an array of columns");
  const int k = static_cast<int>(basis.size());
  Matrix b(ambient_dim, k);
  for (int col = 0; col < k; ++col) {
    const Vector v = parse_vector(basis[col], "subspace basis column " + std::to_string(col));
    if (v.size() != ambient_dim)
      raise(errc::invalid_config,
            "subspace basis column " + std::to_string(col) + " has wrong length");
    b.col(col) = v;
  }
  try {
    return k == 0 ? Subspace::zero(ambient_dim) : Subspace(b);
  } catch (const error& e) {
    raise(errc::invalid_config, std::string("subspace basis rejected: ") + e.what());
  }
}

std::pair<Vector, Vector> parse_point(const Json& j, int ambient_dim) {
  require_keys(j, {"re", "im"}, "point");
  const Vector re = parse_vector(require(j, "re", "point"), "point 're'");
  const Vector im = parse_vector(require(j, "im", "point"), "point 'im'");
  if (re.size() != ambient_dim || im.size() != ambient_dim)
    raise(errc::invalid_config, "point coordinate length does not match the cone dimension");
  return {re, im};
}

AffineGenerator parse_generator(const Json& j, int ambient_dim) {
  require_keys(j, {"linear", "translation"}, "generator");
  const Json& rows = require(j, "linear", "generator");
  if (!rows.is_array() || static_cast<int>(rows.size()) != ambient_dim)
    raise(errc::invalid_config, "generator 'linear' must have one row per ambient dimension");
  Matrix a(ambient_dim, ambient_dim);
  for (int r = 0; r < ambient_dim; ++r) {
    const Vector row = parse_vector(rows[r], "generator linear row " + std::to_string(r));
    if (row.size() != ambient_dim)
      raise(errc::invalid_config, "generator linear row " + std::to_string(r) + " has wrong length");
    a.row(r) = row.transpose();
  }
  const Vector t = parse_vector(require(j, "translation", "generator"), "generator 'translation'");
  if (t.size() != ambient_dim)
    raise(errc::invalid_config, "generator 'translation' has wrong length");
  return {a, t};
}

GeneratorSet parse_generators(const Json& j, int ambient_dim) {
  require_keys(j, {"generators"}, "generator set");
  const Json& gens = require(j, "generators", "generator set");
  if (!gens.is_array()) raise(errc::invalid_config, "'generators' must be an array");
  GeneratorSet out;
  for (const Json& g : gens) out.push_back(parse_generator(g, ambient_dim));
  return out;
}

Config parse_config(const Json& j) {
  require_keys(j, {"cone", "subspace", "candidate_subalgebra", "base_point", "tolerances", "seed"},
               "config");
  Config cfg{parse_cone(require(j, "cone", "config"))};
  const int n = cfg.cone.dim();
  if (j.contains("subspace")) cfg.subspace = parse_subspace(j.at("subspace"), n);
  if (j.contains("candidate_subalgebra"))
    cfg.candidate = parse_generators(j.at("candidate_subalgebra"), n);
  if (j.contains("base_point")) cfg.base_point = parse_point(j.at("base_point"), n);
  if (j.contains("tolerances")) {
    const Json& tols = j.at("tolerances");
    if (!tols.is_object()) raise(errc::invalid_config, "'tolerances' must be an object");
    for (const auto& item : tols.items())
      cfg.tolerances.set(item.key(), parse_number(item.value(), "tolerance '" + item.key() + "'"));
  }
  if (j.contains("seed")) {
    const Json& seed = j.at("seed");
    if (!seed.is_number_integer()) raise(errc::invalid_config, "'seed' must be an integer");
    if (!seed.is_number_unsigned() && seed.get<long long>() < 0)
      raise(errc::invalid_config, "'seed' must be nonnegative");
    cfg.seed = seed.get<std::uint64_t>();
    cfg.has_seed = true;
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::invalid_config, "cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    raise(errc::invalid_config, std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace siegel
