// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siegel/error.hpp"
#include "siegel/io.hpp"
#include "siegel/liecond.hpp"
#include "siegel/moment.hpp"
#include "siegel/reduce.hpp"
#include "siegel/sampling.hpp"
#include "siegel/tolerances.hpp"
#include "siegel/tube.hpp"
#include "siegel/verify.hpp"

namespace {

using namespace siegel;

// Exit codes shared by all subcommands.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNegative = 2;   // inadmissible / not admissible / condition fails
constexpr int kExitUndecided = 3;  // admissibility could not be decided
constexpr int kExitDomain = 4;     // point outside the domain / base off the zero set
constexpr int kExitQuotientUndecided = 5;
constexpr int kExitConfig = 64;

struct CommonArgs {
  std::string config_path;
  std::string point_path;
  std::string out_path;
  std::vector<std::string> tol_overrides;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int samples = 0;
  bool samples_set = false;
  int trials = 0;
  bool trials_set = false;
};

// --------------------------------------------------------------------------
// Report helpers: reports are emitted with hand-ordered keys and 17
// significant digits so identical runs produce identical bytes.
// --------------------------------------------------------------------------

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string tolerances_json(const Tolerances& tol, const std::string& indent) {
  std::string out = "{\n";
  const auto& all = tol.all();
  std::size_t i = 0;
  for (const auto& [name, value] : all) {
    out += indent + "  \"" + name + "\": " + format_double(value);
    out += (++i == all.size()) ? "\n" : ",\n";
  }
  out += indent + "}";
  return out;
}

std::string point_json(const Vector& re, const Vector& im, const std::string& indent) {
  std::string out = "{\n";
  out += indent + "  \"re\": " + format_vector(re) + ",\n";
  out += indent + "  \"im\": " + format_vector(im) + "\n";
  out += indent + "}";
  return out;
}

std::string report_header(const std::string& command, std::uint64_t seed,
                          const Tolerances& tol) {
  std::string out = "{\n";
  out += "  \"command\": \"" + command + "\",\n";
  out += "  \"seed\": " + std::to_string(seed) + ",\n";
  out += "  \"tolerances\": " + tolerances_json(tol, "  ");
  return out;
}

// --------------------------------------------------------------------------
// Configuration plumbing
// --------------------------------------------------------------------------

Config require_config(const CommonArgs& args) {
  if (args.config_path.empty())
    raise(errc::invalid_config, "missing required key 'config': pass --config FILE");
  return load_config(args.config_path);
}

std::uint64_t resolve_seed(const CommonArgs& args, const Config* cfg) {
  if (args.seed_set) return args.seed;
  if (cfg != nullptr && cfg->has_seed) return cfg->seed;
  if (const char* env = std::getenv("SIEGEL_REDUCE_SEED")) {
    std::string text(env);
    try {
      std::size_t pos = 0;
      unsigned long long value = std::stoull(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
      return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      raise(errc::invalid_config,
            "invalid value for key 'SIEGEL_REDUCE_SEED': expected a nonnegative integer, got '" +
                text + "'");
    }
  }
  return 0;
}

Tolerances resolve_tolerances(const Config* cfg, const std::vector<std::string>& overrides) {
  Tolerances tol = cfg != nullptr ? cfg->tolerances : Tolerances();
  for (const std::string& item : overrides) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      raise(errc::invalid_config,
            "invalid value for key 'tol': expected NAME=VALUE, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string value_text = item.substr(eq + 1);
    double value = 0.0;
    try {
      std::size_t pos = 0;
      value = std::stod(value_text, &pos);
      if (pos != value_text.size()) throw std::invalid_argument(value_text);
    } catch (const std::exception&) {
      raise(errc::invalid_config,
            "invalid value for key 'tol': '" + value_text + "' is not a number");
    }
    tol.set(name, value);
  }
  return tol;
}

const Subspace& require_subspace(const Config& cfg) {
  if (!cfg.subspace.has_value())
    raise(errc::invalid_config, "missing required key 'subspace'");
  return *cfg.subspace;
}

std::pair<Vector, Vector> require_point(const CommonArgs& args, const Config& cfg) {
  if (!args.point_path.empty()) {
    std::ifstream in(args.point_path);
    if (!in) raise(errc::invalid_config, "cannot open point file '" + args.point_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      raise(errc::invalid_config,
            "point file '" + args.point_path + "' is not valid JSON: " + e.what());
    }
    return parse_point(j, cfg.cone.dim());
  }
  if (cfg.base_point.has_value()) return *cfg.base_point;
  raise(errc::invalid_config, "missing required key 'base_point' (or pass --point FILE)");
}

// --------------------------------------------------------------------------
// Subcommands
// --------------------------------------------------------------------------

int cmd_check(const CommonArgs& args) {
  Config cfg = require_config(args);
  const Subspace& h = require_subspace(cfg);
  const std::uint64_t seed = resolve_seed(args, &cfg);
  Tolerances tol = resolve_tolerances(&cfg, args.tol_overrides);

  AdmissibilityCertificate cert = check_admissible(cfg.cone, h, seed);

  std::string out = report_header("check", seed, tol) + ",\n";
  out += "  \"subspace_dim\": " + std::to_string(h.dim()) + ",\n";
  out += "  \"verdict\": \"" + std::string(verdict_name(cert.verdict)) + "\",\n";
  out += "  \"witness\": " + format_vector(cert.witness) + ",\n";
  out += "  \"witness_margin\": " + format_double(cert.witness_margin) + "\n";
  out += "}\n";
  std::cout << out;

  switch (cert.verdict) {
    case Verdict::admissible: return kExitOk;
    case Verdict::inadmissible: return kExitNegative;
    case Verdict::undecided: return kExitUndecided;
  }
  return kExitFailure;
}

int cmd_reduce(const CommonArgs& args) {
  Config cfg = require_config(args);
  const Subspace& h = require_subspace(cfg);
  const std::uint64_t seed = resolve_seed(args, &cfg);
  Tolerances tol = resolve_tolerances(&cfg, args.tol_overrides);

  auto [re, im] = require_point(args, cfg);
  TubePoint x(cfg.cone, re, im);  // raises not_in_domain for bad points

  ReduceOptions opt;
  opt.grad_tol = tol.get("newton_grad");
  opt.seed = seed;
  ReductionResult res = reduce_point(cfg.cone, h, x, opt);
  SplitCoordinates split = split_map(cfg.cone, h, res.point.re(), res.point.im(), seed);

  std::string out = report_header("reduce", seed, tol) + ",\n";
  out += "  \"point\": " + point_json(res.point.re(), res.point.im(), "  ") + ",\n";
  out += "  \"shift\": " + format_vector(res.shift) + ",\n";
  out += "  \"residual\": " + format_double(res.residual) + ",\n";
  out += "  \"iterations\": " + std::to_string(res.iterations) + ",\n";
  out += "  \"quotient\": " + point_json(split.quotient_re, split.quotient_im, "  ") + ",\n";
  out += "  \"fiber\": " + point_json(split.fiber_re, split.fiber_im, "  ") + "\n";
  out += "}\n";
  std::cout << out;
  return res.residual <= tol.get("residual") ? kExitOk : kExitFailure;
}

int cmd_quotient(const CommonArgs& args) {
  Config cfg = require_config(args);
  const Subspace& h = require_subspace(cfg);
  const std::uint64_t seed = resolve_seed(args, &cfg);
  Tolerances tol = resolve_tolerances(&cfg, args.tol_overrides);
  const int samples = args.samples_set ? args.samples : 20;
  if (samples < 0)
    raise(errc::invalid_config, "invalid value for key 'samples': must be >= 0");

  const int n = cfg.cone.dim();
  const int k = h.dim();
  const int m = n - k;
  const double roundtrip_tol = tol.get("roundtrip");

  // CSV: quotient coordinates, membership status, maximizing shift, and the
  // lift-then-split roundtrip error for members.
  std::ostringstream csv;
  csv << "sample";
  for (int j = 0; j < m; ++j) csv << ",t_re_" << j;
  for (int j = 0; j < m; ++j) csv << ",t_im_" << j;
  csv << ",status";
  for (int j = 0; j < k; ++j) csv << ",witness_" << j;
  csv << ",roundtrip_err\n";

  int members = 0, non_members = 0, undecided = 0;
  double max_roundtrip = 0.0;
  bool roundtrip_ok = true;

  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, 1000u + static_cast<std::uint64_t>(i)));
    Vector t_re = rng.gaussian(m);
    Vector t_im(m);
    if (i % 2 == 0 && m > 0) {
      // Guaranteed member: quotient coordinates of an interior point.
      t_im = h.complement().transpose() * interior_point(cfg.cone, rng);
    } else {
      t_im = 1.5 * rng.gaussian(m);
    }

    MembershipResult mem = quotient_membership(cfg.cone, h, t_im, rng.raw());
    std::string roundtrip_text;
    switch (mem.status) {
      case Membership::member: {
        ++members;
        Vector z_re = h.complement() * t_re;
        Vector z_im = h.complement() * t_im + h.basis() * mem.witness;
        SplitCoordinates split = split_map(cfg.cone, h, z_re, z_im, rng.raw());
        double err = 0.0;
        if (m > 0) {
          err = std::max((split.quotient_re - t_re).cwiseAbs().maxCoeff(),
                         (split.quotient_im - t_im).cwiseAbs().maxCoeff());
        }
        max_roundtrip = std::max(max_roundtrip, err);
        if (err > roundtrip_tol) roundtrip_ok = false;
        roundtrip_text = format_double(err);
        break;
      }
      case Membership::non_member: ++non_members; break;
      case Membership::undecided: ++undecided; break;
    }

    csv << i;
    for (int j = 0; j < m; ++j) csv << "," << format_double(t_re[j]);
    for (int j = 0; j < m; ++j) csv << "," << format_double(t_im[j]);
    csv << "," << membership_name(mem.status);
    for (int j = 0; j < k; ++j)
      csv << "," << format_double(j < mem.witness.size() ? mem.witness[j] : 0.0);
    csv << "," << roundtrip_text << "\n";
  }

  if (!args.out_path.empty()) {
    std::ofstream out_file(args.out_path);
    if (!out_file)
      raise(errc::invalid_config, "cannot open output file '" + args.out_path + "'");
    out_file << csv.str();
    std::string out = report_header("quotient", seed, tol) + ",\n";
    out += "  \"samples\": " + std::to_string(samples) + ",\n";
    out += "  \"members\": " + std::to_string(members) + ",\n";
    out += "  \"non_members\": " + std::to_string(non_members) + ",\n";
    out += "  \"undecided\": " + std::to_string(undecided) + ",\n";
    out += "  \"max_roundtrip_err\": " + format_double(max_roundtrip) + ",\n";
    out += "  \"csv_path\": \"" + json_escape(args.out_path) + "\"\n";
    out += "}\n";
    std::cout << out;
  } else {
    std::cout << csv.str();
  }

  if (undecided > 0) return kExitQuotientUndecided;
  return roundtrip_ok ? kExitOk : kExitFailure;
}

int cmd_lie_test(const CommonArgs& args) {
  Config cfg = require_config(args);
  const Subspace& h = require_subspace(cfg);
  if (!cfg.candidate.has_value())
    raise(errc::invalid_config, "missing required key 'candidate_subalgebra'");
  const std::uint64_t seed = resolve_seed(args, &cfg);
  Tolerances tol = resolve_tolerances(&cfg, args.tol_overrides);
  const int samples = args.samples_set ? args.samples : 50;
  if (samples < 1)
    raise(errc::invalid_config, "invalid value for key 'samples': must be >= 1");

  auto [re, im] = require_point(args, cfg);
  TubePoint x0(cfg.cone, re, im);

  LieConditionReport rep =
      verify_lie_condition(cfg.cone, translation_generators(h), x0, *cfg.candidate, samples, seed);

  std::string out = report_header("lie-test", seed, tol) + ",\n";
  out += "  \"samples\": " + std::to_string(samples) + ",\n";
  out += "  \"dim_kernel\": " + std::to_string(rep.dim_kernel) + ",\n";
  out += "  \"dim_w\": " + std::to_string(rep.dim_w) + ",\n";
  out += "  \"span_residual\": " + format_double(rep.span_residual) + ",\n";
  out += "  \"bracket_residual\": " + format_double(rep.bracket_residual) + ",\n";
  out += "  \"orbit_residual\": " + format_double(rep.orbit_residual) + ",\n";
  out += "  \"saturated\": " + std::string(rep.saturated ? "true" : "false") + ",\n";
  out += "  \"connectedness\": \"assumed\",\n";
  out += "  \"verdict\": \"" + std::string(rep.pass ? "pass" : "fail") + "\",\n";
  out += "  \"reason\": \"" + json_escape(rep.reason) + "\"\n";
  out += "}\n";
  std::cout << out;
  return rep.pass ? kExitOk : kExitNegative;
}

int cmd_verify(const CommonArgs& args) {
  std::optional<Config> cfg;
  if (!args.config_path.empty()) cfg = load_config(args.config_path);
  const Config* cfg_ptr = cfg.has_value() ? &*cfg : nullptr;
  const std::uint64_t seed = resolve_seed(args, cfg_ptr);
  Tolerances tol = resolve_tolerances(cfg_ptr, args.tol_overrides);
  const int trials = args.trials_set ? args.trials : 100;
  if (trials < 0) raise(errc::invalid_config, "invalid value for key 'trials': must be >= 0");

  std::vector<Cone> cones;
  if (cfg.has_value())
    cones.push_back(cfg->cone);
  else
    cones = default_verify_cones();

  VerifyReport rep = run_verify_suite(cones, trials, seed, tol);

  std::string out = report_header("verify", seed, tol) + ",\n";
  out += "  \"trials\": " + std::to_string(trials) + ",\n";
  out += "  \"invariants\": [\n";
  for (std::size_t i = 0; i < rep.invariants.size(); ++i) {
    const InvariantResult& inv = rep.invariants[i];
    out += "    {\n";
    out += "      \"name\": \"" + inv.name + "\",\n";
    out += "      \"trials\": " + std::to_string(inv.trials) + ",\n";
    out += "      \"failures\": " + std::to_string(inv.failures) + ",\n";
    out += "      \"worst\": " + format_double(inv.worst) + ",\n";
    out += "      \"threshold\": " + format_double(inv.threshold) + ",\n";
    out += "      \"pass\": " + std::string(inv.pass ? "true" : "false") + "\n";
    out += (i + 1 == rep.invariants.size()) ? "    }\n" : "    },\n";
  }
  out += "  ],\n";
  out += "  \"all_pass\": " + std::string(rep.all_pass ? "true" : "false") + ",\n";
  out += "  \"first_failure\": \"" + json_escape(rep.first_failure) + "\"\n";
  out += "}\n";
  std::cout << out;

  if (!rep.all_pass) {
    std::cerr << "verify: first failing invariant: " << rep.first_failure << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int exit_code_for(const error& e, const std::string& command) {
  switch (e.code()) {
    case errc::invalid_config:
    case errc::invalid_argument: return kExitConfig;
    case errc::not_in_domain:
    case errc::not_on_zero_set:
    case errc::not_in_z: return kExitDomain;
    case errc::not_admissible: return kExitNegative;
    case errc::undecided:
      return command == "quotient" ? kExitQuotientUndecided : kExitUndecided;
    default: return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siegel-reduce: symplectic reduction on tube domains over symmetric cones"};
  app.require_subcommand(1);

  CommonArgs args;

  auto add_common = [&args](CLI::App* cmd, bool with_point, bool with_samples,
                            bool with_trials, bool with_out, bool config_required) {
    CLI::Option* config_opt =
        cmd->add_option("--config", args.config_path, "JSON configuration file");
    if (config_required) config_opt->required();
    if (with_point)
      cmd->add_option("--point", args.point_path,
                      "JSON point file {\"re\": [...], \"im\": [...]} overriding base_point");
    if (with_samples) {
      cmd->add_option("--samples", args.samples, "number of samples")
          ->each([&args](const std::string&) { args.samples_set = true; });
    }
    if (with_trials) {
      cmd->add_option("--trials", args.trials, "trials per invariant")
          ->each([&args](const std::string&) { args.trials_set = true; });
    }
    if (with_out)
      cmd->add_option("--out", args.out_path, "write the CSV table to this file");
    cmd->add_option("--seed", args.seed, "master random seed")
        ->each([&args](const std::string&) { args.seed_set = true; });
    cmd->add_option("--tol", args.tol_overrides,
                    "tolerance override NAME=VALUE (repeatable)");
  };

  CLI::App* check = app.add_subcommand("check", "decide admissibility of the subspace");
  add_common(check, false, false, false, false, true);
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a point to its orbit representative");
  add_common(reduce, true, false, false, false, true);
  CLI::App* quotient =
      app.add_subcommand("quotient", "sample quotient membership and roundtrips (CSV)");
  add_common(quotient, false, true, false, true, true);
  CLI::App* lie_test =
      app.add_subcommand("lie-test", "verify the Lie condition for a candidate subalgebra");
  add_common(lie_test, true, true, false, false, true);
  CLI::App* verify = app.add_subcommand("verify", "run the randomized invariant suite");
  add_common(verify, false, false, true, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::string command;
  if (check->parsed()) command = "check";
  if (reduce->parsed()) command = "reduce";
  if (quotient->parsed()) command = "quotient";
  if (lie_test->parsed()) command = "lie-test";
  if (verify->parsed()) command = "verify";

  try {
    if (command == "check") return cmd_check(args);
    if (command == "reduce") return cmd_reduce(args);
    if (command == "quotient") return cmd_quotient(args);
    if (command == "lie-test") return cmd_lie_test(args);
    if (command == "verify") return cmd_verify(args);
  } catch (const error& e) {
    std::cerr << "siegel-reduce " << command << ": error [" << errc_name(e.code())
              << "]: " << e.what() << "\n";
    return exit_code_for(e, command);
  } catch (const std::exception& e) {
    std::cerr << "siegel-reduce " << command << ": unexpected error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
