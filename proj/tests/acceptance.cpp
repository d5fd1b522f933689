// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0
//
// Acceptance gate. Runs the ten release criteria end to end and prints one
// PASS/FAIL line per criterion. Exit status 0 iff every criterion passes.
//
// Usage: acceptance [path-to-siegel-reduce-cli]   (default "./siegel-reduce")

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "siegel/cone.hpp"
#include "siegel/liecond.hpp"
#include "siegel/moment.hpp"
#include "siegel/reduce.hpp"
#include "siegel/sampling.hpp"
#include "siegel/tube.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace {

using namespace siegel;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_err(double got, double want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

double rel_err(const Vector& got, const Vector& want) {
  return (got - want).cwiseAbs().maxCoeff() / (1.0 + want.cwiseAbs().maxCoeff());
}

Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& x, double step) {
  Vector g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Vector hi = x, lo = x;
    hi[i] += step;
    lo[i] -= step;
    g[i] = (f(hi) - f(lo)) / (2.0 * step);
  }
  return g;
}

double fd_derivative(const std::function<double(double)>& f, double t, double step) {
  return (f(t + step) - f(t - step)) / (2.0 * step);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

/// The cone catalog the randomized criteria draw from: one representative per
/// family plus mixed products, ambient dimensions 3 to 7.
std::vector<Cone> catalog() {
  std::vector<Cone> cones;
  cones.push_back(Cone::lorentz(2));
  cones.push_back(Cone::lorentz(3));
  cones.push_back(Cone::orthant(3));
  cones.push_back(Cone::orthant(4));
  std::vector<Cone> factors;
  factors.push_back(Cone::lorentz(1));
  factors.push_back(Cone::orthant(2));
  cones.push_back(Cone::product(std::move(factors)));
  return cones;
}

/// A cone of the given family with the requested ambient dimension.
Cone family_cone(int family, int dim, Rng& rng) {
  if (family == 0) return Cone::lorentz(dim - 1);
  if (family == 1) return Cone::orthant(dim);
  // Product family: random lorentz + orthant split (needs dim >= 4).
  int lorentz_dim = rng.uniform_int(2, dim - 2);
  std::vector<Cone> factors;
  factors.push_back(Cone::lorentz(lorentz_dim - 1));
  factors.push_back(Cone::orthant(dim - lorentz_dim));
  return Cone::product(std::move(factors));
}

/// Interior point with margin >= 5e-2 and norm <= 20, so finite-difference
/// stencils stay well inside the cone. Falls back to the canonical point.
Vector comfortable_interior(const Cone& cone, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector w = interior_point(cone, rng);
    if (margin(cone, w) >= 5e-2 && w.norm() <= 20.0) return w;
  }
  return cone.canonical_interior();
}

/// Largest t >= 0 with base + t*dir in the closed cone, by doubling then
/// bisection. Requires the ray to exit (guaranteed along admissible-subspace
/// directions, where cone slices are compact).
double exit_parameter(const Cone& cone, const Vector& base, const Vector& dir) {
  double hi = 1.0;
  while (margin(cone, base + hi * dir) >= 0.0 && hi < 1e12) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (margin(cone, base + mid * dir) >= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

/// The lorentz(d) samples shared by criteria 1 and 2: interior points with
/// margin in [0.1, 2], built directly from a gaussian space part.
Vector lorentz_sample(int d, Rng& rng) {
  Vector bar = 2.0 * rng.gaussian(d);
  Vector w(d + 1);
  w[0] = bar.norm() + rng.uniform(0.1, 2.0);
  w.tail(d) = bar;
  return w;
}

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

// --------------------------------------------------------------------------
// 1. Lorentz dual-map anchor: dual_map matches the closed form
//    (d+1)/<w,w>_{1,d} (w0, -w1, ..., -wd) and -grad log_char (finite
//    differences) to relative error < 1e-6 on 1000 points per d in 1..6.
// --------------------------------------------------------------------------
CriterionResult criterion_1() {
  auto t0 = Clock::now();
  double worst_closed = 0.0, worst_fd = 0.0;
  for (int d = 1; d <= 6; ++d) {
    Cone cone = Cone::lorentz(d);
    Rng rng(derive_seed(9001, static_cast<std::uint64_t>(d)));
    for (int i = 0; i < 1000; ++i) {
      Vector w = lorentz_sample(d, rng);
      double q = w[0] * w[0] - w.tail(d).squaredNorm();
      Vector closed(d + 1);
      closed[0] = w[0];
      closed.tail(d) = -w.tail(d);
      closed *= (d + 1) / q;
      Vector got = dual_map(cone, w);
      worst_closed = std::max(worst_closed, rel_err(got, closed));
      Vector fd = -fd_gradient([&](const Vector& v) { return log_char(cone, v); }, w, 1e-6);
      worst_fd = std::max(worst_fd, rel_err(got, fd));
    }
  }
  double elapsed = seconds_since(t0);
  bool ok = worst_closed < 1e-6 && worst_fd < 1e-6 && elapsed < 5.0;
  return {ok, "max rel err: closed form " + fmt(worst_closed) + ", fd gradient " + fmt(worst_fd) +
                  " (limit 1e-6); " + fmt(elapsed) + " s (limit 5)"};
}

// --------------------------------------------------------------------------
// 2. Dual identity dot(w, dual_map(w)) == dim V within 1e-9 on the same
//    lorentz samples as criterion 1.
// --------------------------------------------------------------------------
CriterionResult criterion_2() {
  double worst = 0.0;
  for (int d = 1; d <= 6; ++d) {
    Cone cone = Cone::lorentz(d);
    Rng rng(derive_seed(9001, static_cast<std::uint64_t>(d)));
    for (int i = 0; i < 1000; ++i) {
      Vector w = lorentz_sample(d, rng);
      worst = std::max(worst, std::abs(w.dot(dual_map(cone, w)) - cone.dim()));
    }
  }
  return {worst <= 1e-9, "max |dot(w, w*) - dim| = " + fmt(worst) + " (limit 1e-9)"};
}

// --------------------------------------------------------------------------
// 3. Admissibility equivalence: on 200 random subspaces per family
//    (ambient dims 2..8), check_admissible decides exactly one side and the
//    witness verifies to 1e-9; zero undecided.
// --------------------------------------------------------------------------
CriterionResult criterion_3() {
  auto t0 = Clock::now();
  int undecided = 0, bad_witness = 0, admissible_count = 0, inadmissible_count = 0;
  for (int family = 0; family < 3; ++family) {
    Rng rng(derive_seed(9003, static_cast<std::uint64_t>(family)));
    for (int i = 0; i < 200; ++i) {
      int dim = family == 2 ? rng.uniform_int(4, 8) : rng.uniform_int(2, 8);
      Cone cone = family_cone(family, dim, rng);
      int k = rng.uniform_int(1, dim - 1);
      Subspace h = random_subspace(dim, k, rng);
      AdmissibilityCertificate cert =
          check_admissible(cone, h, derive_seed(333, static_cast<std::uint64_t>(family * 200 + i)));
      if (cert.verdict == Verdict::undecided) {
        ++undecided;
        continue;
      }
      const Vector& wit = cert.witness;
      if (cert.verdict == Verdict::admissible) {
        ++admissible_count;
        // Witness: a complement vector interior to the dual cone.
        double orth = (h.basis().transpose() * wit).cwiseAbs().maxCoeff();
        if (!(dual_margin(cone, wit) > 0.0) || orth > 1e-9 * (1.0 + wit.norm())) ++bad_witness;
      } else {
        ++inadmissible_count;
        // Witness: a unit vector of H in the closed cone (within the band).
        Vector in_h = h.basis() * (h.basis().transpose() * wit);
        bool unit = std::abs(wit.norm() - 1.0) <= 1e-9;
        bool in_subspace = (wit - in_h).cwiseAbs().maxCoeff() <= 1e-9;
        bool in_closure = margin(cone, wit) >= -1e-9;
        if (!unit || !in_subspace || !in_closure) ++bad_witness;
      }
    }
  }
  double elapsed = seconds_since(t0);
  bool ok = undecided == 0 && bad_witness == 0 && elapsed < 30.0;
  return {ok, std::to_string(admissible_count) + " admissible / " +
                  std::to_string(inadmissible_count) + " inadmissible, " +
                  std::to_string(undecided) + " undecided, " + std::to_string(bad_witness) +
                  " bad witnesses; " + fmt(elapsed) + " s (limit 30)"};
}

// --------------------------------------------------------------------------
// 4. Orbit uniqueness: orbit_agreement <= 1e-6 over 100 trials on 50 random
//    admissible instances.
// --------------------------------------------------------------------------
CriterionResult criterion_4() {
  auto t0 = Clock::now();
  std::vector<Cone> cones = catalog();
  Rng rng(derive_seed(9004, 0));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Cone& cone = cones[static_cast<std::size_t>(i) % cones.size()];
    int k = rng.uniform_int(1, cone.dim() - 1);
    Subspace h = admissible_subspace(cone, k, rng);
    TubePoint x = tube_point(cone, rng);
    worst = std::max(
        worst, orbit_agreement(cone, h, x, 100, derive_seed(444, static_cast<std::uint64_t>(i))));
  }
  double elapsed = seconds_since(t0);
  bool ok = worst <= 1e-6 && elapsed < 30.0;
  return {ok, "max orbit disagreement " + fmt(worst) + " (limit 1e-6); " + fmt(elapsed) +
                  " s (limit 30)"};
}

// --------------------------------------------------------------------------
// 5. Reduction solver: residual <= 1e-8 within 200 Newton iterations on 500
//    random admissible instances, one quarter started at margin ~1e-3.
// --------------------------------------------------------------------------
CriterionResult criterion_5() {
  auto t0 = Clock::now();
  std::vector<Cone> cones = catalog();
  Rng rng(derive_seed(9005, 0));
  double worst_residual = 0.0;
  int worst_iterations = 0;
  ReduceOptions options;
  options.check_admissibility = false;  // admissible by construction
  for (int i = 0; i < 500; ++i) {
    const Cone& cone = cones[static_cast<std::size_t>(i) % cones.size()];
    int k = rng.uniform_int(1, cone.dim() - 1);
    Subspace h = admissible_subspace(cone, k, rng);
    Vector im = (i % 4 == 0) ? boundary_adjacent_point(cone, rng, 1e-3) : interior_point(cone, rng);
    TubePoint x(cone, rng.gaussian(cone.dim()), im);
    ReductionResult res = reduce_point(cone, h, x, options);
    double recomputed = 0.0;
    Vector mu = momentum_map(translation_generators(h), res.point);
    if (mu.size() > 0) recomputed = mu.cwiseAbs().maxCoeff();
    worst_residual = std::max({worst_residual, res.residual, recomputed});
    worst_iterations = std::max(worst_iterations, res.iterations);
  }
  double elapsed = seconds_since(t0);
  bool ok = worst_residual <= 1e-8 && worst_iterations <= 200 && elapsed < 30.0;
  return {ok, "max residual " + fmt(worst_residual) + " (limit 1e-8), max iterations " +
                  std::to_string(worst_iterations) + " (limit 200); " + fmt(elapsed) +
                  " s (limit 30)"};
}

// --------------------------------------------------------------------------
// 6. Quotient biholomorphism data: tau-invariance of the quotient
//    coordinates at rounding level, lift-then-project round trip <= 1e-8 on
//    200 sampled quotient points per instance, -t rejected on every sample.
// --------------------------------------------------------------------------
CriterionResult criterion_6() {
  auto t0 = Clock::now();
  std::vector<Cone> cones = catalog();
  double worst_round = 0.0, worst_tau = 0.0;
  int not_member = 0, neg_accepted = 0;
  ReduceOptions options;
  options.check_admissibility = false;
  for (std::size_t inst = 0; inst < cones.size(); ++inst) {
    const Cone& cone = cones[inst];
    const int n = cone.dim();
    Rng rng(derive_seed(9006, inst));
    int k = rng.uniform_int(1, n - 1);
    Subspace h = admissible_subspace(cone, k, rng);
    const Matrix& basis = h.basis();
    const Matrix& comp = h.complement();
    for (int s = 0; s < 200; ++s) {
      std::uint64_t sample_seed = derive_seed(666, inst * 1000 + static_cast<std::uint64_t>(s));
      Vector w = interior_point(cone, rng);
      Vector t_im = comp.transpose() * w;
      Vector t_re = comp.transpose() * rng.gaussian(n);
      MembershipResult mem = quotient_membership(cone, h, t_im, sample_seed);
      if (mem.status != Membership::member) {
        ++not_member;
        continue;
      }
      // Lift with the certified shift, plus an arbitrary real fiber offset
      // the round trip must discard.
      Vector im_lift = comp * t_im + basis * mem.witness;
      Vector re_lift = comp * t_re + basis * rng.gaussian(k);
      TubePoint z(cone, re_lift, im_lift);
      ReductionResult red = reduce_point(cone, h, z, options);
      SplitCoordinates split =
          split_map(cone, h, red.point.re(), red.point.im(), derive_seed(667, sample_seed));
      double round_err =
          std::max((split.quotient_re - t_re).cwiseAbs().maxCoeff(),
                   (split.quotient_im - t_im).cwiseAbs().maxCoeff());
      worst_round = std::max(worst_round, round_err);
      // tau-invariance: translating along the complexified fiber leaves the
      // quotient coordinates unchanged up to rounding.
      Vector shift_re = basis * rng.gaussian(k);
      Vector shift_im = basis * rng.gaussian(k);
      SplitCoordinates moved = split_map(cone, h, red.point.re() + shift_re,
                                         red.point.im() + shift_im, derive_seed(668, sample_seed));
      double scale = 1.0 + red.point.re().norm() + red.point.im().norm() + shift_re.norm() +
                     shift_im.norm();
      double tau_err =
          std::max((moved.quotient_re - split.quotient_re).cwiseAbs().maxCoeff(),
                   (moved.quotient_im - split.quotient_im).cwiseAbs().maxCoeff()) /
          scale;
      worst_tau = std::max(worst_tau, tau_err);
      // Properness spot check: the opposite quotient direction is rejected.
      MembershipResult neg = quotient_membership(cone, h, -t_im, derive_seed(669, sample_seed));
      if (neg.status != Membership::non_member) ++neg_accepted;
    }
  }
  double elapsed = seconds_since(t0);
  bool ok = worst_round <= 1e-8 && worst_tau <= 1e-12 && not_member == 0 && neg_accepted == 0 &&
            elapsed < 30.0;
  return {ok, "round trip " + fmt(worst_round) + " (limit 1e-8), tau drift " + fmt(worst_tau) +
                  " (limit 1e-12), " + std::to_string(not_member) + " lifts rejected, " +
                  std::to_string(neg_accepted) + " improper accepts; " + fmt(elapsed) +
                  " s (limit 30)"};
}

// --------------------------------------------------------------------------
// 7. Momentum defining property: d/dt mu(x + t u) matches
//    kahler_form(vector_field, u) to relative 1e-4 on 100 triples per family.
// --------------------------------------------------------------------------
CriterionResult criterion_7() {
  auto t0 = Clock::now();
  std::vector<Cone> cones = catalog();
  double worst = 0.0;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const Cone& cone = cones[c];
    Rng rng(derive_seed(9007, c));
    for (int i = 0; i < 100; ++i) {
      Vector im = comfortable_interior(cone, rng);
      TubePoint x(cone, rng.gaussian(cone.dim()), im);
      AffineGenerator xi = compatible_generator(cone, rng);
      Tangent u{0.3 * rng.gaussian(cone.dim()), 0.3 * rng.gaussian(cone.dim())};
      double lhs = fd_derivative(
          [&](double t) {
            return momentum(xi, TubePoint(cone, x.re() + t * u.re, x.im() + t * u.im));
          },
          0.0, 1e-5);
      double rhs = kahler_form_oracle(x, vector_field(xi, x), u);
      worst = std::max(worst, rel_err(lhs, rhs));
    }
  }
  double elapsed = seconds_since(t0);
  bool ok = worst <= 1e-4 && elapsed < 10.0;
  return {ok, "max rel deviation " + fmt(worst) + " (limit 1e-4); " + fmt(elapsed) +
                  " s (limit 10)"};
}

// --------------------------------------------------------------------------
// 8. Compactness bound: sampled points of (ball + H) inside the closed cone
//    never exceed slice_bound + 1e-9; the lorentz(1) worked case reproduces
//    p = 1/sqrt(2) and the bound sqrt(2)*w0 with corner equality.
// --------------------------------------------------------------------------
CriterionResult criterion_8() {
  auto t0 = Clock::now();
  std::vector<Cone> cones = catalog();
  Rng rng(derive_seed(9008, 0));
  double worst_excess = -1e300;
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const Cone& cone = cones[static_cast<std::size_t>(i) % cones.size()];
    const int n = cone.dim();
    int k = rng.uniform_int(1, n - 1);
    Subspace h = admissible_subspace(cone, k, rng);
    AdmissibilityCertificate cert =
        check_admissible(cone, h, derive_seed(888, static_cast<std::uint64_t>(i)));
    if (cert.verdict != Verdict::admissible) return {false, "instance lost admissibility"};
    Vector base = project_closure(cone, rng.gaussian(n));
    if (base.norm() < 1e-6) base = cone.canonical_interior();
    double k_radius = (h.complement().transpose() * base).norm();
    if (k_radius < 1e-9) continue;
    double bound = slice_bound(cone, h, k_radius, cert.witness);
    // Walk from the base point along subspace directions to the boundary;
    // every visited point keeps the same complement component, hence stays
    // inside ball(k_radius) + H.
    for (int walk = 0; walk < 10; ++walk) {
      Vector dir = h.basis() * rng.gaussian(k);
      if (dir.norm() < 1e-12) continue;
      dir.normalize();
      double t_exit = exit_parameter(cone, base, dir);
      for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        Vector p = base + frac * t_exit * dir;
        worst_excess = std::max(worst_excess, p.norm() - bound);
        ++checked;
      }
    }
  }
  // Worked lorentz(1) case: H spanned by the space axis, witness (1, 0).
  Cone lor = Cone::lorentz(1);
  Matrix hb(2, 1);
  hb << 0.0, 1.0;
  Subspace h_worked{hb};
  Vector y(2);
  y << 1.0, 0.0;
  double p_err = std::abs(lower_bound_constant(lor, y) - 1.0 / std::sqrt(2.0));
  double bound_err = 0.0, corner_gap = 0.0;
  for (double w0 : {1.0, 0.7, 2.5}) {
    double bound = slice_bound(lor, h_worked, w0, y);
    bound_err = std::max(bound_err, std::abs(bound - std::sqrt(2.0) * w0));
    Vector corner(2);
    corner << w0, w0;  // boundary point of the slice realizing the bound
    corner_gap = std::max(corner_gap, std::abs(corner.norm() - bound));
  }
  double elapsed = seconds_since(t0);
  bool ok = worst_excess <= 1e-9 && p_err <= 1e-9 && bound_err <= 1e-9 && corner_gap <= 1e-9 &&
            checked > 0 && elapsed < 10.0;
  return {ok, "max overshoot " + fmt(worst_excess) + " over " + std::to_string(checked) +
                  " points (limit 1e-9), worked-case errors p " + fmt(p_err) + ", bound " +
                  fmt(bound_err) + ", corner " + fmt(corner_gap) + "; " + fmt(elapsed) +
                  " s (limit 10)"};
}

// --------------------------------------------------------------------------
// 9. Lie condition: worked pass and fail candidates behave as documented;
//    dim Ker = 2n-k and dim W = 2n-2k on 100 random instances.
// --------------------------------------------------------------------------
CriterionResult criterion_9() {
  auto t0 = Clock::now();
  Cone lor = Cone::lorentz(1);
  Matrix hb(2, 1);
  hb << 0.0, 1.0;
  Subspace h_worked{hb};
  GeneratorSet gens = translation_generators(h_worked);
  Vector zero2 = Vector::Zero(2), e0 = Vector::Zero(2);
  e0[0] = 1.0;
  TubePoint x0(lor, zero2, e0);

  GeneratorSet pass_candidate;
  pass_candidate.push_back({Matrix::Zero(2, 2), e0});
  pass_candidate.push_back({Matrix::Identity(2, 2), zero2});
  LieConditionReport pass_rep = verify_lie_condition(lor, gens, x0, pass_candidate, 25, 31337);
  bool pass_ok = pass_rep.pass && pass_rep.span_residual <= 1e-8 &&
                 pass_rep.bracket_residual <= 1e-8 && pass_rep.orbit_residual <= 1e-8;

  GeneratorSet fail_candidate;
  fail_candidate.push_back({Matrix::Zero(2, 2), e0});
  Vector e1 = Vector::Zero(2);
  e1[1] = 1.0;
  fail_candidate.push_back({Matrix::Zero(2, 2), e1});
  LieConditionReport fail_rep = verify_lie_condition(lor, gens, x0, fail_candidate, 25, 31337);
  bool fail_ok = !fail_rep.pass && fail_rep.reason == "span";

  std::vector<Cone> cones = catalog();
  Rng rng(derive_seed(9009, 0));
  ReduceOptions options;
  options.check_admissibility = false;
  int dim_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Cone& cone = cones[static_cast<std::size_t>(i) % cones.size()];
    const int n = cone.dim();
    int k = rng.uniform_int(1, n - 1);
    Subspace h = admissible_subspace(cone, k, rng);
    TubePoint x = tube_point(cone, rng);
    ReductionResult red = reduce_point(cone, h, x, options);
    GeneratorSet sub_gens = translation_generators(h);
    if (kernel_basis(sub_gens, red.point).cols() != 2 * n - k) ++dim_failures;
    if (w_space(sub_gens, red.point).cols() != 2 * n - 2 * k) ++dim_failures;
  }
  double elapsed = seconds_since(t0);
  bool ok = pass_ok && fail_ok && dim_failures == 0 && elapsed < 10.0;
  return {ok, std::string("worked pass ") + (pass_ok ? "ok" : "FAILED") + ", worked fail " +
                  (fail_ok ? "ok" : "FAILED") + ", " + std::to_string(dim_failures) +
                  " dimension mismatches; " + fmt(elapsed) + " s (limit 10)"};
}

// --------------------------------------------------------------------------
// 10. End-to-end: the CLI verify command with defaults exits 0 in under 60 s
//     and reproduces byte-identical reports for the same seed.
// --------------------------------------------------------------------------
int run_command(const std::string& command) {
  int status = std::system(command.c_str());
#ifndef _WIN32
  if (status != -1 && WIFEXITED(status)) return WEXITSTATUS(status);
#endif
  return status;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CriterionResult criterion_10(const std::string& cli) {
  auto t0 = Clock::now();
  const std::string out_a = "acceptance_verify_a.json";
  const std::string out_b = "acceptance_verify_b.json";
  int code_a = run_command(cli + " verify --seed 20260819 > " + out_a);
  double first_run = seconds_since(t0);
  int code_b = run_command(cli + " verify --seed 20260819 > " + out_b);
  std::string report_a = slurp(out_a);
  std::string report_b = slurp(out_b);
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  bool ok = code_a == 0 && code_b == 0 && !report_a.empty() && report_a == report_b &&
            first_run < 60.0;
  return {ok, "exit codes " + std::to_string(code_a) + "/" + std::to_string(code_b) +
                  ", reports " + (report_a == report_b ? "byte-identical" : "DIFFER") + " (" +
                  std::to_string(report_a.size()) + " bytes); first run " + fmt(first_run) +
                  " s (limit 60)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "./siegel-reduce";
  struct Entry {
    const char* name;
    std::function<CriterionResult()> run;
  };
  const Entry entries[] = {
      {"lorentz dual-map anchor", criterion_1},
      {"dual identity g(w, w*) = dim V", criterion_2},
      {"admissibility equivalence", criterion_3},
      {"orbit uniqueness", criterion_4},
      {"reduction solver", criterion_5},
      {"quotient biholomorphism data", criterion_6},
      {"momentum defining property", criterion_7},
      {"compactness bound", criterion_8},
      {"lie condition", criterion_9},
      {"end-to-end verify", [&cli] { return criterion_10(cli); }},
  };
  bool all = true;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    CriterionResult result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    all = all && result.pass;
    std::printf("%s  criterion %2d  %-32s  %s\n", result.pass ? "PASS" : "FAIL", index, entry.name,
                result.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
