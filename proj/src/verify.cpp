// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>

#include <Eigen/Dense>

#include "siegel/error.hpp"
#include "siegel/liecond.hpp"
#include "siegel/moment.hpp"
#include "siegel/reduce.hpp"
#include "siegel/sampling.hpp"
#include "siegel/tube.hpp"

namespace siegel {
namespace {

// ---------------------------------------------------------------------------
// Small numerical helpers local to the invariant suite.  These intentionally
// recompute quantities through independent routes (finite differences,
// bisection, brute-force sampling) rather than reusing the closed forms they
// are meant to check.
// ---------------------------------------------------------------------------

double rel_err(double got, double want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

double rel_err(const Vector& got, const Vector& want) {
  return (got - want).cwiseAbs().maxCoeff() / (1.0 + want.cwiseAbs().maxCoeff());
}

double rel_err(const Matrix& got, const Matrix& want) {
  return (got - want).cwiseAbs().maxCoeff() / (1.0 + want.cwiseAbs().maxCoeff());
}

Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& w, double h) {
  Vector g(w.size());
  Vector p = w;
  for (int i = 0; i < w.size(); ++i) {
    const double wi = w[i];
    p[i] = wi + h;
    const double fp = f(p);
    p[i] = wi - h;
    const double fm = f(p);
    p[i] = wi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Matrix fd_jacobian(const std::function<Vector(const Vector&)>& f, const Vector& w, double h) {
  const Vector f0 = f(w);
  Matrix jac(f0.size(), w.size());
  Vector p = w;
  for (int i = 0; i < w.size(); ++i) {
    const double wi = w[i];
    p[i] = wi + h;
    const Vector fp = f(p);
    p[i] = wi - h;
    const Vector fm = f(p);
    p[i] = wi;
    jac.col(i) = (fp - fm) / (2.0 * h);
  }
  return jac;
}

// Interior point kept safely away from the boundary so that fixed
// finite-difference stencils of step ~1e-5 remain inside the cone.
Vector safe_interior(const Cone& cone, Rng& rng, double min_margin = 5e-2) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector w = interior_point(cone, rng);
    const double m = margin(cone, w);
    if (m > min_margin && w.norm() < 50.0) return w;
  }
  // Deterministic fallback: the canonical interior point has margin 1.
  return cone.canonical_interior();
}

TubePoint safe_tube_point(const Cone& cone, Rng& rng) {
  Vector im = safe_interior(cone, rng);
  Vector re = 1.5 * rng.gaussian(cone.dim());
  return TubePoint(cone, re, im);
}

// Largest t >= 0 with margin(base + t * dir) >= 0, for a direction that
// eventually exits the cone.  Located by doubling then bisection.
double boundary_parameter(const Cone& cone, const Vector& base, const Vector& dir) {
  double lo = 0.0;
  double hi = 1.0;
  int guard = 0;
  while (margin(cone, Vector(base + hi * dir)) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 300) raise(errc::sampling_failure, "direction does not exit the cone");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (margin(cone, Vector(base + mid * dir)) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Subspace sample_admissible(const Cone& cone, int k, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Subspace h = admissible_subspace(cone, k, rng);
    AdmissibilityCertificate cert = check_admissible(cone, h, rng.raw());
    if (cert.verdict == Verdict::admissible) return h;
  }
  raise(errc::sampling_failure, "could not sample an admissible subspace");
}

// A point of the zero cone C_H, produced by reducing a random interior point.
Vector zero_cone_point(const Cone& cone, const Subspace& h, Rng& rng) {
  TubePoint x = safe_tube_point(cone, rng);
  ReduceOptions opt;
  opt.check_admissibility = false;
  ReductionResult res = reduce_point(cone, h, x, opt);
  return res.point.im();
}

Matrix orthonormal_columns(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const double smax = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-12 * std::max(1.0, smax)) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Largest principal angle gap between span(a) and span(b), both orthonormal:
// 0 when the spans agree.
double span_gap(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(Matrix(a.transpose() * b));
  const double smin = svd.singularValues().minCoeff();
  return 1.0 - std::min(1.0, smin);
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

class Suite {
 public:
  Suite(const std::vector<Cone>& cones, int trials, std::uint64_t seed, const Tolerances& tol)
      : cones_(cones), trials_(trials), seed_(seed), tol_(tol) {}

  const Cone& cone_for(int trial) const { return cones_[trial % cones_.size()]; }

  Rng rng_for(int invariant_index, int trial) const {
    return Rng(derive_seed(seed_, static_cast<std::uint64_t>(invariant_index) * 1000003u +
                                      static_cast<std::uint64_t>(trial)));
  }

  double tol(const std::string& name) const { return tol_.get(name); }

  // Runs one invariant: fn(cone, rng) -> residual; a trial passes when the
  // residual is <= threshold.
  void run(const std::string& name, double threshold,
           const std::function<double(const Cone&, Rng&)>& fn, int trial_cap = 0) {
    InvariantResult res;
    res.name = name;
    res.threshold = threshold;
    const int idx = static_cast<int>(report_.invariants.size());
    int n = trials_;
    if (trial_cap > 0) n = std::min(n, trial_cap);
    for (int i = 0; i < n; ++i) {
      Rng rng = rng_for(idx, i);
      double residual;
      try {
        residual = fn(cone_for(i), rng);
      } catch (const error&) {
        residual = std::numeric_limits<double>::infinity();
      }
      ++res.trials;
      res.worst = std::max(res.worst, residual);
      if (!(residual <= threshold)) ++res.failures;
    }
    res.pass = res.failures == 0;
    if (!res.pass && report_.all_pass) {
      report_.all_pass = false;
      report_.first_failure = name;
    }
    report_.invariants.push_back(std::move(res));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  const std::vector<Cone>& cones_;
  int trials_;
  std::uint64_t seed_;
  const Tolerances& tol_;
  VerifyReport report_;
};

constexpr double kBool = 0.5;  // threshold for boolean (0 = pass, 1 = fail) residuals

double boolean(bool ok) { return ok ? 0.0 : 1.0; }

// ---------------------------------------------------------------------------
// Cone invariants
// ---------------------------------------------------------------------------

void add_cone_invariants(Suite& s, const Tolerances& tol) {
  const double id_tol = tol.get("identity");

  // log_char(t*w) = log_char(w) - degree * log t
  s.run("cone.homogeneity", id_tol, [](const Cone& cone, Rng& rng) {
    Vector w = safe_interior(cone, rng);
    double worst = 0.0;
    for (double t : {0.5, 2.0, 7.0}) {
      const double got = log_char(cone, Vector(t * w));
      const double want = log_char(cone, w) - cone.degree() * std::log(t);
      worst = std::max(worst, rel_err(got, want));
    }
    return worst;
  });

  // g(w, dual_map(w)) = degree, and dual_map lands in the interior of the dual
  // cone (= the cone itself under the self-dual pairing).
  s.run("cone.dual_identity", id_tol, [](const Cone& cone, Rng& rng) {
    Vector w = safe_interior(cone, rng);
    Vector psi = dual_map(cone, w);
    double residual = rel_err(w.dot(psi), static_cast<double>(cone.degree()));
    if (!(dual_margin(cone, psi) > 0.0)) residual = 1.0;
    return residual;
  });

  // Strict monotonicity of the dual map: <psi(w1)-psi(w2), w1-w2> < 0 for
  // distinct interior points (the barrier is strictly convex, psi = -grad).
  s.run("cone.dual_monotonicity", 0.0, [](const Cone& cone, Rng& rng) {
    Vector w1 = safe_interior(cone, rng);
    Vector w2 = safe_interior(cone, rng);
    if ((w1 - w2).norm() < 1e-8) w2 = w1 + Vector::Ones(cone.dim()) * 0.1;
    const double inner = (dual_map(cone, w1) - dual_map(cone, w2)).dot(w1 - w2);
    return boolean(inner < 0.0);
  });

  // dual_map agrees with -grad log_char computed by central differences.
  s.run("cone.gradient_fd", tol.get("fd_gradient"), [](const Cone& cone, Rng& rng) {
    Vector w = safe_interior(cone, rng);
    const double h = 1e-6 * (1.0 + w.norm());
    Vector fd = fd_gradient([&](const Vector& p) { return log_char(cone, p); }, w, h);
    return rel_err(Vector(-fd), dual_map(cone, w));
  });

  // log_char_hessian agrees with the Jacobian of -dual_map.
  s.run("cone.hessian_fd", tol.get("fd_hessian"), [](const Cone& cone, Rng& rng) {
    Vector w = safe_interior(cone, rng);
    const double h = 1e-5 * (1.0 + w.norm());
    Matrix fd = fd_jacobian([&](const Vector& p) { return Vector(-dual_map(cone, p)); }, w, h);
    return rel_err(fd, log_char_hessian(cone, w));
  });

  // The barrier Hessian is symmetric positive definite on the interior.
  s.run("cone.hessian_spd", kBool, [](const Cone& cone, Rng& rng) {
    Vector w = safe_interior(cone, rng);
    Matrix hess = log_char_hessian(cone, w);
    const double asym = (hess - hess.transpose()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hess);
    const double lmin = eig.eigenvalues().minCoeff();
    return boolean(asym <= 1e-10 && lmin > 0.0);
  });

  // log_char blows up monotonically along margin levels 1e-3 .. 1e-10.
  s.run("cone.boundary_blowup", kBool, [](const Cone& cone, Rng&) {
    // Points with exact margin 10^-k, made by perturbing the canonical
    // interior point inside its first leaf block.
    Vector base = cone.canonical_interior();
    const LeafBlock leaf = leaf_blocks(cone).front();
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 3; k <= 10; ++k) {
      const double eps = std::pow(10.0, -k);
      Vector w = base;
      if (leaf.cone->kind() == Cone::Kind::orthant) {
        w[leaf.offset] = eps;
      } else {
        w[leaf.offset] = 1.0;
        w[leaf.offset + 1] = 1.0 - eps;
      }
      const double value = log_char(cone, w);
      if (!(std::isfinite(value) && value > prev)) return 1.0;
      prev = value;
    }
    return 0.0;
  });

  // project_closure is optimal: no sampled closure point is closer.
  s.run("cone.projection", kBool, [](const Cone& cone, Rng& rng) {
    Vector z = 3.0 * rng.gaussian(cone.dim());
    Vector p = project_closure(cone, z);
    if (margin(cone, p) < -1e-12) return 1.0;
    const double dist = (z - p).norm();
    for (int j = 0; j < 200; ++j) {
      Vector candidate = project_closure(cone, Vector(3.0 * rng.gaussian(cone.dim())));
      if ((z - candidate).norm() < dist - 1e-9) return 1.0;
    }
    return 0.0;
  });

  // lower_bound_constant is a valid lower bound on the closure sphere and is
  // attained up to slack by a random sweep.
  s.run("cone.lower_bound", kBool, [](const Cone& cone, Rng& rng) {
    Vector y = dual_map(cone, safe_interior(cone, rng));
    const double p = lower_bound_constant(cone, y);
    if (!(p > 0.0)) return 1.0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 400; ++j) {
      Vector w = project_closure(cone, rng.gaussian(cone.dim()));
      const double norm = w.norm();
      if (norm < 1e-9) continue;
      const double value = y.dot(w) / norm;
      best = std::min(best, value);
      if (value < p - 1e-7 * (1.0 + std::abs(p))) return 1.0;  // bound violated
    }
    // The sampled minimum must come reasonably close to the reported constant.
    return boolean(best < p * 1.5 + 1e-6);
  });
}

// ---------------------------------------------------------------------------
// Tube-domain invariants
// ---------------------------------------------------------------------------

void add_tube_invariants(Suite& s, const Tolerances& tol) {
  const double form_tol = tol.get("fd_form");

  // The potential depends on Im z only.
  s.run("tube.translation_invariance", 0.0, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    TubePoint y(cone, Vector(x.re() + rng.gaussian(cone.dim())), x.im());
    return std::abs(potential(x) - potential(y));
  });

  // Strict convexity of the potential along imaginary lines.
  s.run("tube.strict_convexity", kBool, [](const Cone& cone, Rng& rng) {
    Vector w = safe_interior(cone, rng);
    Vector d = rng.gaussian(cone.dim());
    if (d.norm() < 1e-12) d = Vector::Ones(cone.dim());
    d.normalize();
    const double h = 1e-3;
    const double f0 = log_char(cone, w);
    const double fp = log_char(cone, Vector(w + h * d));
    const double fm = log_char(cone, Vector(w - h * d));
    return boolean(fp + fm - 2.0 * f0 > 0.0);
  });

  s.run("tube.kahler_antisymmetry", 1e-8, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    const int n = cone.dim();
    Tangent u{rng.gaussian(n), rng.gaussian(n)};
    Tangent w{rng.gaussian(n), rng.gaussian(n)};
    const double uw = kahler_form_oracle(x, u, w);
    const double wu = kahler_form_oracle(x, w, u);
    const double uu = kahler_form_oracle(x, u, u);
    return std::max(std::abs(uw + wu), std::abs(uu)) / (1.0 + std::abs(uw));
  });

  s.run("tube.kahler_positivity", kBool, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    const int n = cone.dim();
    Tangent u{rng.gaussian(n), rng.gaussian(n)};
    if (u.re.norm() + u.im.norm() < 1e-12) u.re = Vector::Ones(n);
    return boolean(kahler_form_oracle(x, u, complex_mul_i(u)) > 0.0);
  });

  s.run("tube.kahler_j_invariance", form_tol, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    const int n = cone.dim();
    Tangent u{rng.gaussian(n), rng.gaussian(n)};
    Tangent w{rng.gaussian(n), rng.gaussian(n)};
    const double plain = kahler_form_oracle(x, u, w);
    const double rotated = kahler_form_oracle(x, complex_mul_i(u), complex_mul_i(w));
    return rel_err(rotated, plain);
  });

  s.run("tube.kahler_bilinearity", form_tol, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    const int n = cone.dim();
    Tangent u{rng.gaussian(n), rng.gaussian(n)};
    Tangent v{rng.gaussian(n), rng.gaussian(n)};
    Tangent w{rng.gaussian(n), rng.gaussian(n)};
    Tangent sum{u.re + v.re, u.im + v.im};
    const double lhs = kahler_form_oracle(x, sum, w);
    const double rhs = kahler_form_oracle(x, u, w) + kahler_form_oracle(x, v, w);
    double worst = rel_err(lhs, rhs);
    const double scaled = kahler_form_oracle(x, Tangent{2.5 * u.re, 2.5 * u.im}, w);
    worst = std::max(worst, rel_err(scaled, 2.5 * kahler_form_oracle(x, u, w)));
    return worst;
  });
}

// ---------------------------------------------------------------------------
// Moment-map invariants
// ---------------------------------------------------------------------------

void add_moment_invariants(Suite& s, const Tolerances& tol) {
  // d mu^xi (x)[u] = omega(xi_X(x), u) for cone-compatible generators,
  // with the left side from finite differences of momentum alone.
  s.run("moment.defining_property", tol.get("fd_form"), [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    AffineGenerator xi = compatible_generator(cone, rng);
    const int n = cone.dim();
    Tangent u{rng.gaussian(n), rng.gaussian(n)};
    const double h = 1e-6 * (1.0 + x.re().norm() + x.im().norm());
    const double mp =
        momentum(xi, TubePoint(cone, Vector(x.re() + h * u.re), Vector(x.im() + h * u.im)));
    const double mm =
        momentum(xi, TubePoint(cone, Vector(x.re() - h * u.re), Vector(x.im() - h * u.im)));
    const double fd = (mp - mm) / (2.0 * h);
    const double form = kahler_form_oracle(x, vector_field(xi, x), u);
    return rel_err(fd, form);
  });

  // mu is linear in the generator.
  s.run("moment.linearity", 1e-10, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    AffineGenerator a = compatible_generator(cone, rng);
    AffineGenerator b = compatible_generator(cone, rng);
    const double alpha = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(-2.0, 2.0);
    AffineGenerator mix{alpha * a.linear + beta * b.linear,
                        alpha * a.translation + beta * b.translation};
    const double got = momentum(mix, x);
    const double want = alpha * momentum(a, x) + beta * momentum(b, x);
    return rel_err(got, want);
  });

  // Bracket antisymmetry and the Jacobi identity.
  s.run("moment.bracket_identities", 1e-10, [](const Cone& cone, Rng& rng) {
    AffineGenerator a = compatible_generator(cone, rng);
    AffineGenerator b = compatible_generator(cone, rng);
    AffineGenerator c = compatible_generator(cone, rng);
    AffineGenerator ab = bracket(a, b);
    AffineGenerator ba = bracket(b, a);
    double worst = (ab.linear + ba.linear).cwiseAbs().maxCoeff();
    worst = std::max(worst, (ab.translation + ba.translation).cwiseAbs().maxCoeff());
    AffineGenerator j1 = bracket(a, bracket(b, c));
    AffineGenerator j2 = bracket(b, bracket(c, a));
    AffineGenerator j3 = bracket(c, bracket(a, b));
    worst = std::max(worst, (j1.linear + j2.linear + j3.linear).cwiseAbs().maxCoeff());
    worst = std::max(worst,
                     (j1.translation + j2.translation + j3.translation).cwiseAbs().maxCoeff());
    return worst;
  });

  // The bracket of two cone-compatible generators is cone-compatible.
  s.run("moment.bracket_compatibility", kBool, [](const Cone& cone, Rng& rng) {
    AffineGenerator a = compatible_generator(cone, rng);
    AffineGenerator b = compatible_generator(cone, rng);
    return boolean(is_cone_compatible(cone, bracket(a, b), 1e-8));
  });

  // exp((s+t) xi) = exp(s xi) . exp(t xi) as affine maps.
  s.run("moment.exp_group_law", 1e-10, [](const Cone& cone, Rng& rng) {
    AffineGenerator xi = compatible_generator(cone, rng);
    const double sparam = rng.uniform(-1.5, 1.5);
    const double tparam = rng.uniform(-1.5, 1.5);
    const auto [es, bs] = exp_affine(xi, sparam);
    const auto [et, bt] = exp_affine(xi, tparam);
    const auto [est, best] = exp_affine(xi, sparam + tparam);
    Matrix comp_linear = es * et;
    Vector comp_translation = es * bt + bs;
    double worst = rel_err(comp_linear, est);
    worst = std::max(worst, rel_err(comp_translation, best));
    return worst;
  });

  // momentum_jacobian agrees with finite differences of momentum_map.
  s.run("moment.jacobian_fd", tol.get("fd_hessian"), [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    GeneratorSet gens;
    gens.push_back(compatible_generator(cone, rng));
    gens.push_back(compatible_generator(cone, rng));
    const int n = cone.dim();
    Vector z(2 * n);
    z << x.re(), x.im();
    const double h = 1e-5 * (1.0 + z.norm());
    Matrix fd = fd_jacobian(
        [&](const Vector& p) {
          TubePoint q(cone, Vector(p.head(n)), Vector(p.tail(n)));
          return momentum_map(gens, q);
        },
        z, h);
    return rel_err(fd, momentum_jacobian(gens, x));
  });

  // Pure translations have a vanishing derivative in the real directions.
  s.run("moment.jacobian_translation_row", 1e-14, [](const Cone& cone, Rng& rng) {
    TubePoint x = safe_tube_point(cone, rng);
    const int n = cone.dim();
    GeneratorSet gens;
    gens.push_back(AffineGenerator{Matrix::Zero(n, n), rng.gaussian(n)});
    Matrix jac = momentum_jacobian(gens, x);
    return jac.leftCols(n).cwiseAbs().maxCoeff();
  });
}

// ---------------------------------------------------------------------------
// Reduction invariants
// ---------------------------------------------------------------------------

int subspace_dim_for(const Cone& cone, Rng& rng) {
  const int n = cone.dim();
  if (n == 1) return 1;
  return rng.uniform_int(1, n - 1);
}

void add_reduce_invariants(Suite& s, const Tolerances& tol) {
  const double zero_tol = tol.get("zero_cone");
  const double residual_tol = tol.get("residual");
  const double roundtrip_tol = tol.get("roundtrip");
  const double agreement_tol = tol.get("agreement");

  // Every random subspace is classified (no undecided), and the returned
  // witness certifies the verdict independently.
  s.run("reduce.admissibility", kBool, [](const Cone& cone, Rng& rng) {
    const int n = cone.dim();
    const int k = subspace_dim_for(cone, rng);
    Subspace h = random_subspace(n, k, rng);
    AdmissibilityCertificate cert = check_admissible(cone, h, rng.raw());
    if (cert.verdict == Verdict::undecided) return 1.0;
    if (cert.witness.size() != n) return 1.0;
    const double wnorm = cert.witness.norm();
    if (!(wnorm > 1e-12)) return 1.0;
    if (cert.verdict == Verdict::admissible) {
      // Witness: y orthogonal to H, interior to the dual cone.
      const double orth = (h.basis().transpose() * cert.witness).cwiseAbs().maxCoeff();
      return boolean(orth <= 1e-9 * (1.0 + wnorm) && dual_margin(cone, cert.witness) > 0.0);
    }
    // Witness: unit vector of H meeting the closed cone up to the band.
    Vector in_h = h.basis() * (h.basis().transpose() * cert.witness);
    const double off = (in_h - cert.witness).cwiseAbs().maxCoeff();
    return boolean(off <= 1e-9 * (1.0 + wnorm) && margin(cone, cert.witness) >= -1e-9);
  });

  // Newton reduction converges within budget to a small residual, also from
  // near-boundary starting points, moving only the imaginary H-component.
  s.run("reduce.newton", kBool, [residual_tol](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    ReduceOptions opt;
    opt.check_admissibility = false;
    for (int variant = 0; variant < 2; ++variant) {
      Vector im =
          variant == 0 ? safe_interior(cone, rng) : boundary_adjacent_point(cone, rng, 1e-3);
      TubePoint x(cone, Vector(rng.gaussian(cone.dim())), im);
      ReductionResult res = reduce_point(cone, h, x, opt);
      if (!(res.residual <= residual_tol && res.iterations <= opt.max_iter)) return 1.0;
      if ((res.point.re() - x.re()).cwiseAbs().maxCoeff() != 0.0) return 1.0;
      Vector delta = res.point.im() - x.im();
      Vector in_h = h.basis() * (h.basis().transpose() * delta);
      if ((delta - in_h).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + delta.norm())) return 1.0;
    }
    return 0.0;
  });

  // The reduced point is the unique zero-cone representative on its slice.
  s.run("reduce.slice_uniqueness", 1e-6, [zero_tol](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    Vector omega = zero_cone_point(cone, h, rng);
    if (!in_zero_cone(cone, h, omega, zero_tol)) return 1.0;
    double worst = 0.0;
    for (int j = 0; j < 25; ++j) {
      Vector c = rng.gaussian(k);
      Vector other = omega + h.basis() * c;
      if (margin(cone, other) <= kInteriorTol) continue;
      if (in_zero_cone(cone, h, other, zero_tol))
        worst = std::max(worst, (other - omega).norm());
    }
    return worst;
  });

  // Zero-cone membership is scale invariant (dual_map scales by 1/lambda).
  s.run("reduce.zero_cone_scaling", kBool, [](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    Vector omega = zero_cone_point(cone, h, rng);
    Vector psi = dual_map(cone, omega);
    for (double lambda : {0.5, 2.0, 7.0}) {
      Vector scaled_psi = dual_map(cone, Vector(lambda * omega));
      if ((scaled_psi - psi / lambda).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + psi.norm()))
        return 1.0;
      if (!in_zero_cone(cone, h, Vector(lambda * omega), 1e-8)) return 1.0;
    }
    return 0.0;
  });

  // Along the slice the barrier grows toward both feasible endpoints.
  s.run("reduce.slice_coercivity", kBool, [](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    Vector omega = zero_cone_point(cone, h, rng);
    Vector dir = h.basis() * rng.gaussian(k);
    if (dir.norm() < 1e-12) return 1.0;
    dir.normalize();
    for (int side = 0; side < 2; ++side) {
      Vector d = side == 0 ? dir : Vector(-dir);
      const double tmax = boundary_parameter(cone, omega, d);
      double prev = -std::numeric_limits<double>::infinity();
      for (double frac : {0.90, 0.93, 0.96, 0.99}) {
        const double value = log_char(cone, Vector(omega + frac * tmax * d));
        if (!(value > prev)) return 1.0;
        prev = value;
      }
    }
    return 0.0;
  });

  // The feasible slice is convex: midpoints of feasible shifts are feasible.
  s.run("reduce.slice_convexity", kBool, [](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    Vector base = safe_interior(cone, rng);
    Vector c1(k), c2(k);
    bool found1 = false, found2 = false;
    for (int j = 0; j < 200 && !(found1 && found2); ++j) {
      Vector c = rng.gaussian(k) * rng.uniform(0.0, 2.0);
      if (margin(cone, Vector(base + h.basis() * c)) > 0.0) {
        if (!found1) {
          c1 = c;
          found1 = true;
        } else {
          c2 = c;
          found2 = true;
        }
      }
    }
    if (!found1 || !found2) return 1.0;
    Vector mid = base + h.basis() * Vector(0.5 * (c1 + c2));
    return boolean(margin(cone, mid) > 0.0);
  });

  // Reduction of translated points along H agrees across the orbit.
  s.run("reduce.orbit_agreement", agreement_tol, [](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    TubePoint x = safe_tube_point(cone, rng);
    return orbit_agreement(cone, h, x, 10, rng.raw());
  });

  // Membership roundtrip: a lifted member splits back to its quotient
  // coordinates.
  s.run("reduce.roundtrip", roundtrip_tol, [](const Cone& cone, Rng& rng) {
    const int n = cone.dim();
    const int k = subspace_dim_for(cone, rng);
    if (k >= n) return 0.0;  // no quotient directions to roundtrip
    Subspace h = sample_admissible(cone, k, rng);
    Vector w = safe_interior(cone, rng);
    Vector t_im = h.complement().transpose() * w;
    MembershipResult mem = quotient_membership(cone, h, t_im, rng.raw());
    if (mem.status != Membership::member) return 1.0;
    Vector t_re = rng.gaussian(n - k);
    Vector z_re = h.complement() * t_re;
    Vector z_im = h.complement() * t_im + h.basis() * mem.witness;
    SplitCoordinates split = split_map(cone, h, z_re, z_im, rng.raw());
    double worst = (split.quotient_re - t_re).cwiseAbs().maxCoeff();
    worst = std::max(worst, (split.quotient_im - t_im).cwiseAbs().maxCoeff());
    return worst;
  });

  // Properness: if t is in the image, -t is not (for t away from zero).
  s.run("reduce.quotient_properness", kBool, [](const Cone& cone, Rng& rng) {
    const int n = cone.dim();
    const int k = subspace_dim_for(cone, rng);
    if (k >= n) return 0.0;
    Subspace h = sample_admissible(cone, k, rng);
    Vector w = safe_interior(cone, rng);
    Vector t = h.complement().transpose() * w;
    if (t.cwiseAbs().maxCoeff() < 1e-6) return 0.0;  // degenerate draw, skip
    MembershipResult pos = quotient_membership(cone, h, t, rng.raw());
    MembershipResult neg = quotient_membership(cone, h, Vector(-t), rng.raw());
    return boolean(pos.status == Membership::member && neg.status == Membership::non_member);
  });

  // reduced_coordinates matches the split of the reduced point.
  s.run("reduce.reduced_coordinates", 1e-12, [](const Cone& cone, Rng& rng) {
    const int n = cone.dim();
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    TubePoint x = safe_tube_point(cone, rng);
    ReduceOptions opt;
    opt.check_admissibility = false;
    opt.seed = rng.raw();
    SplitCoordinates got = reduced_coordinates(cone, h, x, opt);
    ReductionResult res = reduce_point(cone, h, x, opt);
    SplitCoordinates want = split_map(cone, h, res.point.re(), res.point.im(), opt.seed);
    double worst = 0.0;
    if (n > k) {
      worst = std::max(worst, (got.quotient_re - want.quotient_re).cwiseAbs().maxCoeff());
      worst = std::max(worst, (got.quotient_im - want.quotient_im).cwiseAbs().maxCoeff());
    }
    if (k > 0) {
      worst = std::max(worst, (got.fiber_re - want.fiber_re).cwiseAbs().maxCoeff());
      worst = std::max(worst, (got.fiber_im - want.fiber_im).cwiseAbs().maxCoeff());
    }
    return worst;
  });

  // slice_bound really bounds closure points whose complement part is small.
  s.run("reduce.slice_bound", kBool, [](const Cone& cone, Rng& rng) {
    const int k = subspace_dim_for(cone, rng);
    Subspace h = sample_admissible(cone, k, rng);
    AdmissibilityCertificate cert = check_admissible(cone, h, rng.raw());
    if (cert.verdict != Verdict::admissible) return 0.0;  // covered elsewhere
    for (int j = 0; j < 40; ++j) {
      Vector omega = project_closure(cone, Vector(2.0 * rng.gaussian(cone.dim())));
      const double k_radius = (h.complement().transpose() * omega).norm();
      const double bound = slice_bound(cone, h, k_radius, cert.witness);
      if (!(std::isfinite(bound) && bound >= 0.0)) return 1.0;
      if ((h.basis().transpose() * omega).norm() > bound + 1e-9) return 1.0;
    }
    return 0.0;
  });
}

// ---------------------------------------------------------------------------
// Lie-condition invariants
// ---------------------------------------------------------------------------

void add_liecond_invariants(Suite& s, const Tolerances& tol) {
  // Kernel and W-space dimensions for translation subalgebras.
  s.run("liecond.dimensions", kBool, [](const Cone& cone, Rng& rng) {
    const int n = cone.dim();
    if (n < 2) return 0.0;
    const int k = rng.uniform_int(1, n - 1);
    Subspace h = sample_admissible(cone, k, rng);
    GeneratorSet gens = translation_generators(h);
    Vector omega = zero_cone_point(cone, h, rng);
    TubePoint x(cone, Vector::Zero(n), omega);
    Matrix kernel = kernel_basis(gens, x);
    Matrix w = w_space(gens, x);
    return boolean(kernel.cols() == 2 * n - k && w.cols() == 2 * (n - k));
  });

  // W is J-invariant and contained in the kernel; for translations it equals
  // T + iT with T the barrier-orthogonal complement of H.
  s.run("liecond.w_space", kBool, [](const Cone& cone, Rng& rng) {
    const int n = cone.dim();
    if (n < 2) return 0.0;
    const int k = rng.uniform_int(1, n - 1);
    Subspace h = sample_admissible(cone, k, rng);
    GeneratorSet gens = translation_generators(h);
    Vector omega = zero_cone_point(cone, h, rng);
    TubePoint x(cone, Vector::Zero(n), omega);
    Matrix kernel = kernel_basis(gens, x);
    Matrix w = w_space(gens, x);
    // J-invariance.
    Matrix jmat = Matrix::Zero(2 * n, 2 * n);
    jmat.topRightCorner(n, n) = -Matrix::Identity(n, n);
    jmat.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
    Matrix jw = jmat * w;
    Matrix proj_w = w * (w.transpose() * jw);
    if ((jw - proj_w).cwiseAbs().maxCoeff() > 1e-10) return 1.0;
    // Containment in the kernel.
    Matrix proj_k = kernel * (kernel.transpose() * w);
    if ((w - proj_k).cwiseAbs().maxCoeff() > 1e-10) return 1.0;
    // Analytic description: T = ker(B^T Hess(omega)), W = T + iT.
    Matrix hess = log_char_hessian(cone, omega);
    Eigen::JacobiSVD<Matrix> svd(Matrix(h.basis().transpose() * hess), Eigen::ComputeFullV);
    Matrix t = svd.matrixV().rightCols(n - k);
    Matrix t_plus_it = Matrix::Zero(2 * n, 2 * (n - k));
    t_plus_it.topLeftCorner(n, n - k) = t;
    t_plus_it.bottomRightCorner(n, n - k) = t;
    return boolean(span_gap(orthonormal_columns(w), orthonormal_columns(t_plus_it)) <= 1e-8);
  });

  // The worked lorentz(1) example: a passing candidate and a span failure.
  s.run(
      "liecond.worked_example", kBool,
      [](const Cone&, Rng&) {
        Cone lor = Cone::lorentz(1);
        Subspace h(Matrix{{0.0}, {1.0}});
        TubePoint x0(lor, Vector::Zero(2), Vector{{1.0, 0.0}});
        GeneratorSet gens = translation_generators(h);
        GeneratorSet pass_candidate;
        pass_candidate.push_back(AffineGenerator{Matrix::Zero(2, 2), Vector{{1.0, 0.0}}});
        pass_candidate.push_back(AffineGenerator{Matrix::Identity(2, 2), Vector::Zero(2)});
        LieConditionReport ok = verify_lie_condition(lor, gens, x0, pass_candidate, 50, 0);
        if (!ok.pass || ok.span_residual > 1e-8 || ok.bracket_residual > 1e-8 ||
            ok.orbit_residual > 1e-6 || !ok.saturated)
          return 1.0;
        GeneratorSet bad_candidate;
        bad_candidate.push_back(AffineGenerator{Matrix::Zero(2, 2), Vector{{1.0, 0.0}}});
        bad_candidate.push_back(AffineGenerator{Matrix::Zero(2, 2), Vector{{0.0, 1.0}}});
        LieConditionReport bad = verify_lie_condition(lor, gens, x0, bad_candidate, 50, 0);
        return boolean(!bad.pass && bad.reason == "span");
      },
      1);

  (void)tol;
}

}  // namespace

std::vector<Cone> default_verify_cones() {
  std::vector<Cone> cones;
  for (int d = 1; d <= 4; ++d) cones.push_back(Cone::lorentz(d));
  for (int n : {2, 4, 6}) cones.push_back(Cone::orthant(n));
  cones.push_back(Cone::product({Cone::lorentz(1), Cone::orthant(2)}));
  return cones;
}

VerifyReport run_verify_suite(const std::vector<Cone>& cones, int trials, std::uint64_t seed,
                              const Tolerances& tol) {
  if (cones.empty()) raise(errc::invalid_argument, "verify suite needs at least one cone");
  if (trials < 0) raise(errc::invalid_argument, "verify suite needs trials >= 0");
  Suite suite(cones, trials, seed, tol);
  add_cone_invariants(suite, tol);
  add_tube_invariants(suite, tol);
  add_moment_invariants(suite, tol);
  add_reduce_invariants(suite, tol);
  add_liecond_invariants(suite, tol);
  return suite.take();
}

}  // namespace siegel
