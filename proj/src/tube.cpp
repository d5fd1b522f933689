// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include "siegel/tube.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace siegel {

TubePoint::TubePoint(Cone cone, Vector re, Vector im)
    : cone_(std::move(cone)), re_(std::move(re)), im_(std::move(im)) {
  if (re_.size() != cone_.dim() || im_.size() != cone_.dim())
    raise(errc::dimension_mismatch, "tube point: coordinate length does not match the cone");
  if (!re_.allFinite() || !im_.allFinite())
    raise(errc::invalid_argument, "tube point: non-finite entry");
  if (margin(cone_, im_) <= kInteriorTol)
    raise(errc::not_in_domain, "tube point: imaginary part is not interior to the cone");
}

double potential(const TubePoint& x) { return log_char(x.cone(), x.im()); }

Tangent complex_mul_i(const Tangent& u) { return {-u.im, u.re}; }

double kahler_form_oracle(const TubePoint& x, const Tangent& u, const Tangent& w) {
  const Cone& cone = x.cone();
  const int n = cone.dim();
  if (u.re.size() != n || u.im.size() != n || w.re.size() != n || w.im.size() != n)
    raise(errc::dimension_mismatch, "kahler_form_oracle: tangent length does not match the cone");

  // The form is bilinear; normalizing the directions keeps the stencil size
  // independent of the tangent magnitudes.
  const double nu = std::sqrt(u.re.squaredNorm() + u.im.squaredNorm());
  const double nw = std::sqrt(w.re.squaredNorm() + w.im.squaredNorm());
  if (nu == 0.0 || nw == 0.0) return 0.0;
  const Vector u_re = u.re / nu, u_im = u.im / nu;
  const Vector w_re = w.re / nw, w_im = w.im / nw;

  const Vector& im0 = x.im();
  double h = 1e-5 * (1.0 + std::sqrt(x.re().squaredNorm() + im0.squaredNorm()));
  for (int attempt = 0; attempt <= 3; ++attempt, h *= 0.1) {
    // The potential sees imaginary parts only. The inner difference along
    // J a moves im by a.re, the outer difference along b moves im by b.im.
    const std::array<Vector, 8> stencil = {
        im0 + h * u_im + h * w_re, im0 + h * u_im - h * w_re,
        im0 - h * u_im + h * w_re, im0 - h * u_im - h * w_re,
        im0 + h * w_im + h * u_re, im0 + h * w_im - h * u_re,
        im0 - h * w_im + h * u_re, im0 - h * w_im - h * u_re};
    bool feasible = true;
    for (const Vector& y : stencil) {
      if (margin(cone, y) <= kInteriorTol) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    std::array<double, 8> f;
    for (int i = 0; i < 8; ++i) f[i] = log_char(cone, stencil[i]);
    const double scale = 1.0 / (4.0 * h * h);
    const double d_uw = (f[0] - f[1] - f[2] + f[3]) * scale;  // u-derivative of d^c(potential)(w)
    const double d_wu = (f[4] - f[5] - f[6] + f[7]) * scale;  // w-derivative of d^c(potential)(u)
    return nu * nw * (d_wu - d_uw);
  }
  raise(errc::not_in_domain, "kahler_form_oracle: differencing stencil leaves the domain");
}

}  // namespace siegel
