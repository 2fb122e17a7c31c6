#pragma once

#include <cmath>

#include "rotsum/fourier.hpp"

namespace rotsum {

// The single oscillating building block shared by the resonant Fourier term
// g-tilde_k, its lattice form h_m, and the limit kernel q:
//
//   [ 2b/X^(1-a) + F sin(2 pi X eps)/(2 pi X) ] cos(pi * phase)
// + [ 2d/X^(1-a) - F (cos(2 pi X eps) - 1)/(2 pi X) ] sin(pi * phase),
//
// times sinc(Z) and the X > 0 indicator, with F = 2/((1-a) eps^a) and
// phase = 2 s + phi Z given reduced mod 2.  The three callers differ only in
// how (X, Z, s, phi) are produced; routing them through one function keeps
// the finite/limit identities exact to rounding.
struct OscTermView {
  double X = 0.0;
  double Z = 0.0;           // unreduced, for the sinc denominator
  double z_mod2 = 0.0;      // Z mod 2 in [-1, 1)
  double phase_mod2 = 0.0;  // (2 s + phi Z) mod 2 in [-1, 1)
};

struct OscTermCtx {
  double a;
  double eps;
  double front;  // 2 / ((1-a) eps^a)
  LimitCoeffs lim;

  OscTermCtx(double a_, double eps_, const LimitCoeffs& lim_)
      : a(a_), eps(eps_), front(2.0 / ((1.0 - a_) * std::pow(eps_, a_))), lim(lim_) {}
};

inline double sinc_pi(double z, double z_mod2) {
  double pz = M_PI * z;
  if (std::abs(z) < 1e-4) {  // series branch at the removable singularity
    double t = pz * pz;
    return 1.0 - t / 6.0 + t * t / 120.0;
  }
  return std::sin(M_PI * z_mod2) / pz;
}

inline double oscillating_term(const OscTermView& v, const OscTermCtx& c) {
  if (!(v.X > 0.0)) return 0.0;
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double xe = v.X * c.eps;
  double sxe = std::sin(kTwoPi * xe);
  double cxe = std::cos(kTwoPi * xe);
  double inv_x1a = (c.a == 0.5) ? 1.0 / std::sqrt(v.X) : std::pow(v.X, c.a - 1.0);
  double coef_cos = 2.0 * c.lim.b * inv_x1a + c.front * sxe / (kTwoPi * v.X);
  double coef_sin = 2.0 * c.lim.d * inv_x1a - c.front * (cxe - 1.0) / (kTwoPi * v.X);
  double cp = std::cos(M_PI * v.phase_mod2);
  double sp = std::sin(M_PI * v.phase_mod2);
  return (coef_cos * cp + coef_sin * sp) * sinc_pi(v.Z, v.z_mod2);
}

}  // namespace rotsum
