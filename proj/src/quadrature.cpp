#include "rotsum/quadrature.hpp"

#include <cmath>
#include <complex>

namespace rotsum {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

const GaussLegendre16& gl16() {
  static const GaussLegendre16 rule = [] {
    GaussLegendre16 r{};
    const int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      // Newton iteration on P_16, seeded with the Chebyshev estimate.
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
          double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double w = 2.0 / ((1.0 - x * x) * pp * pp);
      r.node[i] = -x;
      r.node[n - 1 - i] = x;
      r.weight[i] = w;
      r.weight[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

OscPair osc_tail_asymptotic(double x, double frac_x, double a) {
  using cplx = std::complex<double>;
  const cplx inv_2pii(0.0, -1.0 / kTwoPi);  // 1/(2 pi i)
  cplx phase = std::polar(1.0, kTwoPi * frac_x);

  // E(X) = -e^(2 pi i X)/(2 pi i) * sum_j (a)_j / (2 pi i)^j * X^(-a-j);
  // stopping after J >= 1 terms leaves at most
  // (a)_J / (2 pi)^J * X^(1-a-J) / (a+J-1).
  cplx sum(0.0, 0.0);
  double rising = 1.0;   // (a)_j
  double xp = std::pow(x, -a);
  cplx scale(1.0, 0.0);  // (1/(2 pi i))^j
  double bound = 1.0;
  for (int j = 0; j < 24; ++j) {
    if (j >= 1) {
      bound = rising / std::pow(kTwoPi, j) * std::pow(x, 1.0 - a - j) / (a + j - 1.0);
      if (bound < 1e-17) break;
    }
    sum += scale * (rising * xp);
    rising *= a + j;
    xp /= x;
    scale *= inv_2pii;
  }
  cplx e = -phase * inv_2pii * sum;
  return {e.real(), e.imag(), bound};
}

OscTailEvaluator::OscTailEvaluator(double a) : a_(a) {
  // joint_tail_[j-1] holds the tail at j/4; built backwards from x = 6.
  OscPair tail = osc_tail_asymptotic(kAsymEdge, 0.0, a_);
  joint_tail_[23] = tail;
  for (int j = 23; j >= 1; --j) {
    OscPair seg = panel(j * 0.25, (j + 1) * 0.25);
    tail = {tail.cos_part + seg.cos_part, tail.sin_part + seg.sin_part,
            tail.err + seg.err};
    joint_tail_[j - 1] = tail;
  }
}

OscPair OscTailEvaluator::panel(double x0, double x1) const {
  double c = gl_integrate([&](double x) { return std::cos(kTwoPi * x) * std::pow(x, -a_); }, x0, x1);
  double s = gl_integrate([&](double x) { return std::sin(kTwoPi * x) * std::pow(x, -a_); }, x0, x1);
  // GL-16 on at most a quarter period; conservative absolute figure.
  return {c, s, 1e-15 * (std::abs(c) + std::abs(s) + 1.0)};
}

namespace {

// integral_0^c trig(2 pi x) x^(-a) dx by termwise integration of the trig
// series; for c <= 1/4 the terms fall off superexponentially.
OscPair head_series(double c, double a) {
  if (c <= 0.0) return {};
  double ccos = 0.0, csin = 0.0;
  double w = kTwoPi * c;
  double pow_c = std::pow(c, 1.0 - a);  // c^(1-a), then grows by c each order
  double term_cos = pow_c, term_sin = pow_c * w;
  // term_cos tracks (2 pi)^(2j) c^(2j+1-a) / (2j)!, sin the odd twin
  double fc = 1.0, fs = 1.0;  // running factorials (2j)!, (2j+1)!
  double sign = 1.0;
  for (int j = 0; j < 40; ++j) {
    double tc = sign * term_cos / (fc * (2 * j + 1 - a));
    double ts = sign * term_sin / (fs * (2 * j + 2 - a));
    ccos += tc;
    csin += ts;
    if (std::abs(tc) + std::abs(ts) < 1e-18) break;
    term_cos *= w * w;
    term_sin *= w * w;
    fc *= (2 * j + 1) * (2 * j + 2);
    fs *= (2 * j + 2) * (2 * j + 3);
    sign = -sign;
  }
  return {ccos, csin, 1e-16 * (std::abs(ccos) + std::abs(csin) + 1.0)};
}

}  // namespace

OscPair OscTailEvaluator::head_singular(double x0, double x1) const {
  OscPair hi = head_series(x1, a_);
  OscPair lo = head_series(x0, a_);
  return {hi.cos_part - lo.cos_part, hi.sin_part - lo.sin_part, hi.err + lo.err};
}

OscPair OscTailEvaluator::eval(double x) const {
  if (x >= kAsymEdge) return osc_tail_asymptotic(x, x - std::floor(x), a_);
  if (x >= 0.25) {
    int j = static_cast<int>(std::ceil(x * 4.0 - 1e-12));
    if (j < 1) j = 1;
    if (j > 24) j = 24;
    double joint = j * 0.25;
    OscPair rest = joint_tail_[j - 1];
    if (joint > x) {
      OscPair seg = panel(x, joint);
      rest = {seg.cos_part + rest.cos_part, seg.sin_part + rest.sin_part,
              seg.err + rest.err};
    }
    return rest;
  }
  OscPair head = head_singular(x, 0.25);
  const OscPair& rest = joint_tail_[0];
  return {head.cos_part + rest.cos_part, head.sin_part + rest.sin_part,
          head.err + rest.err};
}

}  // namespace rotsum
