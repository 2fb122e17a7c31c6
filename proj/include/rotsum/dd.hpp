#pragma once

#include <cmath>
#include <cstdint>

namespace rotsum {

// Double-double arithmetic, just enough to reduce k*x mod 1 without losing
// the low bits of the product.  Angles fed to trig functions come out of
// these reductions, so phases stay accurate up to k ~ 1e9 and N ~ 1e7.
struct Dd {
  double hi = 0.0;
  double lo = 0.0;
  double collapsed() const { return hi + lo; }
};

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| (or a == 0)
inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, double b) {
  Dd s = two_sum(a.hi, b);
  return quick_two_sum(s.hi, s.lo + a.lo);
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

// n must be exactly representable as a double (|n| < 2^53).
inline Dd dd_mul_int(Dd a, std::int64_t n) {
  double dn = static_cast<double>(n);
  Dd p = two_prod(a.hi, dn);
  return quick_two_sum(p.hi, p.lo + a.lo * dn);
}

struct DdFrac {
  Dd frac;               // in [0,1)
  std::int64_t ipart;    // integer removed: input = ipart + frac
};

// Fractional part of a double-double, exact for |hi| < 2^52.
inline DdFrac dd_frac(Dd a) {
  double f = std::floor(a.hi);
  Dd r = quick_two_sum(a.hi - f, a.lo);
  auto ip = static_cast<std::int64_t>(f);
  if (r.hi >= 1.0) {
    r = dd_add(r, -1.0);
    ip += 1;
  } else if (r.hi < 0.0) {
    r = dd_add(r, 1.0);
    ip -= 1;
  }
  return {r, ip};
}

// frac(k*x) in [0,1) with the full product precision.
inline DdFrac dd_frac_mult(std::int64_t k, double x) {
  return dd_frac(two_prod(static_cast<double>(k), x));
}

struct DdSignedFrac {
  Dd value;            // in (-1/2, 1/2]
  std::int64_t kprime; // k*x + kprime = value
};

// Signed fractional part of k*x: the representative in (-1/2, 1/2].
// Boundary rule: exactly +1/2 is kept, -1/2 never occurs.
inline DdSignedFrac dd_signed_frac_mult(std::int64_t k, double x) {
  DdFrac fr = dd_frac_mult(k, x);
  Dd v = fr.frac;
  std::int64_t ip = fr.ipart;
  if (v.hi > 0.5 || (v.hi == 0.5 && v.lo > 0.0)) {
    v = dd_add(v, -1.0);
    ip += 1;
  }
  return {v, -ip};
}

// Reduce a double-double into [-1, 1) modulo 2 and collapse to double.
// Used for angles expressed in units of pi.
inline double dd_mod2(Dd a) {
  double f = std::floor(a.hi * 0.5) * 2.0;
  Dd r = quick_two_sum(a.hi - f, a.lo);
  double v = r.collapsed();
  if (v >= 1.0) v -= 2.0;
  if (v < -1.0) v += 2.0;
  return v;
}

// Plain fractional part into [0,1) with a guard for the x == 1.0 edge.
inline double frac_unit(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r += 1.0;
  return r;
}

}  // namespace rotsum
