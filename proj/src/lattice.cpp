#include "rotsum/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rotsum/rotation.hpp"

namespace rotsum {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double norm2(Vec2 v) { return v.x * v.x + v.z * v.z; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }

bool lex_greater(const std::array<std::int64_t, 2>& a,
                 const std::array<std::int64_t, 2>& b) {
  return a[0] != b[0] ? a[0] > b[0] : a[1] > b[1];
}

}  // namespace

Lattice2 lattice_of(std::int64_t N, double alpha) {
  double dN = static_cast<double>(N);
  Lattice2 L;
  L.b11 = 1.0 / dN;
  L.b21 = dN * alpha;
  L.b12 = 0.0;
  L.b22 = dN;
  return L;
}

ReducedFrame reduce(const Lattice2& L) {
  if (std::abs(L.det() - 1.0) > 1e-9)
    throw std::invalid_argument("reduce: non-unimodular generator");

  std::array<std::int64_t, 2> u1{1, 0}, u2{0, 1};
  Vec2 v1 = L.map(1, 0), v2 = L.map(0, 1);
  if (norm2(v2) < norm2(v1)) {
    std::swap(u1, u2);
    std::swap(v1, v2);
  }
  for (int it = 0; it < 128; ++it) {
    double mu = std::nearbyint(dot(v1, v2) / norm2(v1));
    if (mu != 0.0) {
      auto imu = static_cast<std::int64_t>(mu);
      u2[0] -= imu * u1[0];
      u2[1] -= imu * u1[1];
      v2 = L.map(u2[0], u2[1]);  // recompute, no float drift on the basis
    }
    if (norm2(v2) >= norm2(v1)) break;
    std::swap(u1, u2);
    std::swap(v1, v2);
  }

  // sign rule: first coordinate positive, or zero with positive second
  auto normalize = [](Vec2& v, std::array<std::int64_t, 2>& u) {
    if (v.x < 0.0 || (v.x == 0.0 && v.z < 0.0)) {
      v.x = -v.x;
      v.z = -v.z;
      u[0] = -u[0];
      u[1] = -u[1];
    }
  };
  normalize(v1, u1);
  normalize(v2, u2);

  // equal lengths: deterministic tie broken toward the lexicographically
  // greater integer pair (reduce(Z^2) keeps e1 = (1,0))
  if (norm2(v1) == norm2(v2) && lex_greater(u2, u1)) {
    std::swap(u1, u2);
    std::swap(v1, v2);
  }

  ReducedFrame F;
  F.e1 = v1;
  F.e2 = v2;
  F.u1 = u1;
  F.u2 = u2;
  F.source = L;
  std::int64_t du = u1[0] * u2[1] - u1[1] * u2[0];
  if (du != 1 && du != -1) throw std::logic_error("reduce: lost unimodularity");
  return F;
}

PointCoords coords(const ReducedFrame& F, std::array<std::int64_t, 2> m) {
  double d1 = static_cast<double>(m[0]), d2 = static_cast<double>(m[1]);
  return {d1 * F.e1.x + d2 * F.e2.x, d1 * F.e1.z + d2 * F.e2.z, m};
}

Lattice2 sample_haar(RngStream& rng) {
  double theta = rng.uniform(-kPi / 6.0, kPi / 6.0);
  double u = rng.uniform();
  double psi = rng.uniform(0.0, 2.0 * kPi);
  double x = std::sin(theta);
  double y = std::cos(theta) / (1.0 - u);
  double sy = std::sqrt(y);
  // basis ((1/sqrt y, 0), (x/sqrt y, sqrt y)) rotated by psi
  double c = std::cos(psi), s = std::sin(psi);
  Lattice2 L;
  L.b11 = c / sy;
  L.b21 = s / sy;
  L.b12 = c * x / sy - s * sy;
  L.b22 = s * x / sy + c * sy;
  return L;
}

Lattice2 sample_geodesic_pushforward(RngStream& rng, std::int64_t N) {
  return lattice_of(N, rng.uniform());
}

GammaPoint gamma_of(const ReducedFrame& F, double x, std::int64_t N) {
  GammaDd g = gamma_dd_of(F, x, N);
  return {g.g1.collapsed(), g.g2.collapsed()};
}

GammaDd gamma_dd_of(const ReducedFrame& F, double x, std::int64_t N) {
  (void)N;  // kappa_i = N e_{i1} is exactly the integer u_i[0]
  Dd g1 = dd_frac_mult(F.u1[0], x).frac;
  Dd g2 = dd_frac_mult(F.u2[0], x).frac;
  return {g1, g2};
}

Correspondence correspondence(double alpha, const Params& p) {
  Correspondence out;
  ResonantSet shat = resonant_set(alpha, p, Band::hat);
  ReducedFrame F = reduce(lattice_of(p.N, alpha));
  // inverse of the integer column matrix [u1 u2], determinant +-1
  std::int64_t du = F.u1[0] * F.u2[1] - F.u1[1] * F.u2[0];
  double r2 = p.radius * p.radius;
  out.entries.reserve(shat.indices.size());
  for (std::int64_t k : shat.indices) {
    SignedFrac sf = signed_frac(k, alpha);
    std::int64_t kp = sf.integer_part;
    std::int64_t m1 = (F.u2[1] * k - F.u2[0] * kp) / du;
    std::int64_t m2 = (-F.u1[1] * k + F.u1[0] * kp) / du;
    // round-trip must be exact in integers
    if (m1 * F.u1[0] + m2 * F.u2[0] != k || m1 * F.u1[1] + m2 * F.u2[1] != kp)
      throw std::logic_error("correspondence: integer round-trip failed");
    CorrespondenceEntry e;
    e.k = k;
    e.kprime = kp;
    e.m = {m1, m2};
    e.pt = coords(F, e.m);
    e.within_radius = e.pt.X * e.pt.X + e.pt.Z * e.pt.Z <= r2;
    if (!e.within_radius) out.radius_violations += 1;
    out.entries.push_back(e);
  }
  return out;
}

namespace {

// Lattice points inside the axis-aligned box [x0,x1] x [-zcap,zcap]:
// rescale to make the box a unit square, Gauss-reduce the scaled basis, and
// walk the two reduced directions.  Output-sensitive up to constant overshoot.
void scan_rect(const ReducedFrame& F, double x0, double x1, double zcap,
               const RegionSpec& spec, std::vector<PointCoords>& out) {
  if (!(x1 > x0) || !(zcap > 0.0)) return;
  double wx = 0.5 * (x1 - x0), wz = zcap;
  double cx = 0.5 * (x0 + x1) / wx;  // scaled box center (cx, 0), half-width 1

  Vec2 s1{F.e1.x / wx, F.e1.z / wz}, s2{F.e2.x / wx, F.e2.z / wz};
  std::int64_t M11 = 1, M21 = 0, M12 = 0, M22 = 1;  // columns: n -> m = M n
  if (norm2(s2) < norm2(s1)) {
    std::swap(s1, s2);
    std::swap(M11, M12);
    std::swap(M21, M22);
  }
  for (int it = 0; it < 128; ++it) {
    double mu = std::nearbyint(dot(s1, s2) / norm2(s1));
    if (mu != 0.0) {
      auto imu = static_cast<std::int64_t>(mu);
      s2.x -= mu * s1.x;
      s2.z -= mu * s1.z;
      M12 -= imu * M11;
      M22 -= imu * M21;
    }
    if (norm2(s2) >= norm2(s1)) break;
    std::swap(s1, s2);
    std::swap(M11, M12);
    std::swap(M21, M22);
  }

  // canonical signs: any (+-e_i) representation of the frame enumerates the
  // same points in the same order
  auto canon = [](Vec2& v, std::int64_t& ma, std::int64_t& mb) {
    if (v.x < 0.0 || (v.x == 0.0 && v.z < 0.0)) {
      v.x = -v.x;
      v.z = -v.z;
      ma = -ma;
      mb = -mb;
    }
  };
  canon(s1, M11, M21);
  canon(s2, M12, M22);

  double dets = s1.x * s2.z - s1.z * s2.x;
  double n1len = std::sqrt(norm2(s1));
  if (n1len == 0.0 || dets == 0.0) return;
  // normal to s1, scaled so p . nrm = n2 * (dets/|s1|)
  double h = dets / n1len;
  double nrm_x = -s1.z / n1len;
  double cn = cx * nrm_x;  // box center projected on the normal
  constexpr double kRad = 1.4142135623730951;  // box circumradius
  double lo = (cn - kRad) / h, hi = (cn + kRad) / h;
  if (lo > hi) std::swap(lo, hi);
  if (!(hi - lo < 1e7))
    throw std::logic_error("enumerate_region: runaway scan range");
  auto n2_lo = static_cast<std::int64_t>(std::floor(lo)) - 1;
  auto n2_hi = static_cast<std::int64_t>(std::ceil(hi)) + 1;

  for (std::int64_t n2 = n2_lo; n2 <= n2_hi; ++n2) {
    double bx = n2 * s2.x - cx, bz = n2 * s2.z;
    // |bx + n1 s1.x| <= 1 and |bz + n1 s1.z| <= 1
    double lo1 = -1e30, hi1 = 1e30;
    auto clip = [&](double base, double slope) {
      if (std::abs(slope) < 1e-300) {
        if (std::abs(base) > 1.0 + 1e-9) lo1 = 1.0, hi1 = -1.0;  // empty
        return;
      }
      double t0 = (-1.0 - base) / slope, t1 = (1.0 - base) / slope;
      if (t0 > t1) std::swap(t0, t1);
      lo1 = std::max(lo1, t0);
      hi1 = std::min(hi1, t1);
    };
    clip(bx, s1.x);
    clip(bz, s1.z);
    if (lo1 > hi1) continue;
    if (!(hi1 - lo1 < 1e7))
      throw std::logic_error("enumerate_region: runaway inner range");
    auto a1 = static_cast<std::int64_t>(std::floor(lo1)) - 1;
    auto b1 = static_cast<std::int64_t>(std::ceil(hi1)) + 1;
    for (std::int64_t n1 = a1; n1 <= b1; ++n1) {
      std::int64_t m1 = M11 * n1 + M12 * n2;
      std::int64_t m2 = M21 * n1 + M22 * n2;
      if (m1 == 0 && m2 == 0) continue;
      double d1 = static_cast<double>(m1), d2 = static_cast<double>(m2);
      double X = d1 * F.e1.x + d2 * F.e2.x;
      if (!(X > 0.0) || X >= spec.x_max) continue;
      if (X <= x0 || X > x1) continue;  // slabs own (x0, x1], no duplicates
      double Z = d1 * F.e1.z + d2 * F.e2.z;
      if (X * X + Z * Z > spec.radius * spec.radius) continue;
      double xpow = (spec.a == 0.5) ? std::sqrt(X) : std::pow(X, 1.0 - spec.a);
      if (xpow * std::abs(Z) > spec.t_bound) continue;
      out.push_back({X, Z, {m1, m2}});
    }
  }
}

}  // namespace

std::vector<PointCoords> enumerate_region(const ReducedFrame& F,
                                          const RegionSpec& spec) {
  std::vector<PointCoords> out;
  double r = spec.radius;
  double x_top = std::min(spec.x_max, r);
  if (!(x_top > 0.0) || !(spec.t_bound > 0.0)) return out;

  // below x_star the hyperbola leaves the disk, so the z-cap is just r
  double x_star = std::pow(spec.t_bound / r, 1.0 / (1.0 - spec.a));
  x_star = std::min(x_star, x_top);

  double hi = x_top;
  while (hi > x_star) {
    double lo = std::max(0.5 * hi, x_star);
    double zcap = std::min(r, spec.t_bound * std::pow(lo, spec.a - 1.0));
    scan_rect(F, lo, hi, zcap, spec, out);
    hi = lo;
  }
  if (x_star > 0.0) scan_rect(F, 0.0, x_star, r, spec, out);
  return out;
}

}  // namespace rotsum
