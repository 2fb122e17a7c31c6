#include "rotsum/limit_dist.hpp"

#include <algorithm>
#include <cmath>

#include "rotsum/mc.hpp"
#include "rotsum/rotation.hpp"
#include "rotsum/summation.hpp"

namespace rotsum {

namespace {

double radius_of(double a, double eps) {
  return std::pow(eps, -1.0 - 2.0 * a) + std::pow(eps, -(a * a + a + 2.0 / a));
}

inline double mod2_double(double z) {
  double f = std::floor(z * 0.5) * 2.0;
  double r = z - f;
  if (r >= 1.0) r -= 2.0;
  return r;
}

}  // namespace

LimitTermParams::LimitTermParams(double a_, double eps_)
    : a(a_), eps(eps_), lim(limit_coeffs(a_)), radius(radius_of(a_, eps_)) {}

LimitTermParams::LimitTermParams(double a_, double eps_, const LimitCoeffs& lim_)
    : a(a_), eps(eps_), lim(lim_), radius(radius_of(a_, eps_)) {}

RegionSpec LimitTermParams::region() const {
  return {std::pow(eps, -(1.0 + 2.0 * a)),
          std::pow(eps, -(1.0 + a + 2.0 * a * a)), radius, a};
}

double q_term(const ReducedFrame& F, const GammaPoint& gamma,
              std::array<std::int64_t, 2> m, const LimitTermParams& tp,
              std::int64_t finite_N) {
  PointCoords pt = coords(F, m);
  if (!(pt.X > 0.0)) return 0.0;
  Dd mg = dd_add(two_prod(static_cast<double>(m[0]), gamma.g1),
                 two_prod(static_cast<double>(m[1]), gamma.g2));
  Dd s = dd_frac(mg).frac;
  double phi_z = finite_N > 0
                     ? pt.Z - pt.Z / static_cast<double>(finite_N)
                     : pt.Z;
  OscTermView v;
  v.X = pt.X;
  v.Z = pt.Z;
  v.z_mod2 = mod2_double(pt.Z);
  v.phase_mod2 = dd_mod2(dd_add(dd_mul_int(s, 2), Dd{phi_z, 0.0}));
  return oscillating_term(v, tp.ctx());
}

double d_eps_frame(const ReducedFrame& F, const GammaPoint& gamma,
                   const LimitTermParams& tp) {
  std::vector<PointCoords> pts = enumerate_region(F, tp.region());
  OscTermCtx ctx = tp.ctx();
  Kahan sum;
  for (const PointCoords& pt : pts) {
    Dd mg = dd_add(two_prod(static_cast<double>(pt.m[0]), gamma.g1),
                   two_prod(static_cast<double>(pt.m[1]), gamma.g2));
    Dd s = dd_frac(mg).frac;
    OscTermView v;
    v.X = pt.X;
    v.Z = pt.Z;
    v.z_mod2 = mod2_double(pt.Z);
    v.phase_mod2 = dd_mod2(dd_add(dd_mul_int(s, 2), Dd{pt.Z, 0.0}));
    sum.add(oscillating_term(v, ctx));
  }
  return sum.value();
}

double d_eps(const Lattice2& L, const GammaPoint& gamma, const LimitTermParams& tp) {
  return d_eps_frame(reduce(L), gamma, tp);
}

BoxDecomposition box_decomposition(double alpha, double x, const Params& p,
                                   const LimitTermParams& tp) {
  ReducedFrame F = reduce(lattice_of(p.N, alpha));
  GammaDd g = gamma_dd_of(F, x, p.N);
  std::vector<PointCoords> pts = enumerate_region(F, tp.region());
  OscTermCtx ctx = tp.ctx();

  struct Entry {
    std::int64_t k;
    double term;
  };
  std::vector<Entry> entries;
  entries.reserve(pts.size());
  BoxDecomposition out;

  for (const PointCoords& pt : pts) {
    std::int64_t k = pt.m[0] * F.u1[0] + pt.m[1] * F.u2[0];
    std::int64_t kp = pt.m[0] * F.u1[1] + pt.m[1] * F.u2[1];
    if (k < 1) continue;  // X > 0 makes k >= 1; guard stays for safety
    DdSignedFrac sf = dd_signed_frac_mult(k, alpha);
    if (sf.kprime != kp) {
      // same k, non-principal integer lift: outside the model's index set,
      // and gone for N large enough that the band clears N/2
      out.branch_skipped += 1;
      continue;
    }
    Dd zdd = dd_mul_int(sf.value, p.N);
    Dd mg = dd_add(dd_mul_int(g.g1, pt.m[0]), dd_mul_int(g.g2, pt.m[1]));
    Dd s = dd_frac(mg).frac;
    OscTermView v;
    v.X = static_cast<double>(k) / static_cast<double>(p.N);
    v.Z = zdd.collapsed();
    v.z_mod2 = dd_mod2(zdd);
    v.phase_mod2 = dd_mod2(dd_add(dd_mul_int(s, 2), dd_mul_int(sf.value, p.N - 1)));
    entries.push_back({k, oscillating_term(v, ctx)});
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.k < b.k; });
  Kahan sum;
  out.indices.band = Band::hat;
  out.indices.indices.reserve(entries.size());
  for (const Entry& e : entries) {
    sum.add(e.term);
    out.indices.indices.push_back(e.k);
  }
  out.value = sum.value();
  return out;
}

double box_sum(double alpha, double x, const Params& p, const LimitTermParams& tp) {
  return box_decomposition(alpha, x, p, tp).value;
}

std::vector<double> sample_limit_values(const LimitTermParams& tp, std::int64_t n,
                                        std::uint64_t seed, Execution exec) {
  std::vector<double> out(static_cast<std::size_t>(n));
  constexpr std::uint64_t tag = stream_tag("limit-law");
  for_each_index(n, exec, [&](std::int64_t i) {
    RngStream rng(seed, tag, static_cast<std::uint64_t>(i));
    Lattice2 L = sample_haar(rng);
    GammaPoint gamma{rng.uniform(), rng.uniform()};
    out[static_cast<std::size_t>(i)] = d_eps(L, gamma, tp);
  });
  return out;
}

ECDF sample_law(const LimitTermParams& tp, std::int64_t n, std::uint64_t seed,
                Execution exec) {
  return ECDF(sample_limit_values(tp, n, seed, exec));
}

McEstimate cauchy_gap(const LimitTermParams& tp, const LimitTermParams& tp2,
                      double delta, std::int64_t n, std::uint64_t seed,
                      Execution exec) {
  std::vector<unsigned char> over(static_cast<std::size_t>(n), 0);
  constexpr std::uint64_t tag = stream_tag("limit-law");
  for_each_index(n, exec, [&](std::int64_t i) {
    RngStream rng(seed, tag, static_cast<std::uint64_t>(i));
    Lattice2 L = sample_haar(rng);
    GammaPoint gamma{rng.uniform(), rng.uniform()};
    ReducedFrame F = reduce(L);  // one reduction, both eps
    double v1 = d_eps_frame(F, gamma, tp);
    double v2 = d_eps_frame(F, gamma, tp2);
    over[static_cast<std::size_t>(i)] = std::abs(v1 - v2) > delta ? 1 : 0;
  });
  std::int64_t hits = 0;
  for (unsigned char c : over) hits += c;
  return wilson(hits, n, seed);
}

}  // namespace rotsum
