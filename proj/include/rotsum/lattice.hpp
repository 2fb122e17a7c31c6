#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rotsum/dd.hpp"
#include "rotsum/params.hpp"
#include "rotsum/rng.hpp"

namespace rotsum {

struct Vec2 {
  double x = 0.0;
  double z = 0.0;
};

// Unimodular planar lattice: columns of the generator matrix span it.
struct Lattice2 {
  double b11 = 1.0, b21 = 0.0;  // first column
  double b12 = 0.0, b22 = 1.0;  // second column
  double det() const { return b11 * b22 - b21 * b12; }
  Vec2 map(std::int64_t c1, std::int64_t c2) const {
    double d1 = static_cast<double>(c1), d2 = static_cast<double>(c2);
    return {b11 * d1 + b12 * d2, b21 * d1 + b22 * d2};
  }
};

// Gauss-reduced basis with exact integer coordinates in the generator basis:
// e1 the shortest vector, e2 the shortest with nonzero component off the e1
// line, signs normalized (first coordinate positive, ties by second).
struct ReducedFrame {
  Vec2 e1, e2;
  std::array<std::int64_t, 2> u1{}, u2{};  // e_i = B u_i, |det[u1 u2]| = 1
  Lattice2 source;
};

struct PointCoords {
  double X = 0.0;
  double Z = 0.0;
  std::array<std::int64_t, 2> m{};  // (X,Z) = m1 e1 + m2 e2
};

struct GammaPoint {
  double g1 = 0.0, g2 = 0.0;  // both in [0,1)
};

// L(N, alpha) = g_{ln N} Lambda_alpha Z^2: columns (1/N, N alpha), (0, N).
Lattice2 lattice_of(std::int64_t N, double alpha);

// Lagrange-Gauss reduction on integer coordinates; throws on non-unimodular
// input (|det - 1| > 1e-9).
ReducedFrame reduce(const Lattice2& L);

PointCoords coords(const ReducedFrame& F, std::array<std::int64_t, 2> m);

// Exact Haar draw: tau = x + iy from the hyperbolic measure on the modular
// fundamental domain (x arcsine-distributed via theta ~ U[-pi/6, pi/6],
// y = cos(theta)/(1-u) inverting the 1/y^2 conditional), unit-covolume basis
// ((1/sqrt y, 0), (x/sqrt y, sqrt y)), then a uniform rotation.
Lattice2 sample_haar(RngStream& rng);

// alpha uniform on [0,1), pushed through lattice_of(N, alpha).
Lattice2 sample_geodesic_pushforward(RngStream& rng, std::int64_t N);

// gamma = (N x e11, N x e21) mod 1, computed as (x kappa_i mod 1) from the
// integer first components kappa_i = u_i[0] (N e_{i1} = kappa_i exactly).
GammaPoint gamma_of(const ReducedFrame& F, double x, std::int64_t N);

// Same, keeping the double-double remainders; the box sums need them to push
// integer multiples of gamma through mod 1 without losing phase bits.
struct GammaDd {
  Dd g1, g2;
};
GammaDd gamma_dd_of(const ReducedFrame& F, double x, std::int64_t N);

// k in S-hat(N, alpha, eps) mapped to its reduced-frame coordinates by exact
// integer linear algebra.  The radius bound is reported, not enforced.
struct CorrespondenceEntry {
  std::int64_t k = 0;
  std::int64_t kprime = 0;
  std::array<std::int64_t, 2> m{};
  PointCoords pt;
  bool within_radius = true;
};
struct Correspondence {
  std::vector<CorrespondenceEntry> entries;
  std::int64_t radius_violations = 0;
};
Correspondence correspondence(double alpha, const Params& p);

// Lattice points (X, Z) = m1 e1 + m2 e2 with
//   0 < X < x_max,  X^(1-a) |Z| <= t_bound,  X^2 + Z^2 <= radius^2,
// enumerated by dyadic X-slabs; deterministic order for a fixed frame.
struct RegionSpec {
  double x_max = 0.0;
  double t_bound = 0.0;
  double radius = 0.0;
  double a = 0.5;
};
std::vector<PointCoords> enumerate_region(const ReducedFrame& F, const RegionSpec& spec);

}  // namespace rotsum
