#pragma once

#include <array>
#include <cstdint>

#include "rotsum/fourier.hpp"
#include "rotsum/lattice.hpp"
#include "rotsum/osc_term.hpp"
#include "rotsum/stats.hpp"

namespace rotsum {

enum class Execution { serial, parallel };

// Parameters of the limit functional D_eps (no time horizon).
struct LimitTermParams {
  double a;
  double eps;
  LimitCoeffs lim;
  double radius;  // R(eps) = eps^(-1-2a) + eps^(-a^2-a-2/a)

  LimitTermParams(double a_, double eps_);
  LimitTermParams(double a_, double eps_, const LimitCoeffs& lim_);

  // summation region: the resonance band intersected with the R(eps) disk
  RegionSpec region() const;
  OscTermCtx ctx() const { return OscTermCtx(a, eps, lim); }
};

// q(L, gamma, m, eps) for m != 0: zero when X_m <= 0, otherwise the
// oscillating term at (X_m, Z_m) with phase 2 pi m.gamma + phi Z_m, where
// phi = pi for the limit kernel and pi (N-1)/N for the finite variant h_m.
double q_term(const ReducedFrame& F, const GammaPoint& gamma,
              std::array<std::int64_t, 2> m, const LimitTermParams& tp,
              std::int64_t finite_N = 0);

// D_eps(L, gamma): reduce, enumerate the region, sum q over it.
double d_eps(const Lattice2& L, const GammaPoint& gamma, const LimitTermParams& tp);
double d_eps_frame(const ReducedFrame& F, const GammaPoint& gamma,
                   const LimitTermParams& tp);

// Finite-N oscillating sum over the lattice L(N, alpha): the same region,
// principal-branch vectors only, finite phase.  Equals the diamond-bar model
// sum over the returned index set exactly.
struct BoxDecomposition {
  double value = 0.0;
  ResonantSet indices;                 // U: the k's summed, ascending
  std::int64_t branch_skipped = 0;     // region vectors on non-principal branches
};
BoxDecomposition box_decomposition(double alpha, double x, const Params& p,
                                   const LimitTermParams& tp);
double box_sum(double alpha, double x, const Params& p, const LimitTermParams& tp);

// n independent (Haar L, uniform gamma) draws through d_eps.  Draw i comes
// from the counter stream (seed, "limit-law", i), so runs are reproducible
// and coupled across eps.
ECDF sample_law(const LimitTermParams& tp, std::int64_t n, std::uint64_t seed,
                Execution exec = Execution::parallel);

std::vector<double> sample_limit_values(const LimitTermParams& tp, std::int64_t n,
                                        std::uint64_t seed,
                                        Execution exec = Execution::parallel);

// Coupled fraction of draws with |D_eps - D_eps'| > delta, with Wilson CI.
McEstimate cauchy_gap(const LimitTermParams& tp, const LimitTermParams& tp2,
                      double delta, std::int64_t n, std::uint64_t seed,
                      Execution exec = Execution::parallel);

}  // namespace rotsum
