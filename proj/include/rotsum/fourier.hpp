#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rotsum/params.hpp"
#include "rotsum/quadrature.hpp"
#include "rotsum/rotation.hpp"

namespace rotsum {

// b_{N,eps}(k) = integral_{k eps/N}^{k} cos(2 pi x) x^(-a) dx, d the sine twin.
struct OscCoeffs {
  double b = 0.0;
  double d = 0.0;
  std::int64_t k = 0;
  double quadrature_error = 0.0;
};

// b = integral_0^inf cos(2 pi x) x^(-a) dx, d the sine twin.
struct LimitCoeffs {
  double b = 0.0;
  double d = 0.0;
};

// Quadrature route (half-period panels + asymptotic tail); throws if it
// disagrees with the closed form by more than 1e-8.
LimitCoeffs limit_coeffs(double a);

// (2 pi)^(a-1) Gamma(1-a) {sin, cos}(pi a / 2)
LimitCoeffs limit_coeffs_closed_form(double a);

OscCoeffs osc_coeffs(std::int64_t k, const Params& p);

enum class GVariant { exact, tilde };
enum class Model { bar, tilde, hat, diamond };

// Rational-alpha resonance: sin(pi k alpha) or {k alpha} vanished where a
// division was required.
struct resonant_denominator : std::domain_error {
  std::int64_t k;
  explicit resonant_denominator(std::int64_t k_)
      : std::domain_error("fourier: vanishing denominator at k=" + std::to_string(k_)), k(k_) {}
};

// One pass over k for a fixed (alpha, x): the direct Birkhoff value and all
// four model sums, plus the exclusion flag picked up along the way.
struct ModelValues {
  double direct = 0.0;
  double bar = 0.0;
  double tilde = 0.0;
  double hat = 0.0;
  double diamond = 0.0;
  bool in_exclusion = false;
  std::int64_t resonant_full = 0;
  std::int64_t resonant_hat = 0;
};

struct ReconstructionReport {
  double direct = 0.0;
  double series = 0.0;
  double residual = 0.0;
  double tail_bound = 0.0;      // analytic bound on the dropped tail at k_used
  std::int64_t k_used = 0;
  std::int64_t k_required = 0;  // k needed to push the bound below tol
};

// Per-Params evaluation context: coefficient table, limit constants, and the
// dense k-scan machinery behind the model sums.
class FourierModels {
 public:
  explicit FourierModels(const Params& p,
                         std::int64_t table_max = std::int64_t{1} << 22);

  const Params& params() const { return p_; }
  const LimitCoeffs& limits() const { return lim_; }

  // g_k at one frequency.  exact: Dirichlet kernel sin(pi N k alpha)/sin(pi k
  // alpha); tilde: the resonant approximation with kernel sin(pi N {k
  // alpha})/(pi {k alpha}) and the limit coefficients (the form that matches
  // the lattice term h_m identically).
  double term_g(std::int64_t k, double alpha, double x, GVariant variant) const;

  // Sum of g_k over the model's index set: bar over 0 < k < N/eps^(1+2a),
  // tilde over S, hat over S-hat, diamond over S-hat with the tilde variant.
  // index_override replaces the index set (used for the box/diamond check).
  double model_sum(double alpha, double x, Model model,
                   const ResonantSet* index_override = nullptr) const;

  ModelValues evaluate(double alpha, double x) const;

  // Direct Birkhoff value vs the partial series sum_{k<=K} g_k, with K chosen
  // so the analytic bound on the dropped tail is below tol (capped at k_max).
  ReconstructionReport reconstruct(double alpha, double x, double tol,
                                   std::int64_t k_max) const;

  // The constant B with |tail beyond K| <= B / K for this (alpha, x): the
  // partial Fourier sum of a jump of height J, seen from distance d, deviates
  // by ~J/(2 pi^2 K d); B sums this over both jumps and the whole orbit.
  double tail_constant(double alpha, double x) const;

  OscCoeffs coeffs(std::int64_t k) const;

 private:
  struct ScanResult;
  ScanResult scan(double alpha, double x, std::int64_t k_stop, bool want_models) const;

  Params p_;
  OscTailEvaluator tail_;
  LimitCoeffs lim_;
  std::int64_t table_len_ = 0;      // coefficients cached for k <= table_len_
  std::vector<double> tb_, td_;     // b_k, d_k, 1-based
};

// sup over k = 1..k_max of the four Lemma-type envelope ratios; all four are
// bounded by a constant depending only on a.
struct EnvelopeSup {
  double b_ratio = 0.0;    // |b_k| * max(1, u^a),  u = k eps / N
  double d_ratio = 0.0;
  double sin_ratio = 0.0;  // |sin(2 pi u)| * max(1, u^-a)
  double cos_ratio = 0.0;  // |cos(2 pi u) - 1| * max(1, u^-a)
};
EnvelopeSup lemma1_envelope_sup(const Params& p, std::int64_t k_max);

}  // namespace rotsum
