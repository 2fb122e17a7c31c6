#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rotsum {

// The triple (a, N, eps) plus every derived exponent the truncations and
// resonant bands depend on.  Constructed once, read everywhere.
struct Params {
  double a;          // singularity exponent, in (0,1)
  std::int64_t N;    // time horizon, >= 1
  double eps;        // truncation parameter, in (0,1)

  // derived
  double n_pow_a;              // N^a
  double cut;                  // eps/N, cap boundary of phi_trunc
  double cap;                  // (1/(1-a)) (N^a/eps^a - 1)
  double upper_k;              // N / eps^(1+2a), exclusive bound of all bands
  std::int64_t k_upper;        // largest k with k < upper_k
  double small_cutoff;         // eps^(1+2/a+2a) * N
  std::int64_t k_small_max;    // largest k with k <= small_cutoff
  double threshold;            // 1 / (eps^(1+a+2a^2) N^a), resonance bound
  double radius;               // R(eps) = eps^(-1-2a) + eps^(-a^2-a-2/a)

  Params(double a_, std::int64_t N_, double eps_) : a(a_), N(N_), eps(eps_) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("Params: a must be in (0,1)");
    if (N < 1) throw std::invalid_argument("Params: N must be >= 1");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("Params: eps must be in (0,1)");

    double dN = static_cast<double>(N);
    n_pow_a = std::pow(dN, a);
    cut = eps / dN;
    cap = (n_pow_a / std::pow(eps, a) - 1.0) / (1.0 - a);
    upper_k = dN * std::pow(eps, -(1.0 + 2.0 * a));
    k_upper = static_cast<std::int64_t>(std::floor(upper_k));
    if (static_cast<double>(k_upper) >= upper_k) k_upper -= 1;  // strict k < upper_k
    small_cutoff = std::pow(eps, 1.0 + 2.0 / a + 2.0 * a) * dN;
    k_small_max = small_cutoff >= 1.0
                      ? static_cast<std::int64_t>(std::floor(small_cutoff))
                      : 0;
    threshold = std::pow(eps, -(1.0 + a + 2.0 * a * a)) / n_pow_a;
    radius = std::pow(eps, -1.0 - 2.0 * a) + std::pow(eps, -(a * a + a + 2.0 / a));

    if (!std::isfinite(upper_k) || !std::isfinite(threshold) || !std::isfinite(radius))
      throw std::invalid_argument("Params: derived exponents overflow");
  }

  // first admissible k of the hat band: strictly above small_cutoff
  std::int64_t k_hat_min() const { return k_small_max + 1; }
};

}  // namespace rotsum
