#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rotsum/params.hpp"
#include "rotsum/rng.hpp"

namespace rotsum {

// Empirical CDF over a sorted sample; evaluation is right-continuous.
class ECDF {
 public:
  explicit ECDF(std::vector<double> samples);

  double operator()(double z) const;  // #{s <= z} / n
  double quantile(double q) const;    // q in [0,1]
  std::size_t size() const { return samples_.size(); }
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

// Two-sample Kolmogorov-Smirnov distance: sup over the merged jump points.
double ks(const ECDF& A, const ECDF& B);

// sup_z |F_n(z) - z| against the exact uniform CDF on [0,1].
double ks_uniform(const ECDF& A);

// 95% two-sample KS acceptance threshold.
inline double ks_critical(std::size_t n, std::size_t m) {
  return 1.358 * std::sqrt(static_cast<double>(n + m) /
                           (static_cast<double>(n) * static_cast<double>(m)));
}

// Monte Carlo estimate with a 95% Wilson interval; never a bare number.
struct McEstimate {
  double estimate = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};
McEstimate wilson(std::int64_t hits, std::int64_t n, std::uint64_t seed);

enum class ModelTag { direct, bar, tilde, hat, diamond };

struct insufficient_samples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monte Carlo integral of (A - B)^2 over uniform (alpha, x), optionally
// skipping the exclusion set E(N, eps).  Throws insufficient_samples when
// fewer than n/10 draws survive the exclusion.
struct L2Gap {
  double mean_square = 0.0;
  double std_error = 0.0;
  std::int64_t used = 0;
  double skipped_fraction = 0.0;
  std::uint64_t seed = 0;
};
L2Gap l2_gap(ModelTag model_a, ModelTag model_b, const Params& p, std::int64_t n,
             bool exclude, std::uint64_t seed, bool parallel = true);

// Bernoulli Monte Carlo of a predicate that draws its own point from the
// stream it is handed.
McEstimate measure_estimate(const std::function<bool(RngStream&)>& predicate,
                            std::int64_t n, std::uint64_t seed,
                            bool parallel = true);

}  // namespace rotsum
