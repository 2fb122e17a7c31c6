#include "rotsum/rotation.hpp"

#include <cmath>

#include "rotsum/dd.hpp"

namespace rotsum {

SignedFrac signed_frac(std::int64_t k, double alpha) {
  DdSignedFrac f = dd_signed_frac_mult(k, alpha);
  return {f.value.collapsed(), f.kprime};
}

bool is_resonant(std::int64_t k, double abs_frac, const Params& p) {
  // |f| <= threshold is necessary (k^(1-a) >= 1), so the pow is only paid
  // on candidates.
  if (abs_frac > p.threshold) return false;
  return std::pow(static_cast<double>(k), 1.0 - p.a) * abs_frac <= p.threshold;
}

namespace {

// Incremental signed fractional part of k*alpha along k = k0, k0+1, ...
// Double-double accumulation keeps the drift near 2^-106 per step.
class FracWalker {
 public:
  FracWalker(std::int64_t k0, double alpha) : alpha_(alpha) {
    f_ = dd_signed_frac_mult(k0, alpha).value;
  }
  double value() const { return f_.collapsed(); }
  void step() {
    f_ = dd_add(f_, alpha_);
    // alpha in [0,1): one wrap at most, back into (-1/2, 1/2]
    if (f_.hi > 0.5 || (f_.hi == 0.5 && f_.lo > 0.0)) f_ = dd_add(f_, -1.0);
  }

 private:
  Dd f_;
  double alpha_;
};

}  // namespace

ResonantSet resonant_set(double alpha, const Params& p, Band band) {
  ResonantSet out;
  out.band = band;
  std::int64_t k0 = band == Band::hat ? p.k_hat_min() : 1;
  if (k0 > p.k_upper) return out;
  FracWalker w(k0, alpha);
  for (std::int64_t k = k0; k <= p.k_upper; ++k, w.step()) {
    double f = w.value();
    if (is_resonant(k, std::abs(f), p)) {
      out.indices.push_back(k);
      if (f == 0.0) out.degenerate_alpha = true;
    }
  }
  return out;
}

bool in_exclusion(double alpha, const Params& p) {
  if (p.k_small_max < 1) return false;
  FracWalker w(1, alpha);
  for (std::int64_t k = 1; k <= p.k_small_max; ++k, w.step()) {
    if (is_resonant(k, std::abs(w.value()), p)) return true;
  }
  return false;
}

}  // namespace rotsum
