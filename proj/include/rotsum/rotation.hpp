#pragma once

#include <cstdint>
#include <vector>

#include "rotsum/params.hpp"

namespace rotsum {

// {k alpha}: the representative of k*alpha mod 1 in (-1/2, 1/2].
// value = k*alpha + integer_part, with +1/2 kept and -1/2 excluded.
struct SignedFrac {
  double value;
  std::int64_t integer_part;
};

SignedFrac signed_frac(std::int64_t k, double alpha);

enum class Band { full, hat };

// Frequencies k with k^(1-a) |{k alpha}| <= threshold inside the band's
// k-window: full scans 0 < k < upper_k, hat additionally requires
// k > small_cutoff.
struct ResonantSet {
  std::vector<std::int64_t> indices;  // sorted ascending
  Band band = Band::full;
  bool degenerate_alpha = false;      // some member had {k alpha} == 0
};

ResonantSet resonant_set(double alpha, const Params& p, Band band);

// True iff some k <= small_cutoff is resonant, i.e. alpha lies in the
// exclusion set E(N, eps).
bool in_exclusion(double alpha, const Params& p);

// k^(1-a) |{k alpha}| <= threshold, the single-frequency resonance test.
bool is_resonant(std::int64_t k, double abs_frac, const Params& p);

}  // namespace rotsum
