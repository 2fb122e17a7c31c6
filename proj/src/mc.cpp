#include "rotsum/mc.hpp"

#include <omp.h>

#include "rotsum/observable.hpp"

namespace rotsum {

int max_threads() { return omp_get_max_threads(); }

std::vector<double> sample_finite_law(const Params& p, std::int64_t n,
                                      std::uint64_t seed, Execution exec) {
  std::vector<double> out(static_cast<std::size_t>(n));
  constexpr std::uint64_t tag = stream_tag("finite-law");
  for_each_index(n, exec, [&](std::int64_t i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      RngStream rng(seed, tag, static_cast<std::uint64_t>(i) + (attempt << 40));
      double alpha = rng.uniform(), x = rng.uniform();
      try {
        out[static_cast<std::size_t>(i)] = birkhoff_norm(alpha, x, p, false);
        return;
      } catch (const singular_hit&) {
        if (attempt > 4) {
          out[static_cast<std::size_t>(i)] = 0.0;
          return;
        }
      }
    }
  });
  return out;
}

std::vector<double> sample_box_law(const Params& p, const LimitTermParams& tp,
                                   std::int64_t n, std::uint64_t seed,
                                   Execution exec) {
  std::vector<double> out(static_cast<std::size_t>(n));
  constexpr std::uint64_t tag = stream_tag("box-law");
  for_each_index(n, exec, [&](std::int64_t i) {
    RngStream rng(seed, tag, static_cast<std::uint64_t>(i));
    double alpha = rng.uniform(), x = rng.uniform();
    out[static_cast<std::size_t>(i)] = box_sum(alpha, x, p, tp);
  });
  return out;
}

}  // namespace rotsum
