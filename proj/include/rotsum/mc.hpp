#pragma once

#include <cstdint>
#include <vector>

#include "rotsum/limit_dist.hpp"
#include "rotsum/params.hpp"

namespace rotsum {

// Deterministic parallel map: f(i) fills slot i from its own counter stream,
// so the result is byte-identical no matter how many threads run the loop.
// Execution::serial is the reference path the parallel kernels are tested
// against.
template <typename F>
void for_each_index(std::int64_t n, Execution exec, F&& f) {
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

int max_threads();

// S(alpha, x, N)/N^a at n uniform (alpha, x); an orbit hitting the
// singularity exactly is redrawn from an extended counter (never observed in
// practice, but it keeps the kernel total).
std::vector<double> sample_finite_law(const Params& p, std::int64_t n,
                                      std::uint64_t seed,
                                      Execution exec = Execution::parallel);

// box sum at n uniform (alpha, x)
std::vector<double> sample_box_law(const Params& p, const LimitTermParams& tp,
                                   std::int64_t n, std::uint64_t seed,
                                   Execution exec = Execution::parallel);

}  // namespace rotsum
