#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace rotsum {

// Neumaier-compensated accumulator.  All long reductions in the library go
// through this in a fixed index order so results do not depend on how work
// was split across threads.
class Kahan {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      c_ += (sum_ - t) + x;
    else
      c_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    Kahan k;
    for (double x : v) k.add(x);
    return k.value();
  }
  std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

}  // namespace rotsum
