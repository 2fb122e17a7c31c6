#include "rotsum/observable.hpp"

#include <cmath>

#include "rotsum/dd.hpp"
#include "rotsum/summation.hpp"

namespace rotsum {

double phi(double x, double a) {
  if (x == 0.0) throw singular_hit{};
  double inv = (a == 0.5) ? 1.0 / std::sqrt(x) : std::pow(x, -a);
  return inv - 1.0 / (1.0 - a);
}

double phi_trunc(double x, const Params& p) {
  if (x < p.cut) return p.cap;
  return phi(x, p.a);
}

double birkhoff_norm(double alpha, double x, const Params& p, bool truncated) {
  Kahan acc;
  Dd y{x, 0.0};
  for (std::int64_t n = 0; n < p.N; ++n) {
    double pt = y.collapsed();
    acc.add(truncated ? phi_trunc(pt, p) : phi(pt, p.a));
    y = dd_add(y, alpha);
    if (y.hi >= 1.0) y = dd_add(y, -1.0);
  }
  return acc.value() / p.n_pow_a;
}

}  // namespace rotsum
