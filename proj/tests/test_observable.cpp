#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rotsum/observable.hpp"
#include "rotsum/quadrature.hpp"
#include "rotsum/rng.hpp"
#include "rotsum/summation.hpp"

using namespace rotsum;

TEST_CASE("phi at simple points") {
  CHECK(phi(0.25, 0.5) == doctest::Approx(0.0).epsilon(1e-15));  // x^-1/2 = 2 = 1/(1-a)
  CHECK(phi(1.0, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(phi(0.0, 0.5), singular_hit);
}

TEST_CASE("phi has mean zero: graded quadrature plus analytic tail") {
  for (double a : {0.3, 0.5, 0.7}) {
    double delta = 1e-12;
    // geometric panels toward the singularity keep x^-a smooth per panel
    Kahan integral;
    double hi = 1.0;
    while (hi > delta) {
      double lo = std::max(hi * 0.5, delta);
      integral.add(gl_integrate([&](double x) { return phi(x, a); }, lo, hi));
      hi = lo;
    }
    // analytic head: integral_0^delta phi = (delta^(1-a) - delta)/(1-a)
    double head = (std::pow(delta, 1.0 - a) - delta) / (1.0 - a);
    CHECK(std::abs(integral.value() + head) < 1e-10);
  }
}

TEST_CASE("phi_trunc caps below eps/N and agrees with phi above") {
  Params p(0.5, 100, 0.01);
  CHECK(phi_trunc(1e-5, p) == doctest::Approx(198.0).epsilon(1e-14));
  // independent arithmetic for the cap: (N^a eps^-a - 1)/(1-a)
  long double cap = (std::sqrt(100.0L) / std::sqrt(0.01L) - 1.0L) / 0.5L;
  CHECK(phi_trunc(0.0, p) == doctest::Approx(static_cast<double>(cap)).epsilon(1e-14));

  Params p2(0.5, 1000, 0.1);
  CHECK(phi_trunc(0.25, p2) == phi(0.25, 0.5));
  // boundary belongs to the uncapped branch
  CHECK(phi_trunc(p2.cut, p2) == phi(p2.cut, 0.5));
  // cap dominates everywhere
  RngStream rng(1, stream_tag("obs"), 0);
  for (int i = 0; i < 1000; ++i) {
    double x = rng.uniform();
    CHECK(phi_trunc(x, p2) <= p2.n_pow_a / std::pow(p2.eps, p2.a) / (1.0 - p2.a));
    if (x >= p2.cut) CHECK(phi_trunc(x, p2) == phi(x, p2.a));
  }
}

TEST_CASE("birkhoff_norm trivial orbits") {
  Params p(0.5, 16, 0.5);
  CHECK(birkhoff_norm(0.0, 0.25, p, false) == doctest::Approx(0.0).epsilon(1e-15));
  Params p1(0.5, 1, 0.5);
  CHECK(birkhoff_norm(0.0, 1.0, p1, false) == doctest::Approx(-1.0).epsilon(1e-15));
  // x = 0 with alpha = 0 sits on the singularity
  CHECK_THROWS_AS(birkhoff_norm(0.0, 0.0, p, false), singular_hit);
  CHECK(std::isfinite(birkhoff_norm(0.0, 0.0, p, true)));
}

TEST_CASE("truncated and untruncated Birkhoff sums differ on measure <= eps") {
  Params p(0.5, 1000, 0.1);
  const int n = 10000;
  int differ = 0;
  for (int i = 0; i < n; ++i) {
    RngStream rng(2024, stream_tag("obs-measure"), i);
    double alpha = rng.uniform(), x = rng.uniform();
    double t = birkhoff_norm(alpha, x, p, true);
    double u = birkhoff_norm(alpha, x, p, false);
    if (t != u) ++differ;
  }
  double frac = static_cast<double>(differ) / n;
  CHECK(frac <= p.eps + 3.0 * std::sqrt(p.eps / n));
}

TEST_CASE("birkhoff sum matches a naive long-double reference") {
  Params p(0.37, 500, 0.2);
  RngStream rng(9, stream_tag("obs-ref"), 0);
  for (int t = 0; t < 20; ++t) {
    double alpha = rng.uniform(), x = rng.uniform();
    long double acc = 0.0L;
    for (int n = 0; n < 500; ++n) {
      long double y = x + static_cast<long double>(n) * alpha;
      y -= std::floor(y);
      if (n == 0) y = x;
      acc += y < p.cut ? static_cast<long double>(p.cap)
                       : std::pow(y, -0.37L) - 1.0L / 0.63L;
    }
    double ref = static_cast<double>(acc / std::pow(500.0L, 0.37L));
    CHECK(birkhoff_norm(alpha, x, p, true) == doctest::Approx(ref).epsilon(1e-9));
  }
}
