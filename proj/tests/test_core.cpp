#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rotsum/dd.hpp"
#include "rotsum/params.hpp"
#include "rotsum/rng.hpp"
#include "rotsum/summation.hpp"

using namespace rotsum;

TEST_CASE("dd product reduction recovers exact fractional parts") {
  RngStream rng(7, stream_tag("dd"), 0);
  for (int t = 0; t < 2000; ++t) {
    double x = rng.uniform();
    std::int64_t k = 1 + static_cast<std::int64_t>(rng.uniform() * 1e9);
    DdFrac f = dd_frac_mult(k, x);
    // ipart + frac must reconstruct the exact two_prod value
    Dd p = two_prod(static_cast<double>(k), x);
    Dd r = dd_add(f.frac, static_cast<double>(f.ipart));
    CHECK((r.hi - p.hi) + (r.lo - p.lo) == 0.0);
    double got = f.frac.collapsed();
    CHECK(got >= 0.0);
    CHECK(got < 1.0);
    if (k <= 1000000) {  // long double reference is trustworthy here
      long double prod = static_cast<long double>(k) * static_cast<long double>(x);
      long double ref = prod - std::floor(prod);
      double diff = std::abs(static_cast<double>(ref - static_cast<long double>(got)));
      if (diff > 0.5) diff = std::abs(diff - 1.0);
      CHECK(diff < 1e-12);
    }
  }
}

TEST_CASE("signed fractional parts stay in (-1/2, 1/2] and satisfy k x + k' = value") {
  RngStream rng(11, stream_tag("dd"), 1);
  for (int t = 0; t < 2000; ++t) {
    double x = rng.uniform();
    std::int64_t k = 1 + static_cast<std::int64_t>(rng.uniform() * 1e7);
    DdSignedFrac s = dd_signed_frac_mult(k, x);
    double v = s.value.collapsed();
    CHECK(v > -0.5);
    CHECK(v <= 0.5);
    // |k x + k' - value| small relative to ulp(k x)
    long double resid = static_cast<long double>(k) * x +
                        static_cast<long double>(s.kprime) -
                        static_cast<long double>(v);
    CHECK(std::abs(static_cast<double>(resid)) <=
          4.0 * std::ldexp(1.0, -52) * std::abs(static_cast<double>(k) * x));
  }
}

TEST_CASE("signed frac boundary keeps +1/2") {
  DdSignedFrac s = dd_signed_frac_mult(2, 0.25);
  CHECK(s.value.collapsed() == 0.5);
  CHECK(s.kprime == 0);
}

TEST_CASE("dd_mod2 agrees with plain reduction on moderate values") {
  RngStream rng(3, stream_tag("dd"), 2);
  for (int t = 0; t < 1000; ++t) {
    double v = (rng.uniform() - 0.5) * 1e6;
    double m = dd_mod2(Dd{v, 0.0});
    CHECK(m >= -1.0);
    CHECK(m < 1.0);
    double diff = std::remainder(v - m, 2.0);
    CHECK(std::abs(diff) < 1e-9);
  }
}

TEST_CASE("kahan accumulates ill-conditioned sums exactly") {
  Kahan k;
  k.add(1e16);
  for (int i = 0; i < 10000; ++i) k.add(0.1);
  k.add(-1e16);
  CHECK(k.value() == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("pairwise sum matches kahan") {
  std::vector<double> v(1000);
  RngStream rng(5, stream_tag("sum"), 0);
  Kahan k;
  for (auto& x : v) {
    x = rng.uniform() - 0.5;
    k.add(x);
  }
  CHECK(pairwise_sum(v) == doctest::Approx(k.value()).epsilon(1e-13));
}

TEST_CASE("rng streams are independent of evaluation order and reproducible") {
  RngStream a(42, stream_tag("t"), 7);
  RngStream b(42, stream_tag("t"), 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  // different indices decorrelate
  RngStream c(42, stream_tag("t"), 8);
  CHECK(c.next_u64() != RngStream(42, stream_tag("t"), 7).next_u64());
  // uniform in [0,1)
  RngStream d(1, stream_tag("t"), 0);
  for (int i = 0; i < 1000; ++i) {
    double u = d.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("params derives cutoffs and rejects bad input") {
  Params p(0.5, 100, 0.5);
  CHECK(p.upper_k == doctest::Approx(400.0));
  CHECK(p.k_upper == 399);  // strict k < 400
  CHECK(p.threshold == doctest::Approx(0.4));
  CHECK(p.cap == doctest::Approx((10.0 / std::sqrt(0.5) - 1.0) / 0.5));
  CHECK(p.k_small_max == 1);  // 0.5^6 * 100 = 1.5625
  CHECK(p.k_hat_min() == 2);

  CHECK_THROWS_AS(Params(0.0, 10, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Params(1.0, 10, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Params(0.5, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Params(0.5, 10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(0.5, 10, 1.0), std::invalid_argument);
}

TEST_CASE("params radius matches the pinned formula") {
  Params p(0.5, 10000, 0.1);
  CHECK(p.radius ==
        doctest::Approx(std::pow(0.1, -2.0) + std::pow(0.1, -4.75)).epsilon(1e-14));
}
