#include "rotsum/stats.hpp"

#include <algorithm>
#include <cmath>

#include "rotsum/fourier.hpp"
#include "rotsum/mc.hpp"
#include "rotsum/summation.hpp"

namespace rotsum {

ECDF::ECDF(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("ECDF: empty sample");
  std::sort(samples_.begin(), samples_.end());
}

double ECDF::operator()(double z) const {
  auto it = std::upper_bound(samples_.begin(), samples_.end(), z);
  return static_cast<double>(it - samples_.begin()) /
         static_cast<double>(samples_.size());
}

double ECDF::quantile(double q) const {
  if (q <= 0.0) return samples_.front();
  if (q >= 1.0) return samples_.back();
  auto idx = static_cast<std::size_t>(std::ceil(q * samples_.size())) - 1;
  return samples_[std::min(idx, samples_.size() - 1)];
}

double ks(const ECDF& A, const ECDF& B) {
  const auto& a = A.samples();
  const auto& b = B.samples();
  double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double sup = 0.0;
  while (i < a.size() && j < b.size()) {
    double z = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= z) ++i;
    while (j < b.size() && b[j] <= z) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
  }
  return sup;
}

double ks_uniform(const ECDF& A) {
  const auto& a = A.samples();
  double n = static_cast<double>(a.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sup = std::max(sup, std::abs((i + 1) / n - a[i]));
    sup = std::max(sup, std::abs(a[i] - i / n));
  }
  return sup;
}

McEstimate wilson(std::int64_t hits, std::int64_t n, std::uint64_t seed) {
  McEstimate e;
  e.n = n;
  e.seed = seed;
  if (n == 0) return e;
  double p = static_cast<double>(hits) / static_cast<double>(n);
  double z = 1.959963984540054;  // 97.5% normal quantile
  double z2 = z * z, dn = static_cast<double>(n);
  double denom = 1.0 + z2 / dn;
  double center = (p + z2 / (2.0 * dn)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / dn + z2 / (4.0 * dn * dn)) / denom;
  e.estimate = p;
  e.lo = std::max(0.0, center - half);
  e.hi = std::min(1.0, center + half);
  return e;
}

namespace {

double pick(const ModelValues& mv, ModelTag tag) {
  switch (tag) {
    case ModelTag::direct: return mv.direct;
    case ModelTag::bar: return mv.bar;
    case ModelTag::tilde: return mv.tilde;
    case ModelTag::hat: return mv.hat;
    case ModelTag::diamond: return mv.diamond;
  }
  return 0.0;
}

}  // namespace

L2Gap l2_gap(ModelTag model_a, ModelTag model_b, const Params& p, std::int64_t n,
             bool exclude, std::uint64_t seed, bool parallel) {
  FourierModels models(p);
  constexpr std::uint64_t tag = stream_tag("l2-gap");

  // slot -1 marks an excluded draw; NaN marks a resonant-denominator redraw
  std::vector<double> sq(static_cast<std::size_t>(n));
  std::vector<unsigned char> skip(static_cast<std::size_t>(n), 0);
  for_each_index(n, parallel ? Execution::parallel : Execution::serial,
                 [&](std::int64_t i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      RngStream rng(seed, tag, static_cast<std::uint64_t>(i) + (attempt << 40));
      double alpha = rng.uniform(), x = rng.uniform();
      try {
        ModelValues mv = models.evaluate(alpha, x);
        if (exclude && mv.in_exclusion) {
          skip[static_cast<std::size_t>(i)] = 1;
          return;
        }
        double d = pick(mv, model_a) - pick(mv, model_b);
        sq[static_cast<std::size_t>(i)] = d * d;
        return;
      } catch (const resonant_denominator&) {
        if (attempt > 4) {
          skip[static_cast<std::size_t>(i)] = 1;
          return;
        }
      }
    }
  });

  std::int64_t used = 0;
  Kahan sum, sum2;
  for (std::int64_t i = 0; i < n; ++i) {
    if (skip[static_cast<std::size_t>(i)]) continue;
    ++used;
    sum.add(sq[static_cast<std::size_t>(i)]);
    sum2.add(sq[static_cast<std::size_t>(i)] * sq[static_cast<std::size_t>(i)]);
  }
  if (used < n / 10)
    throw insufficient_samples("l2_gap: exclusion rejected too many draws");
  L2Gap g;
  g.used = used;
  g.seed = seed;
  g.skipped_fraction = static_cast<double>(n - used) / static_cast<double>(n);
  double mean = sum.value() / static_cast<double>(used);
  double var = std::max(0.0, sum2.value() / static_cast<double>(used) - mean * mean);
  g.mean_square = mean;
  g.std_error = std::sqrt(var / static_cast<double>(used));
  return g;
}

McEstimate measure_estimate(const std::function<bool(RngStream&)>& predicate,
                            std::int64_t n, std::uint64_t seed, bool parallel) {
  constexpr std::uint64_t tag = stream_tag("measure");
  std::vector<unsigned char> hit(static_cast<std::size_t>(n), 0);
  for_each_index(n, parallel ? Execution::parallel : Execution::serial,
                 [&](std::int64_t i) {
    RngStream rng(seed, tag, static_cast<std::uint64_t>(i));
    hit[static_cast<std::size_t>(i)] = predicate(rng) ? 1 : 0;
  });
  std::int64_t hits = 0;
  for (unsigned char c : hit) hits += c;
  return wilson(hits, n, seed);
}

}  // namespace rotsum
