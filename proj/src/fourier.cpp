#include "rotsum/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rotsum/dd.hpp"
#include "rotsum/observable.hpp"
#include "rotsum/osc_term.hpp"
#include "rotsum/summation.hpp"

namespace rotsum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

struct Rot {
  double c = 1.0, s = 0.0;
};
inline Rot rot_mul(Rot a, Rot b) { return {a.c * b.c - a.s * b.s, a.c * b.s + a.s * b.c}; }
inline Rot rot_of_pi(double t) { return {std::cos(kPi * t), std::sin(kPi * t)}; }

// (1 + t)^c for |t| << 1, four terms; used to step k^c between refreshes.
inline double pow1p(double t, double c) {
  return 1.0 + t * (c + t * (c * (c - 1.0) * 0.5 + t * (c * (c - 1.0) * (c - 2.0) / 6.0)));
}

inline Dd dd_mod2_dd(Dd a) {  // into [-1, 1)
  double f = std::floor(a.hi * 0.5) * 2.0;
  Dd r = quick_two_sum(a.hi - f, a.lo);
  if (r.hi >= 1.0) r = dd_add(r, -2.0);
  return r;
}

// Rising-factorial coefficients (a)_j / (2 pi)^j for the tail series.
struct AsymCoeffs {
  static constexpr int kMax = 13;
  double q[kMax];
  explicit AsymCoeffs(double a) {
    double rising = 1.0, pw = 1.0;
    for (int j = 0; j < kMax; ++j) {
      q[j] = rising / pw;
      rising *= a + j;
      pw *= kTwoPi;
    }
  }

  // tail of integral e^(2 pi i x) x^(-a) starting at u, given u^(-a), 1/u and
  // e^(2 pi i u) = (cu, su).  Returns {cos_part, sin_part}.
  void tail(double u_neg_a, double inv_u, double cu, double su,
            double& out_c, double& out_s) const {
    double s_re = 0.0, s_im = 0.0;
    double up = u_neg_a;
    for (int j = 0; j < kMax; ++j) {
      double term = q[j] * up;
      switch (j & 3) {  // i^(-j) cycle: 1, -i, -1, i
        case 0: s_re += term; break;
        case 1: s_im -= term; break;
        case 2: s_re -= term; break;
        case 3: s_im += term; break;
      }
      up *= inv_u;
      if (q[j + 1 < kMax ? j + 1 : j] * up < 1e-17) break;
    }
    out_c = -(cu * s_im + su * s_re) / kTwoPi;
    out_s = (cu * s_re - su * s_im) / kTwoPi;
  }
};

}  // namespace

LimitCoeffs limit_coeffs_closed_form(double a) {
  double g = std::tgamma(1.0 - a) * std::pow(kTwoPi, a - 1.0);
  return {g * std::sin(kPi * a / 2.0), g * std::cos(kPi * a / 2.0)};
}

LimitCoeffs limit_coeffs(double a) {
  OscTailEvaluator ev(a);
  OscPair t = ev.eval(0.0);
  LimitCoeffs q{t.cos_part, t.sin_part};
  LimitCoeffs cf = limit_coeffs_closed_form(a);
  if (std::abs(q.b - cf.b) > 1e-8 || std::abs(q.d - cf.d) > 1e-8)
    throw std::logic_error("limit_coeffs: quadrature and closed form disagree");
  return q;
}

OscCoeffs osc_coeffs(std::int64_t k, const Params& p) {
  // Standalone entry: builds a fresh evaluator (~30us); use
  // FourierModels::coeffs for bulk work.
  OscTailEvaluator ev(p.a);
  double u = static_cast<double>(k) * p.cut;
  OscPair tu = ev.eval(u);
  OscPair tk = ev.eval(static_cast<double>(k));
  return {tu.cos_part - tk.cos_part, tu.sin_part - tk.sin_part, k,
          tu.err + tk.err};
}

FourierModels::FourierModels(const Params& p, std::int64_t table_max)
    : p_(p), tail_(p.a), lim_(limit_coeffs(p.a)) {
  table_len_ = std::min<std::int64_t>(p.k_upper, table_max);
  if (table_len_ < 0) table_len_ = 0;
  tb_.assign(static_cast<std::size_t>(table_len_) + 1, 0.0);
  td_.assign(static_cast<std::size_t>(table_len_) + 1, 0.0);
  for (std::int64_t k = 1; k <= table_len_; ++k) {
    double u = static_cast<double>(k) * p_.cut;
    OscPair tu = tail_.eval(u);
    OscPair tk = tail_.eval(static_cast<double>(k));
    tb_[static_cast<std::size_t>(k)] = tu.cos_part - tk.cos_part;
    td_[static_cast<std::size_t>(k)] = tu.sin_part - tk.sin_part;
  }
}

OscCoeffs FourierModels::coeffs(std::int64_t k) const {
  if (k >= 1 && k <= table_len_)
    return {tb_[static_cast<std::size_t>(k)], td_[static_cast<std::size_t>(k)], k, 2e-15};
  double u = static_cast<double>(k) * p_.cut;
  OscPair tu = tail_.eval(u);
  OscPair tk = tail_.eval(static_cast<double>(k));
  return {tu.cos_part - tk.cos_part, tu.sin_part - tk.sin_part, k, tu.err + tk.err};
}

struct FourierModels::ScanResult {
  double bar = 0.0, tilde = 0.0, hat = 0.0, diamond = 0.0, series = 0.0;
  bool in_exclusion = false;
  std::int64_t res_full = 0, res_hat = 0;
};

FourierModels::ScanResult FourierModels::scan(double alpha, double x,
                                              std::int64_t k_stop,
                                              bool want_models) const {
  const Params& p = p_;
  const double a = p.a;
  const double inv_na = 1.0 / p.n_pow_a;
  const double front = 2.0 / ((1.0 - a) * std::pow(p.eps, a));
  const double inv_2pi = 1.0 / kTwoPi;
  const double cut = p.cut;
  const double cut_neg_a = std::pow(cut, -a);
  const double inv_cut = 1.0 / cut;
  const std::int64_t hat_min = p.k_hat_min();
  const AsymCoeffs asym(a);
  const OscTermCtx tctx(a, p.eps, lim_);

  // double-double angle walkers, all in units of pi
  Dd wf = dd_signed_frac_mult(1, alpha).value;                     // {k alpha}
  Dd wka = dd_mod2_dd(Dd{alpha, 0.0});                             // k alpha mod 2
  const Dd step_n = dd_mod2_dd(two_prod(static_cast<double>(p.N), alpha));
  Dd wn = step_n;                                                  // N k alpha mod 2
  const Dd step_th =
      dd_mod2_dd(dd_add(two_prod(static_cast<double>(p.N - 1), alpha), 2.0 * x));
  Dd wth = step_th;                            // (2 k x + (N-1) k alpha) mod 2

  const Rot s_ka = rot_of_pi(alpha);
  const Rot s_n = rot_of_pi(step_n.collapsed());
  const Rot s_th = rot_of_pi(step_th.collapsed());
  const Rot s_u{std::cos(kTwoPi * cut), std::sin(kTwoPi * cut)};
  Rot r_ka, r_n, r_th, r_u;

  double inv_k1a = 1.0, inv_ka = 1.0, inv_k = 1.0;

  Kahan bar, tilde, hat, diamond, series;
  ScanResult out;

  constexpr std::int64_t kRefresh = 4096;
  constexpr std::int64_t kPowDirect = 2048;

  for (std::int64_t k = 1; k <= k_stop; ++k) {
    double dk = static_cast<double>(k);
    if ((k - 1) % kRefresh == 0) {
      r_ka = rot_of_pi(wka.collapsed());
      r_n = rot_of_pi(wn.collapsed());
      r_th = rot_of_pi(wth.collapsed());
      double u = dk * cut;
      double uf = u - std::floor(u);
      r_u = {std::cos(kTwoPi * uf), std::sin(kTwoPi * uf)};
    }
    if (k <= kPowDirect || (k - 1) % kRefresh == 0) {
      inv_k = 1.0 / dk;
      inv_k1a = std::pow(dk, a - 1.0);
      inv_ka = std::pow(dk, -a);
    } else {
      double t = 1.0 / (dk - 1.0);
      inv_k = 1.0 / dk;
      inv_k1a *= pow1p(t, a - 1.0);
      inv_ka *= pow1p(t, -a);
    }

    double sin_ka = r_ka.s;
    double sin_n = r_n.s;
    if (std::abs(sin_ka) < 1e-3) {
      // strong resonance: rotor drift costs relative accuracy exactly where
      // the kernel is large, so fall back to the walkers
      sin_ka = std::sin(kPi * wka.collapsed());
      sin_n = std::sin(kPi * wn.collapsed());
      if (std::abs(sin_ka) < 1e-12) throw resonant_denominator(k);
    }

    double b, d;
    if (k <= table_len_) {
      b = tb_[static_cast<std::size_t>(k)];
      d = td_[static_cast<std::size_t>(k)];
    } else {
      double u = dk * cut;
      if (u >= OscTailEvaluator::kAsymEdge) {
        double tc_u, ts_u, tc_k, ts_k;
        asym.tail(inv_ka * cut_neg_a, inv_k * inv_cut, r_u.c, r_u.s, tc_u, ts_u);
        asym.tail(inv_ka, inv_k, 1.0, 0.0, tc_k, ts_k);
        b = tc_u - tc_k;
        d = ts_u - ts_k;
      } else {  // off the tested parameter range; exact but slow
        OscCoeffs oc = coeffs(k);
        b = oc.b;
        d = oc.d;
      }
    }

    double coef_cos = 2.0 * b * inv_k1a * inv_na + front * r_u.s * inv_k * inv_2pi;
    double coef_sin = 2.0 * d * inv_k1a * inv_na - front * (r_u.c - 1.0) * inv_k * inv_2pi;
    double g = (coef_cos * r_th.c + coef_sin * r_th.s) * (sin_n / sin_ka);
    series.add(g);

    if (want_models && k <= p.k_upper) {
      bar.add(g);
      double f = wf.collapsed();
      double af = std::abs(f);
      if (af <= p.threshold * inv_k1a * (1.0 + 1e-9) && is_resonant(k, af, p)) {
        out.res_full += 1;
        tilde.add(g);
        if (k <= p.k_small_max) out.in_exclusion = true;
        if (k >= hat_min) {
          out.res_hat += 1;
          hat.add(g);
          // tilde-variant term through the shared (X, Z) form
          Dd zdd = dd_mul_int(wf, p.N);
          Dd kx = dd_frac_mult(k, x).frac;
          OscTermView v;
          v.X = dk / static_cast<double>(p.N);
          v.Z = zdd.collapsed();
          v.z_mod2 = dd_mod2(zdd);
          v.phase_mod2 = dd_mod2(dd_add(dd_mul_int(kx, 2), dd_mul_int(wf, p.N - 1)));
          diamond.add(oscillating_term(v, tctx));
        }
      }
    }

    // advance to k+1
    wf = dd_add(wf, alpha);
    if (wf.hi > 0.5 || (wf.hi == 0.5 && wf.lo > 0.0)) wf = dd_add(wf, -1.0);
    wka = dd_add(wka, alpha);
    if (wka.hi >= 1.0) wka = dd_add(wka, -2.0);
    wn = dd_add(wn, step_n);
    if (wn.hi >= 1.0) wn = dd_add(wn, -2.0);
    else if (wn.hi < -1.0) wn = dd_add(wn, 2.0);
    wth = dd_add(wth, step_th);
    if (wth.hi >= 1.0) wth = dd_add(wth, -2.0);
    else if (wth.hi < -1.0) wth = dd_add(wth, 2.0);
    r_ka = rot_mul(r_ka, s_ka);
    r_n = rot_mul(r_n, s_n);
    r_th = rot_mul(r_th, s_th);
    r_u = rot_mul(r_u, s_u);
  }

  out.bar = bar.value();
  out.tilde = tilde.value();
  out.hat = hat.value();
  out.diamond = diamond.value();
  out.series = series.value();
  return out;
}

double FourierModels::term_g(std::int64_t k, double alpha, double x,
                             GVariant variant) const {
  DdSignedFrac sf = dd_signed_frac_mult(k, alpha);
  Dd kx = dd_frac_mult(k, x).frac;

  if (variant == GVariant::tilde) {
    if (sf.value.collapsed() == 0.0) throw resonant_denominator(k);
    Dd zdd = dd_mul_int(sf.value, p_.N);
    OscTermView v;
    v.X = static_cast<double>(k) / static_cast<double>(p_.N);
    v.Z = zdd.collapsed();
    v.z_mod2 = dd_mod2(zdd);
    v.phase_mod2 = dd_mod2(dd_add(dd_mul_int(kx, 2), dd_mul_int(sf.value, p_.N - 1)));
    return oscillating_term(v, OscTermCtx(p_.a, p_.eps, lim_));
  }

  Dd ka2 = dd_mod2_dd(two_prod(static_cast<double>(k), alpha));
  double sin_ka = std::sin(kPi * ka2.collapsed());
  if (std::abs(sin_ka) < 1e-12) throw resonant_denominator(k);
  double sin_n = std::sin(kPi * dd_mod2(dd_mul_int(ka2, p_.N)));
  double th = dd_mod2(dd_add(dd_mul_int(kx, 2), dd_mul_int(ka2, p_.N - 1)));

  OscCoeffs oc = coeffs(k);
  double u = static_cast<double>(k) * p_.cut;
  double uf = u - std::floor(u);
  double front = 2.0 / ((1.0 - p_.a) * std::pow(p_.eps, p_.a));
  double inv_k1a = std::pow(static_cast<double>(k), p_.a - 1.0);
  double coef_cos = 2.0 * oc.b * inv_k1a / p_.n_pow_a +
                    front * std::sin(kTwoPi * uf) / (kTwoPi * static_cast<double>(k));
  double coef_sin = 2.0 * oc.d * inv_k1a / p_.n_pow_a -
                    front * (std::cos(kTwoPi * uf) - 1.0) / (kTwoPi * static_cast<double>(k));
  return (coef_cos * std::cos(kPi * th) + coef_sin * std::sin(kPi * th)) *
         (sin_n / sin_ka);
}

double FourierModels::model_sum(double alpha, double x, Model model,
                                const ResonantSet* index_override) const {
  if (index_override) {
    GVariant v = model == Model::diamond ? GVariant::tilde : GVariant::exact;
    Kahan s;
    for (std::int64_t k : index_override->indices) s.add(term_g(k, alpha, x, v));
    return s.value();
  }
  ScanResult r = scan(alpha, x, p_.k_upper, true);
  switch (model) {
    case Model::bar: return r.bar;
    case Model::tilde: return r.tilde;
    case Model::hat: return r.hat;
    case Model::diamond: return r.diamond;
  }
  return 0.0;
}

ModelValues FourierModels::evaluate(double alpha, double x) const {
  ScanResult r = scan(alpha, x, p_.k_upper, true);
  ModelValues mv;
  mv.direct = birkhoff_norm(alpha, x, p_, true);
  mv.bar = r.bar;
  mv.tilde = r.tilde;
  mv.hat = r.hat;
  mv.diamond = r.diamond;
  mv.in_exclusion = r.in_exclusion;
  mv.resonant_full = r.res_full;
  mv.resonant_hat = r.res_hat;
  return mv;
}

double FourierModels::tail_constant(double alpha, double x) const {
  // Partial Fourier sums of a jump of height J differ from the function by
  // about J/(2 pi^2 K d) at circle distance d from the jump; summing over the
  // orbit and both jump points (0 and eps/N) bounds the dropped series tail
  // by B/K.  Factor 2 covers the smooth remainder and higher-order terms.
  const double j0 = p_.cap - (1.0 - 1.0 / (1.0 - p_.a));
  const double j1 = p_.cap - phi(p_.cut, p_.a);
  Kahan sum;
  Dd y{x, 0.0};
  for (std::int64_t n = 0; n < p_.N; ++n) {
    double pt = y.collapsed();
    double d0 = std::min(pt, 1.0 - pt);
    double dc = std::abs(pt - p_.cut);
    double d1 = std::min(dc, 1.0 - dc);
    if (d0 > 0.0) sum.add(j0 / d0);
    if (d1 > 0.0) sum.add(j1 / d1);
    y = dd_add(y, alpha);
    if (y.hi >= 1.0) y = dd_add(y, -1.0);
  }
  return 2.0 * sum.value() / (2.0 * kPi * kPi * p_.n_pow_a);
}

ReconstructionReport FourierModels::reconstruct(double alpha, double x,
                                                double tol,
                                                std::int64_t k_max) const {
  ReconstructionReport rep;
  rep.direct = birkhoff_norm(alpha, x, p_, true);
  double bconst = tail_constant(alpha, x);
  double need = std::ceil(bconst / tol);
  rep.k_required = need < 9.0e18 ? static_cast<std::int64_t>(need)
                                 : std::numeric_limits<std::int64_t>::max();
  rep.k_used = std::min(rep.k_required, k_max);
  rep.k_used = std::max(rep.k_used, std::min(p_.k_upper, k_max));
  ScanResult r = scan(alpha, x, rep.k_used, false);
  rep.series = r.series;
  rep.residual = std::abs(rep.direct - rep.series);
  rep.tail_bound = bconst / static_cast<double>(rep.k_used);
  return rep;
}

EnvelopeSup lemma1_envelope_sup(const Params& p, std::int64_t k_max) {
  OscTailEvaluator ev(p.a);
  EnvelopeSup sup;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    double u = static_cast<double>(k) * p.cut;
    OscPair tu = ev.eval(u);
    OscPair tk = ev.eval(static_cast<double>(k));
    double b = tu.cos_part - tk.cos_part;
    double d = tu.sin_part - tk.sin_part;
    double ua = std::pow(u, p.a);
    double up = std::max(1.0, ua);
    double dn = std::max(1.0, 1.0 / ua);
    double uf = u - std::floor(u);
    sup.b_ratio = std::max(sup.b_ratio, std::abs(b) * up);
    sup.d_ratio = std::max(sup.d_ratio, std::abs(d) * up);
    sup.sin_ratio = std::max(sup.sin_ratio, std::abs(std::sin(kTwoPi * uf)) * dn);
    sup.cos_ratio = std::max(sup.cos_ratio, std::abs(std::cos(kTwoPi * uf) - 1.0) * dn);
  }
  return sup;
}

}  // namespace rotsum
