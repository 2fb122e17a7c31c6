#pragma once

#include <array>
#include <cstdint>

namespace rotsum {

struct OscPair {
  double cos_part = 0.0;
  double sin_part = 0.0;
  double err = 0.0;  // conservative absolute bound on both parts
};

// Evaluator for the oscillatory tails  integral_X^inf trig(2 pi x) x^(-a) dx.
//
// Layout: the singular head [X, 1/4] is flattened by the substitution
// x = t^(1/(1-a)) (which absorbs x^(-a) dx exactly into dt), the midrange
// [1/4, 6] is covered by quarter-period Gauss-Legendre panels with cached
// joint values, and beyond 6 the integration-by-parts asymptotic series
// takes over with a rigorous first-omitted-term bound.  Any X >= 0 costs
// O(1) panels.
class OscTailEvaluator {
 public:
  explicit OscTailEvaluator(double a);

  OscPair eval(double x) const;

  double a() const { return a_; }

  static constexpr double kAsymEdge = 6.0;

 private:
  OscPair head_singular(double x0, double x1) const;  // within [0, 1/4]
  OscPair panel(double x0, double x1) const;          // smooth GL panel

  double a_;
  // tails at the panel joints j/4, j = 1..24 (index 0 = joint 1/4)
  std::array<OscPair, 24> joint_tail_;
};

// Asymptotic series for integral_X^inf e^(2 pi i x) x^(-a) dx, X >= ~6.
// frac_x must be the exact fractional part of X (it is exact for any
// double: X - floor(X) loses nothing).
OscPair osc_tail_asymptotic(double x, double frac_x, double a);

// 16-point Gauss-Legendre rule on [-1, 1]
struct GaussLegendre16 {
  std::array<double, 16> node;
  std::array<double, 16> weight;
};
const GaussLegendre16& gl16();

// integral of f over [x0, x1] with one 16-point panel
template <typename F>
double gl_integrate(F&& f, double x0, double x1) {
  const auto& g = gl16();
  double c = 0.5 * (x0 + x1), h = 0.5 * (x1 - x0);
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += g.weight[i] * f(c + h * g.node[i]);
  return s * h;
}

}  // namespace rotsum
