#pragma once

#include <stdexcept>

namespace otto {

/// y^3 + a2 y^2 + a1 y + a0.
struct MonicCubic {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  double operator()(double y) const { return ((y + a2) * y + a1) * y + a0; }
};

/// Raised when a root fails the residual check.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerance on acos arguments: |x| <= 1 + kClampEps is clamped, beyond it the
/// hyperbolic continuation is used.
inline constexpr double kClampEps = 1e-12;

/// Relative residual accepted by principal_trig_root.
inline constexpr double kResidualTol = 1e-9;

/// Discriminant 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 with a = 1.
/// Positive: three distinct real roots. Negative: one real root.
double discriminant(const MonicCubic& c);

enum class TrigBranch { Trigonometric, HyperbolicContinuation, Monotone };

struct CubicRoot {
  double value = 0.0;
  TrigBranch branch = TrigBranch::Trigonometric;
  double acos_argument = 0.0;  // meaningful for the first two branches only
};

/// Real root from the trigonometric formula
///
///   y = -A/3 + (2/3) sqrt(A^2 - 3B) cos[(1/3) acos(x)],
///   x = -(2A^3 - 9AB + 27C) / (2 (A^2 - 3B)^{3/2}).
///
/// For |x| <= 1 this is the largest of three real roots. For |x| > 1 + eps the
/// cubic has one real root and cos(acos(x)/3) is continued to
/// sign(x) cosh(acosh|x| / 3). When A^2 - 3B <= 0 the cubic is monotone and the
/// root is found by bisection. Throws SolverError if the residual exceeds
/// kResidualTol * residual_scale(c, y).
CubicRoot principal_trig_root(const MonicCubic& c);

/// max(1, |A|, |B|, |C|, |y^3|, |A y^2|, |B y|): the size of the terms summed
/// when the cubic is evaluated at y.
double residual_scale(const MonicCubic& c, double y);

}  // namespace otto
