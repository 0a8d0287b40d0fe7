#include "otto/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace otto {

double discriminant(const MonicCubic& c) {
  const double b = c.a2;
  const double cc = c.a1;
  const double d = c.a0;
  return 18.0 * b * cc * d - 4.0 * b * b * b * d + b * b * cc * cc - 4.0 * cc * cc * cc -
         27.0 * d * d;
}

double residual_scale(const MonicCubic& c, double y) {
  const double ay = std::abs(y);
  return std::max({1.0, std::abs(c.a2), std::abs(c.a1), std::abs(c.a0), ay * ay * ay,
                   std::abs(c.a2) * ay * ay, std::abs(c.a1) * ay});
}

namespace {

// Bisection on a cubic with no turning points (A^2 - 3B <= 0), hence increasing.
double monotone_root(const MonicCubic& c) {
  // Cauchy bound on the roots of a monic polynomial.
  const double bound = 1.0 + std::max({std::abs(c.a2), std::abs(c.a1), std::abs(c.a0)});
  double lo = -bound;
  double hi = bound;
  for (int i = 0; i < 2000 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (c(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CubicRoot principal_trig_root(const MonicCubic& c) {
  const double a = c.a2;
  const double b = c.a1;
  const double q = a * a - 3.0 * b;

  CubicRoot root;
  if (!(q > 0.0)) {
    root.branch = TrigBranch::Monotone;
    root.value = monotone_root(c);
  } else {
    const double sq = std::sqrt(q);
    const double x = -(2.0 * a * a * a - 9.0 * a * b + 27.0 * c.a0) / (2.0 * q * sq);
    root.acos_argument = x;
    double shape = 0.0;
    if (std::abs(x) <= 1.0 + kClampEps) {
      root.branch = TrigBranch::Trigonometric;
      shape = std::cos(std::acos(std::clamp(x, -1.0, 1.0)) / 3.0);
    } else {
      root.branch = TrigBranch::HyperbolicContinuation;
      shape = std::copysign(std::cosh(std::acosh(std::abs(x)) / 3.0), x);
    }
    root.value = -a / 3.0 + (2.0 / 3.0) * sq * shape;
  }

  const double residual = std::abs(c(root.value));
  if (!std::isfinite(root.value) || residual > kResidualTol * residual_scale(c, root.value)) {
    throw SolverError("cubic root residual " + std::to_string(residual) + " above tolerance");
  }
  return root;
}

}  // namespace otto
