#include "otto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace otto::oracle {

Maximum maximize(const ScalarFn& f, const ScanSpec& spec) {
  if (!(spec.lo < spec.hi) || spec.grid_points < 16 || !(spec.refine_tol > 0.0)) {
    throw std::invalid_argument("invalid ScanSpec");
  }
  const int n = spec.grid_points;
  const double step = (spec.hi - spec.lo) / (n - 1);
  auto node = [&](int i) { return i == n - 1 ? spec.hi : spec.lo + step * i; };

  int best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double value = f(node(i));
    if (std::isfinite(value) && (best < 0 || value > best_value)) {
      best = i;
      best_value = value;
    }
  }
  if (best < 0) {
    throw OracleError("maximize: no finite sample on the search window");
  }

  auto sample = [&](double x) {
    const double value = f(x);
    return std::isfinite(value) ? value : -std::numeric_limits<double>::infinity();
  };

  double a = node(std::max(best - 1, 0));
  double b = node(std::min(best + 1, n - 1));
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = sample(c);
  double fd = sample(d);
  while (b - a > spec.refine_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = sample(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = sample(d);
    }
    if (!(c < d)) {
      break;
    }
  }

  Maximum result{0.5 * (a + b), 0.0};
  result.value = sample(result.argmax);
  // The grid node can beat the refined point when the maximum sits on an endpoint.
  if (best_value > result.value) {
    result = {node(best), best_value};
  }
  return result;
}

double find_root(const ScalarFn& f, double lo, double hi, double tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) {
    return lo;
  }
  if (f_hi == 0.0) {
    return hi;
  }
  if (!(f_lo * f_hi < 0.0)) {
    throw OracleError("find_root: no sign change on the bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DerivativeReport derivative_check(const ScalarFn& f, double x, std::array<double, 3> steps) {
  DerivativeReport report;
  report.steps = steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double h = steps[i];
    report.estimates[i] = (f(x + h) - f(x - h)) / (2.0 * h);
  }
  const double h0 = steps[0];
  report.second_difference = (f(x + h0) - 2.0 * f(x) + f(x - h0)) / (h0 * h0);

  // Central differences have O(h^2) truncation error.
  const double r = steps[0] / steps[1];
  report.richardson = (r * r * report.estimates[1] - report.estimates[0]) / (r * r - 1.0);

  const double d01 = std::abs(report.estimates[0] - report.estimates[1]);
  const double d12 = std::abs(report.estimates[1] - report.estimates[2]);
  const double floor = 1e-12 * std::max(1.0, std::abs(report.estimates[1]));
  if (d01 <= floor && d12 <= floor) {
    report.order = std::numeric_limits<double>::quiet_NaN();
    report.converged = true;
  } else {
    report.order = std::log(d01 / d12) / std::log(steps[1] / steps[2]);
    // Round-off at the smallest step may spoil the order; the estimates must still settle.
    report.converged = d12 <= d01 || d12 <= 1e-6 * std::max(1.0, std::abs(report.estimates[1]));
  }
  return report;
}

}  // namespace otto::oracle
