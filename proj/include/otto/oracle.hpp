#pragma once

#include <array>
#include <functional>
#include <stdexcept>

namespace otto::oracle {

/// Raised when the oracle cannot produce an answer (no finite samples, no bracket).
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Search window and resolution for maximize(). Validated on use.
struct ScanSpec {
  double lo = 0.0;
  double hi = 1.0;
  int grid_points = 2048;
  double refine_tol = 1e-10;
};

struct Maximum {
  double argmax = 0.0;
  double value = 0.0;
};

using ScalarFn = std::function<double(double)>;

/// Coarse scan of grid_points equally spaced samples on [lo, hi] (endpoints
/// included), then golden-section refinement on the two cells around the best
/// sample until the bracket is narrower than refine_tol. Non-finite samples
/// are skipped; f is never evaluated outside [lo, hi].
Maximum maximize(const ScalarFn& f, const ScanSpec& spec);

/// Bisection to an interval of width <= tol. Requires f(lo) f(hi) <= 0.
double find_root(const ScalarFn& f, double lo, double hi, double tol = 1e-14);

struct DerivativeReport {
  std::array<double, 3> steps{1e-4, 1e-5, 1e-6};
  std::array<double, 3> estimates{};  // central differences, one per step
  double richardson = 0.0;            // extrapolated from the two largest steps
  double order = 0.0;                 // observed convergence order; NaN when differences vanish
  double second_difference = 0.0;     // f(x+h) - 2 f(x) + f(x-h) over h^2 at the largest step
  bool converged = true;              // false flags a non-convergent schedule
};

/// Central differences over the step schedule with Richardson extrapolation.
DerivativeReport derivative_check(const ScalarFn& f, double x,
                                  std::array<double, 3> steps = {1e-4, 1e-5, 1e-6});

}  // namespace otto::oracle
