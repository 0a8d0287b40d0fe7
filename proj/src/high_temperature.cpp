#include "otto/high_temperature.hpp"

#include <cmath>
#include <stdexcept>

namespace otto {

ReducedParams::ReducedParams(double z, double tau, double v, double beta_h)
    : z_(z), tau_(tau), v_(v), beta_h_(beta_h) {
  if (!(std::isfinite(z) && z > 0.0 && z <= 1.0)) {
    throw std::domain_error("frequency ratio z must lie in (0,1]");
  }
  if (!(std::isfinite(tau) && tau > 0.0 && tau < 1.0)) {
    throw std::domain_error("temperature ratio tau must lie in (0,1)");
  }
  if (!(std::isfinite(v) && v > 0.0 && v < 1.0)) {
    throw std::domain_error("velocity v must lie in (0,1)");
  }
  if (!(std::isfinite(beta_h) && beta_h > 0.0)) {
    throw std::domain_error("beta_h must be positive");
  }
  tau_fv_ = tau * relativistic_factor(v);
}

double qh_sc(const ReducedParams& r) {
  const double z = r.z();
  const double a = r.tau_fv();
  return (2.0 * z * z - a * (z * z + 1.0)) / (2.0 * z * z * r.beta_h());
}

double work_sc(const ReducedParams& r) {
  const double z = r.z();
  const double a = r.tau_fv();
  return (1.0 - z) * (2.0 * z * z - a * (1.0 + z)) / (2.0 * z * z * r.beta_h());
}

double qc_sc(const ReducedParams& r) { return (r.tau_fv() - r.z()) / r.beta_h(); }

std::optional<double> eta_sc(const ReducedParams& r) {
  const double z = r.z();
  const double a = r.tau_fv();
  const double heat = 2.0 * z * z - a * (z * z + 1.0);
  if (!(heat > 0.0)) {
    return std::nullopt;
  }
  return (1.0 - z) * (2.0 * z * z - a * (1.0 + z)) / heat;
}

double qh_se(const ReducedParams& r) {
  return (r.z() - r.tau_fv()) / (r.z() * r.beta_h());
}

double work_se(const ReducedParams& r) {
  const double z = r.z();
  const double a = r.tau_fv();
  return (1.0 - z) * (z * (1.0 + z) - 2.0 * a) / (2.0 * z * r.beta_h());
}

double qc_se(const ReducedParams& r) {
  const double z = r.z();
  return (r.tau_fv() - 0.5 * (1.0 + z * z)) / r.beta_h();
}

std::optional<double> eta_se(const ReducedParams& r) {
  const double z = r.z();
  const double a = r.tau_fv();
  if (!(z - a > 0.0)) {
    return std::nullopt;
  }
  return (1.0 - z) * (z * (1.0 + z) - 2.0 * a) / (2.0 * (z - a));
}

PerformanceRecord high_temperature_record(const ReducedParams& r, Scenario s) {
  PerformanceRecord record;
  if (s == kSuddenCompression) {
    record.q_h = qh_sc(r);
    record.q_c = qc_sc(r);
    record.w_ext = work_sc(r);
    record.eta = eta_sc(r);
  } else if (s == kSuddenExpansion) {
    record.q_h = qh_se(r);
    record.q_c = qc_se(r);
    record.w_ext = work_se(r);
    record.eta = eta_se(r);
  } else {
    throw std::invalid_argument("high-temperature closed forms exist only for SC and SE");
  }
  return record;
}

double omega_ht(const ReducedParams& r, Scenario s, double eta_max) {
  if (s == kSuddenCompression) {
    return 2.0 * work_sc(r) - eta_max * qh_sc(r);
  }
  if (s == kSuddenExpansion) {
    return 2.0 * work_se(r) - eta_max * qh_se(r);
  }
  throw std::invalid_argument("high-temperature closed forms exist only for SC and SE");
}

double engine_lower_bound(Scenario s, double tau_fv) {
  if (s == kSuddenCompression) {
    return 0.25 * (tau_fv + std::sqrt(tau_fv * (tau_fv + 8.0)));
  }
  if (s == kSuddenExpansion) {
    // (sqrt(1 + 8a) - 1) / 2, rationalised to avoid cancellation at small a.
    return 4.0 * tau_fv / (std::sqrt(1.0 + 8.0 * tau_fv) + 1.0);
  }
  throw std::invalid_argument("engine window is defined only for SC and SE");
}

}  // namespace otto
