#pragma once

#include <optional>

#include "otto/cycle.hpp"

namespace otto {

/// Reduced variables of the high-temperature model.
///   z      = omega_c / omega_h, in (0, 1]
///   tau    = beta_h / beta_c, in (0, 1)
///   v      velocity, in (0, 1)
///   beta_h energy scale, > 0
/// The constructor throws std::domain_error on violations.
class ReducedParams {
 public:
  ReducedParams(double z, double tau, double v, double beta_h = 1.0);

  double z() const { return z_; }
  double tau() const { return tau_; }
  double v() const { return v_; }
  double beta_h() const { return beta_h_; }

  /// tau * f_v, the only combination of (tau, v) the high-temperature model depends on.
  double tau_fv() const { return tau_fv_; }

 private:
  double z_;
  double tau_;
  double v_;
  double beta_h_;
  double tau_fv_;
};

// Sudden compression (compression stroke quenched, expansion quasistatic).
double qh_sc(const ReducedParams& r);
double work_sc(const ReducedParams& r);
double qc_sc(const ReducedParams& r);
std::optional<double> eta_sc(const ReducedParams& r);

// Sudden expansion (expansion stroke quenched, compression quasistatic).
double qh_se(const ReducedParams& r);
double work_se(const ReducedParams& r);
double qc_se(const ReducedParams& r);
std::optional<double> eta_se(const ReducedParams& r);

/// Heats, work and efficiency for either asymmetric scenario.
/// Throws std::invalid_argument for a symmetric scenario.
PerformanceRecord high_temperature_record(const ReducedParams& r, Scenario s);

/// 2 W - eta_max Q_h in the high-temperature model.
double omega_ht(const ReducedParams& r, Scenario s, double eta_max);

/// Smallest z at which the cycle still produces work (W = 0 root below z = 1):
///   SC: (tau f_v + sqrt(tau f_v (tau f_v + 8))) / 4
///   SE: (sqrt(1 + 8 tau f_v) - 1) / 2
double engine_lower_bound(Scenario s, double tau_fv);

}  // namespace otto
