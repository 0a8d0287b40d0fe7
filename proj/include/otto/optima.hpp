#pragma once

#include <optional>

#include "otto/cycle.hpp"
#include "otto/oracle.hpp"

namespace otto {

enum class Objective { MaxEfficiency, MaxOmega, MaxWork };
enum class OptimumSource { ClosedForm, OracleFallback };

/// An objective paired with one of the two asymmetric scenarios.
/// Throws std::invalid_argument for a symmetric scenario.
class OptimizationTarget {
 public:
  OptimizationTarget(Objective objective, Scenario scenario);

  Objective objective() const { return objective_; }
  Scenario scenario() const { return scenario_; }

 private:
  Objective objective_;
  Scenario scenario_;
};

struct OptimumReport {
  double z_star = 0.0;
  double value_at_opt = 0.0;  // efficiency, work (beta_h = 1) or Omega
  double eta_at_opt = 0.0;
  OptimumSource source = OptimumSource::ClosedForm;
  double oracle_z_star = 0.0;  // argmax found by the brute-force oracle
};

/// |closed form - oracle| accepted before a closed form is reported.
inline constexpr double kAgreementTol = 1e-6;

// Maximum efficiency. z* is the principal root of the stationarity cubic,
// reported only when it lies strictly inside the engine window.
std::optional<double> z_star_eta_sc(double tau, double v);
std::optional<double> eta_max_sc(double eta_c, double v);
std::optional<double> z_star_eta_se(double tau, double v);
std::optional<double> eta_max_se(double eta_c, double v);

// Maximum Omega = 2W - eta_max Q_h, with eta_max the scenario's maximum efficiency.
OptimumReport z_star_omega_sc(double tau, double v);
double eta_omega_sc(double eta_c, double v);
OptimumReport z_star_omega_se(double tau, double v);
double eta_omega_se(double eta_c, double v);

// Maximum work: both scenarios peak at z* = (tau f_v)^{1/3}.
std::optional<double> z_star_work(double tau, double v);
double eta_mw_sc(double eta_c, double v);
double eta_mw_se(double eta_c, double v);

/// sqrt(tau f_v), where the SC and SE work curves intersect.
double work_crossing_z(double tau, double v);

/// The closed-form Omega optimum as published, for the SC case with the given
/// x_c (printed as ln[1/(1+v)] + ln(1+v), i.e. zero). nullopt when the
/// expression is not real.
std::optional<double> printed_z_star_omega_sc(double tau, double v, double x_c);

/// The closed-form Omega optimum as published for the SE case; the acos in P is
/// continued to acosh when its argument exceeds 1.
std::optional<double> printed_z_star_omega_se(double tau, double v);

/// Argument of the acos defining P in the SE Omega formula.
double printed_omega_se_acos_argument(double tau, double v);

struct PrintedFormulaCheck {
  std::optional<double> printed;          // x_c = 0 for SC
  std::optional<double> printed_alt;      // x_c = x_a for SC; unused for SE
  double oracle = 0.0;
  bool agrees = false;
};

PrintedFormulaCheck check_printed_omega_sc(double tau, double v);
PrintedFormulaCheck check_printed_omega_se(double tau, double v);

/// Objective value at z, with beta_h = 1. Efficiency objectives yield -inf
/// outside Q_h > 0 so they never win a maximisation.
double objective_value(const OptimizationTarget& target, double z, double tau, double v);

/// Brute-force argmax of the objective over [engine lower bound, 1].
oracle::Maximum oracle_argmax(const OptimizationTarget& target, double tau, double v);

/// Closed-form optimum cross-checked against the oracle; falls back to the
/// oracle on disagreement. nullopt when no engine window exists.
std::optional<OptimumReport> optimize(const OptimizationTarget& target, double tau, double v);

}  // namespace otto
