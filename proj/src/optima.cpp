#include "otto/optima.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "otto/cubic.hpp"
#include "otto/high_temperature.hpp"

namespace otto {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_unit_open(double x, const char* what) {
  if (!(std::isfinite(x) && x > 0.0 && x < 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in (0,1)");
  }
}

// Quantities shared by the closed forms: x_a, sqrt(1 - v^2), f_v.
struct Kinematics {
  double v;
  double xa;
  double root;  // sqrt(1 - v^2)
  double fv;

  explicit Kinematics(double velocity)
      : v(velocity),
        xa(rapidity_log(velocity)),
        root(std::sqrt((1.0 - velocity) * (1.0 + velocity))),
        fv(relativistic_factor(velocity)) {}
};

bool inside_window(double z, Scenario s, double tau_fv) {
  return std::isfinite(z) && z > engine_lower_bound(s, tau_fv) && z < 1.0;
}

// Stationarity cubic of the SC efficiency in monic form:
//   z^3 + 3 tau x_a s / (tau x_a s - 4v) z + (v^2 - 1) tau^2 x_a^2 / (tau v x_a s - 4 v^2) = 0
MonicCubic sc_efficiency_cubic(double tau, const Kinematics& k) {
  const double xb = tau * k.xa * k.root;
  return MonicCubic{0.0, 3.0 * xb / (xb - 4.0 * k.v),
                    (k.v * k.v - 1.0) * tau * tau * k.xa * k.xa / (k.v * xb - 4.0 * k.v * k.v)};
}

// Stationarity cubic of the SE efficiency in monic form:
//   z^3 - 3 tau x_a s / (4v) z^2 - tau x_a [v s + tau x_a (v^2 - 1)] / (4 v^2) = 0
MonicCubic se_efficiency_cubic(double tau, const Kinematics& k) {
  const double xb = tau * k.xa * k.root;
  return MonicCubic{-3.0 * xb / (4.0 * k.v), 0.0,
                    -tau * k.xa * (k.v * k.root + tau * k.xa * (k.v * k.v - 1.0)) /
                        (4.0 * k.v * k.v)};
}

double signed_cbrt_ratio(double num, double den) { return std::cbrt(num) / std::cbrt(den); }

}  // namespace

OptimizationTarget::OptimizationTarget(Objective objective, Scenario scenario)
    : objective_(objective), scenario_(scenario) {
  if (scenario != kSuddenCompression && scenario != kSuddenExpansion) {
    throw std::invalid_argument("optimisation targets require sudden compression or expansion");
  }
}

std::optional<double> z_star_eta_sc(double tau, double v) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const Kinematics k(v);
  const double z = principal_trig_root(sc_efficiency_cubic(tau, k)).value;
  if (!inside_window(z, kSuddenCompression, tau * k.fv)) {
    return std::nullopt;
  }
  return z;
}

std::optional<double> eta_max_sc(double eta_c, double v) {
  require_unit_open(eta_c, "Carnot efficiency eta_c");
  const double tau = 1.0 - eta_c;
  const auto f = z_star_eta_sc(tau, v);
  if (!f) {
    return std::nullopt;
  }
  const double fv = relativistic_factor(v);
  const double F = *f;
  return (F - 1.0) * (tau * (F + 1.0) * fv - 2.0 * F * F) / (2.0 * F * F - tau * (F * F + 1.0) * fv);
}

std::optional<double> z_star_eta_se(double tau, double v) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const Kinematics k(v);
  const double z = principal_trig_root(se_efficiency_cubic(tau, k)).value;
  if (!inside_window(z, kSuddenExpansion, tau * k.fv)) {
    return std::nullopt;
  }
  return z;
}

std::optional<double> eta_max_se(double eta_c, double v) {
  require_unit_open(eta_c, "Carnot efficiency eta_c");
  const double tau = 1.0 - eta_c;
  const auto n = z_star_eta_se(tau, v);
  if (!n) {
    return std::nullopt;
  }
  const double fv = relativistic_factor(v);
  const double N = *n;
  return (1.0 - N) * (N * (1.0 + N) - 2.0 * tau * fv) / (2.0 * (N - tau * fv));
}

OptimumReport z_star_omega_sc(double tau, double v) {
  // An engine window always exists for tau < 1, so optimize() cannot return nullopt here.
  return optimize(OptimizationTarget(Objective::MaxOmega, kSuddenCompression), tau, v).value();
}

double eta_omega_sc(double eta_c, double v) {
  require_unit_open(eta_c, "Carnot efficiency eta_c");
  const double tau = 1.0 - eta_c;
  const double J = z_star_omega_sc(tau, v).z_star;
  const double fv = relativistic_factor(v);
  return (1.0 - J) * (tau * (1.0 + J) * fv - 2.0 * J * J) / (tau * (1.0 + J * J) * fv - 2.0 * J * J);
}

OptimumReport z_star_omega_se(double tau, double v) {
  return optimize(OptimizationTarget(Objective::MaxOmega, kSuddenExpansion), tau, v).value();
}

double eta_omega_se(double eta_c, double v) {
  require_unit_open(eta_c, "Carnot efficiency eta_c");
  const double tau = 1.0 - eta_c;
  const double R = z_star_omega_se(tau, v).z_star;
  const double fv = relativistic_factor(v);
  return (1.0 - R) * (2.0 * tau * fv - R * (R + 1.0)) / (2.0 * (tau * fv - R));
}

std::optional<double> z_star_work(double tau, double v) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const double a = tau * relativistic_factor(v);
  if (!(a < 1.0)) {
    return std::nullopt;
  }
  return std::cbrt(a);
}

double eta_mw_sc(double eta_c, double v) {
  require_unit_open(eta_c, "Carnot efficiency eta_c");
  require_unit_open(v, "velocity v");
  const Kinematics k(v);
  const double tau = 1.0 - eta_c;
  const double M = k.xa * k.root;
  const double K = std::pow(2.0, 7.0 / 3.0) * v * std::pow(tau, 2.0 / 3.0);
  const double L = 2.0 * (eta_c - 1.0) * std::cbrt(v * v * M);
  const double tail = M * std::cbrt(2.0 * std::pow(tau, 5.0));
  return (K + 3.0 * L + tail) / (K + L - tail);
}

double eta_mw_se(double eta_c, double v) {
  require_unit_open(eta_c, "Carnot efficiency eta_c");
  require_unit_open(v, "velocity v");
  const Kinematics k(v);
  const double tau = 1.0 - eta_c;
  const double X = v * std::cbrt(4.0 * tau);
  const double Y = (eta_c - 1.0) * std::cbrt(v * k.xa * k.xa * k.root * k.root);
  const double tail = k.xa * k.root * std::cbrt(4.0 * std::pow(tau, 4.0));
  return (X + 3.0 * Y + tail) / (2.0 * (X + Y));
}

double work_crossing_z(double tau, double v) {
  require_unit_open(tau, "tau");
  return std::sqrt(tau * relativistic_factor(v));
}

std::optional<double> printed_z_star_omega_sc(double tau, double v, double x_c) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const Kinematics k(v);
  const double s = k.root;
  const double xa = k.xa;
  const double xb = tau * xa * s;
  const double G = -xb / (2.0 * v * std::sqrt(xb / (4.0 * v - xb)));
  if (!(std::abs(G) <= 1.0)) {
    return std::nullopt;
  }
  const double theta = std::acos(G);
  const double c1 = std::cos(theta / 3.0);
  const double c2 = std::cos(2.0 * theta / 3.0);
  const double one_m_v2 = 1.0 - v * v;

  const double num =
      tau * xa *
      (2.0 * c2 * (tau * x_c * one_m_v2 * (16.0 * v - 3.0 * tau * x_c * s) - 16.0 * v * v * s) -
       24.0 * v * G * c1 * (4.0 * v * s + tau * xa * (v * v - 1.0)) - 16.0 * v * v * s +
       tau * x_c * one_m_v2 * (40.0 * v - 9.0 * tau * x_c * s));
  const double den = 4.0 * v * (1.0 + 2.0 * c2) *
                     (tau * xa * (tau * xa * (v * v - 1.0) + 8.0 * v * s) - 16.0 * v * v);
  const double z = signed_cbrt_ratio(num, den);
  return std::isfinite(z) ? std::optional<double>(z) : std::nullopt;
}

double printed_omega_se_acos_argument(double tau, double v) {
  require_unit_open(tau, "tau");
  const Kinematics k(v);
  const double xb = tau * k.xa * k.root;
  return 1.0 - 8.0 * v * (v - xb) / (tau * tau * k.xa * k.xa * (v * v - 1.0));
}

std::optional<double> printed_z_star_omega_se(double tau, double v) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const Kinematics k(v);
  const double s = k.root;
  const double xa = k.xa;
  const double arg = printed_omega_se_acos_argument(tau, v);

  double c1 = 0.0;
  double c2 = 0.0;
  if (std::abs(arg) <= 1.0 + kClampEps) {
    const double P = std::acos(std::clamp(arg, -1.0, 1.0));
    c1 = std::cos(P / 3.0);
    c2 = std::cos(2.0 * P / 3.0);
  } else if (arg > 1.0) {
    const double t = std::acosh(arg);
    c1 = std::cosh(t / 3.0);
    c2 = std::cosh(2.0 * t / 3.0);
  } else {
    return std::nullopt;
  }

  const double vm = v * v - 1.0;
  const double num =
      tau * xa * s *
      (xa * (3.0 * xa * tau * tau * vm * (2.0 * c2 + 3.0) - 32.0 * tau * v * s) +
       4.0 * (tau * xa * (3.0 * tau * xa * vm + 8.0 * v * s) - 24.0 * v * v) * c1);
  const double den_cube = 2.0 * (1.0 - 2.0 * c1);
  const double z = std::cbrt(num) / (4.0 * v * std::cbrt(den_cube));
  return std::isfinite(z) ? std::optional<double>(z) : std::nullopt;
}

namespace {

bool agrees_with(const std::optional<double>& z, double oracle_z) {
  return z && *z > 0.0 && *z < 1.0 && std::abs(*z - oracle_z) <= kAgreementTol;
}

}  // namespace

PrintedFormulaCheck check_printed_omega_sc(double tau, double v) {
  PrintedFormulaCheck check;
  check.printed = printed_z_star_omega_sc(tau, v, 0.0);
  check.printed_alt = printed_z_star_omega_sc(tau, v, rapidity_log(v));
  check.oracle =
      oracle_argmax(OptimizationTarget(Objective::MaxOmega, kSuddenCompression), tau, v).argmax;
  check.agrees = agrees_with(check.printed, check.oracle) || agrees_with(check.printed_alt, check.oracle);
  return check;
}

PrintedFormulaCheck check_printed_omega_se(double tau, double v) {
  PrintedFormulaCheck check;
  check.printed = printed_z_star_omega_se(tau, v);
  check.oracle =
      oracle_argmax(OptimizationTarget(Objective::MaxOmega, kSuddenExpansion), tau, v).argmax;
  check.agrees = agrees_with(check.printed, check.oracle);
  return check;
}

namespace {

// eta_max entering Omega, evaluated once per (tau, v).
double omega_eta_max(Scenario s, double tau, double v) {
  const auto eta = s == kSuddenCompression ? eta_max_sc(1.0 - tau, v) : eta_max_se(1.0 - tau, v);
  if (!eta) {
    throw std::domain_error("maximum efficiency undefined; Omega has no reference");
  }
  return *eta;
}

double evaluate(const OptimizationTarget& target, double z, double tau, double v,
                double eta_max) {
  if (!(z > 0.0 && z <= 1.0)) {
    return kNegInf;
  }
  const ReducedParams r(z, tau, v);
  const Scenario s = target.scenario();
  switch (target.objective()) {
    case Objective::MaxEfficiency: {
      const auto eta = s == kSuddenCompression ? eta_sc(r) : eta_se(r);
      return eta ? *eta : kNegInf;
    }
    case Objective::MaxWork:
      return s == kSuddenCompression ? work_sc(r) : work_se(r);
    case Objective::MaxOmega:
      return omega_ht(r, s, eta_max);
  }
  return kNegInf;
}

double eta_for(const OptimizationTarget& target, double z, double tau, double v) {
  const ReducedParams r(z, tau, v);
  const auto eta = target.scenario() == kSuddenCompression ? eta_sc(r) : eta_se(r);
  return eta.value_or(std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

double objective_value(const OptimizationTarget& target, double z, double tau, double v) {
  const double eta_max = target.objective() == Objective::MaxOmega
                             ? omega_eta_max(target.scenario(), tau, v)
                             : 0.0;
  return evaluate(target, z, tau, v, eta_max);
}

oracle::Maximum oracle_argmax(const OptimizationTarget& target, double tau, double v) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const double a = tau * relativistic_factor(v);
  const double eta_max = target.objective() == Objective::MaxOmega
                             ? omega_eta_max(target.scenario(), tau, v)
                             : 0.0;
  oracle::ScanSpec spec;
  spec.lo = engine_lower_bound(target.scenario(), a);
  spec.hi = 1.0;
  return oracle::maximize([&](double z) { return evaluate(target, z, tau, v, eta_max); }, spec);
}

std::optional<OptimumReport> optimize(const OptimizationTarget& target, double tau, double v) {
  require_unit_open(tau, "tau");
  require_unit_open(v, "velocity v");
  const double a = tau * relativistic_factor(v);
  if (!(engine_lower_bound(target.scenario(), a) < 1.0)) {
    return std::nullopt;
  }
  const bool sc = target.scenario() == kSuddenCompression;
  const oracle::Maximum found = oracle_argmax(target, tau, v);

  std::optional<double> closed;
  switch (target.objective()) {
    case Objective::MaxEfficiency:
      closed = sc ? z_star_eta_sc(tau, v) : z_star_eta_se(tau, v);
      break;
    case Objective::MaxWork:
      closed = z_star_work(tau, v);
      break;
    case Objective::MaxOmega:
      if (sc) {
        closed = printed_z_star_omega_sc(tau, v, 0.0);
        if (!agrees_with(closed, found.argmax)) {
          closed = printed_z_star_omega_sc(tau, v, rapidity_log(v));
        }
      } else {
        closed = printed_z_star_omega_se(tau, v);
      }
      break;
  }

  OptimumReport report;
  report.oracle_z_star = found.argmax;
  if (closed && std::abs(*closed - found.argmax) <= kAgreementTol) {
    report.z_star = *closed;
    report.source = OptimumSource::ClosedForm;
  } else {
    report.z_star = found.argmax;
    report.source = OptimumSource::OracleFallback;
  }
  if (!(report.z_star > 0.0 && report.z_star < 1.0)) {
    return std::nullopt;
  }
  report.value_at_opt = objective_value(target, report.z_star, tau, v);
  report.eta_at_opt = eta_for(target, report.z_star, tau, v);
  return report;
}

}  // namespace otto
