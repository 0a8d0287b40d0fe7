#include "otto/cycle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace otto {

namespace {

// Below this velocity the closed form of f_v is replaced by its Taylor series.
constexpr double kSeriesThreshold = 1e-4;

void require(bool ok, const char* what) {
  if (!ok) {
    throw std::domain_error(what);
  }
}

}  // namespace

CycleParams::CycleParams(double v, double beta_c, double beta_h, double omega_c, double omega_h)
    : v_(v), beta_c_(beta_c), beta_h_(beta_h), omega_c_(omega_c), omega_h_(omega_h) {
  require(std::isfinite(v) && v > 0.0 && v < 1.0, "velocity v must lie in (0,1)");
  require(std::isfinite(beta_c) && beta_c > 0.0, "beta_c must be positive");
  require(std::isfinite(beta_h) && beta_h > 0.0, "beta_h must be positive");
  require(std::isfinite(omega_c) && omega_c > 0.0, "omega_c must be positive");
  require(std::isfinite(omega_h) && omega_h > 0.0, "omega_h must be positive");
  require(omega_c <= omega_h, "omega_c must not exceed omega_h");
}

CycleParams CycleParams::from_reduced(double z, double tau, double v, double beta_h,
                                      double omega_h) {
  require(std::isfinite(z) && z > 0.0 && z <= 1.0, "frequency ratio z must lie in (0,1]");
  require(std::isfinite(tau) && tau > 0.0, "tau must be positive");
  return CycleParams(v, beta_h / tau, beta_h, z * omega_h, omega_h);
}

double rapidity_log(double v) {
  require(std::isfinite(v) && v >= 0.0 && v < 1.0, "velocity v must lie in [0,1)");
  return 2.0 * std::atanh(v);
}

double relativistic_factor(double v) {
  require(std::isfinite(v) && v >= 0.0 && v < 1.0, "velocity v must lie in [0,1)");
  if (v < kSeriesThreshold) {
    // sqrt(1-v^2) * artanh(v)/v = 1 - v^2/6 - 11 v^4/120 + O(v^6)
    const double v2 = v * v;
    return 1.0 - v2 / 6.0 - 11.0 * v2 * v2 / 120.0;
  }
  return std::sqrt((1.0 - v) * (1.0 + v)) * std::atanh(v) / v;
}

double adiabaticity(StrokeProtocol protocol, double z) {
  require(std::isfinite(z) && z > 0.0, "frequency ratio z must be positive");
  if (protocol == StrokeProtocol::Adiabatic) {
    return 1.0;
  }
  return (z * z + 1.0) / (2.0 * z);
}

double log_sinh(double x) {
  require(x > 0.0, "log_sinh requires x > 0");
  // sinh x = e^x (1 - e^{-2x}) / 2
  return x - std::numbers::ln2 + std::log(-std::expm1(-2.0 * x));
}

namespace {

// ln[ sinh(x_+) / sinh(x_-) ] with x_+- = (beta_c omega_c / 2) sqrt((1 +- v)/(1 -+ v)).
double log_sinh_ratio(double half_x, double v) {
  const double doppler = std::sqrt((1.0 + v) / (1.0 - v));
  const double x_plus = half_x * doppler;
  const double x_minus = half_x / doppler;
  // x_+ - x_- = beta_c omega_c v / sqrt(1 - v^2), kept exact for small v.
  const double gap = 2.0 * half_x * v / std::sqrt((1.0 - v) * (1.0 + v));
  return gap + std::log(std::expm1(-2.0 * x_plus) / std::expm1(-2.0 * x_minus));
}

double half_coth(double omega, double beta) {
  // (omega/2) coth(beta omega / 2), written with expm1 to stay accurate when beta omega -> 0.
  const double x = beta * omega;
  return 0.5 * omega * (1.0 + 2.0 / std::expm1(x));
}

}  // namespace

EnergyBook corner_energies(const CycleParams& p, Scenario s) {
  const double v = p.v();
  const double z = p.z();
  const double ratio = log_sinh_ratio(0.5 * p.beta_c() * p.omega_c(), v);
  const double prefactor = std::sqrt((1.0 - v) * (1.0 + v)) / (2.0 * p.beta_c() * v);
  const double thermal_hot = half_coth(p.omega_h(), p.beta_h());

  EnergyBook book;
  book.h_a = prefactor * ratio;
  book.h_b = (p.omega_h() / p.omega_c()) * adiabaticity(s.compression, z) * book.h_a;
  book.h_c = thermal_hot;
  book.h_d = z * adiabaticity(s.expansion, z) * thermal_hot;
  return book;
}

PerformanceRecord heats_and_work(const EnergyBook& book) {
  PerformanceRecord record;
  record.q_h = book.h_c - book.h_b;
  record.q_c = book.h_a - book.h_d;
  record.w_ext = record.q_h + record.q_c;
  record.eta = efficiency(record);
  return record;
}

PerformanceRecord heats_and_work(const CycleParams& p, Scenario s) {
  return heats_and_work(corner_energies(p, s));
}

std::optional<double> efficiency(const PerformanceRecord& record) {
  if (!(record.q_h > 0.0)) {
    return std::nullopt;
  }
  return record.w_ext / record.q_h;
}

double omega_function(const PerformanceRecord& record, double eta_max) {
  require(eta_max > 0.0 && eta_max <= 1.0, "eta_max must lie in (0,1]");
  return 2.0 * record.w_ext - eta_max * record.q_h;
}

}  // namespace otto
