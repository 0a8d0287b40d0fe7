#pragma once

#include <optional>

#include "otto/modes.hpp"

namespace otto {

enum class StrokeProtocol { Adiabatic, Sudden };

/// Protocol used for each of the two work strokes.
struct Scenario {
  StrokeProtocol compression = StrokeProtocol::Adiabatic;  // A -> B
  StrokeProtocol expansion = StrokeProtocol::Adiabatic;    // C -> D

  constexpr bool is_asymmetric() const { return compression != expansion; }
  friend constexpr bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr Scenario kSuddenCompression{StrokeProtocol::Sudden, StrokeProtocol::Adiabatic};
inline constexpr Scenario kSuddenExpansion{StrokeProtocol::Adiabatic, StrokeProtocol::Sudden};
inline constexpr Scenario kBothAdiabatic{StrokeProtocol::Adiabatic, StrokeProtocol::Adiabatic};
inline constexpr Scenario kBothSudden{StrokeProtocol::Sudden, StrokeProtocol::Sudden};

/// Physical parameters of one cycle (hbar = k_B = 1).
///
/// The constructor enforces 0 < v < 1, positive inverse temperatures and
/// frequencies, and omega_c <= omega_h; violations throw std::domain_error.
class CycleParams {
 public:
  CycleParams(double v, double beta_c, double beta_h, double omega_c, double omega_h);

  /// Builds parameters from the reduced set: omega_c = z * omega_h, beta_c = beta_h / tau.
  static CycleParams from_reduced(double z, double tau, double v, double beta_h, double omega_h);

  double v() const { return v_; }
  double beta_c() const { return beta_c_; }
  double beta_h() const { return beta_h_; }
  double omega_c() const { return omega_c_; }
  double omega_h() const { return omega_h_; }

  double z() const { return omega_c_ / omega_h_; }
  double tau() const { return beta_h_ / beta_c_; }

 private:
  double v_;
  double beta_c_;
  double beta_h_;
  double omega_c_;
  double omega_h_;
};

/// Mean oscillator energy at the four corners of the cycle.
struct EnergyBook {
  double h_a = 0.0;
  double h_b = 0.0;
  double h_c = 0.0;
  double h_d = 0.0;
};

/// Heats, work and derived figures of merit for one parameter point.
///
/// Sign convention: heat absorbed by the working medium is positive, so the
/// first law reads w_ext = q_h + q_c.
struct PerformanceRecord {
  double q_h = 0.0;
  double q_c = 0.0;
  double w_ext = 0.0;
  std::optional<double> eta;          // only when q_h > 0
  std::optional<double> omega_value;  // set once an eta_max is supplied
  std::optional<OperationalMode> mode;
};

/// Relativistic reduction factor f_v = sqrt(1 - v^2) ln[(1+v)/(1-v)] / (2v).
/// Defined on [0, 1) with f_0 = 1; throws std::domain_error elsewhere.
double relativistic_factor(double v);

/// x_a = ln[(1+v)/(1-v)], evaluated without cancellation for small v.
double rapidity_log(double v);

/// Adiabaticity parameter: 1 for a quasistatic stroke, (z^2 + 1) / (2z) for a quench.
double adiabaticity(StrokeProtocol protocol, double z);

/// ln sinh(x) for x > 0 without overflow.
double log_sinh(double x);

/// Corner energies, evaluated without the high-temperature approximation.
EnergyBook corner_energies(const CycleParams& p, Scenario s);

/// Q_h = H_C - H_B, Q_c = H_A - H_D, W = Q_h + Q_c, and eta where defined.
PerformanceRecord heats_and_work(const EnergyBook& book);
PerformanceRecord heats_and_work(const CycleParams& p, Scenario s);

/// W / Q_h, or nullopt when Q_h <= 0 (the cycle does not absorb heat from the hot bath).
std::optional<double> efficiency(const PerformanceRecord& record);

/// Omega = 2 W - eta_max Q_h. eta_max must lie in (0, 1].
double omega_function(const PerformanceRecord& record, double eta_max);

}  // namespace otto
