#pragma once

#include <string_view>

namespace otto {

/// Thermodynamic operating mode of one cycle, from the signs of (W, Q_h, Q_c).
enum class OperationalMode { Engine, Refrigerator, Heater, ThermalAccelerator, Boundary };

/// Default half-width of the Boundary band (energy units with beta_h = 1).
inline constexpr double kBoundaryEps = 1e-9;

/// Applies the sign table:
///   Engine             W >= 0, Q_h >= 0, Q_c <= 0
///   Refrigerator       W <= 0, Q_h <= 0, Q_c >= 0
///   Heater             W <= 0, Q_h <= 0, Q_c <= 0
///   ThermalAccelerator W <= 0, Q_h >= 0, Q_c <= 0
/// Any quantity with |x| < eps makes the point a Boundary.
OperationalMode classify_signs(double w_ext, double q_h, double q_c, double eps = kBoundaryEps);

std::string_view to_string(OperationalMode mode);

}  // namespace otto
