#include "otto/modes.hpp"

#include <cmath>

namespace otto {

OperationalMode classify_signs(double w_ext, double q_h, double q_c, double eps) {
  if (std::abs(w_ext) < eps || std::abs(q_h) < eps || std::abs(q_c) < eps) {
    return OperationalMode::Boundary;
  }
  if (w_ext > 0.0) {
    // W > 0 with Q_h < 0 or Q_c > 0 has no entry in the table; such triples do not
    // occur in this model and are reported as Boundary.
    return (q_h > 0.0 && q_c < 0.0) ? OperationalMode::Engine : OperationalMode::Boundary;
  }
  if (q_h < 0.0) {
    return q_c > 0.0 ? OperationalMode::Refrigerator : OperationalMode::Heater;
  }
  // W < 0, Q_h > 0.
  return q_c < 0.0 ? OperationalMode::ThermalAccelerator : OperationalMode::Boundary;
}

std::string_view to_string(OperationalMode mode) {
  switch (mode) {
    case OperationalMode::Engine: return "engine";
    case OperationalMode::Refrigerator: return "refrigerator";
    case OperationalMode::Heater: return "heater";
    case OperationalMode::ThermalAccelerator: return "thermal-accelerator";
    case OperationalMode::Boundary: return "boundary";
  }
  return "boundary";
}

}  // namespace otto
