#include "otto/phase_diagram.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace otto {

namespace {

void require_asymmetric(Scenario s) {
  if (s != kSuddenCompression && s != kSuddenExpansion) {
    throw std::invalid_argument("phase diagrams are defined for sudden compression or expansion");
  }
}

}  // namespace

OperationalMode classify_by_signs(const ReducedParams& r, Scenario s, double eps) {
  const PerformanceRecord record = high_temperature_record(r, s);
  return classify_signs(record.w_ext, record.q_h, record.q_c, eps);
}

std::vector<BoundaryCurve> boundary_curves(Scenario s, double v) {
  require_asymmetric(s);
  const double fv = relativistic_factor(v);
  std::vector<BoundaryCurve> curves;
  if (s == kSuddenCompression) {
    curves.push_back({"refrigerator", [fv](double tau) -> std::optional<double> {
                        return tau * fv;
                      }});
    curves.push_back({"heater", [fv](double tau) -> std::optional<double> {
                        const double a = tau * fv;
                        if (!(a < 2.0)) {
                          throw std::domain_error("heater bound requires tau f_v < 2");
                        }
                        return std::sqrt(a / (2.0 - a));
                      }});
  } else {
    curves.push_back({"refrigerator", [fv](double tau) -> std::optional<double> {
                        const double z2 = 2.0 * tau * fv - 1.0;
                        if (!(z2 > 0.0)) {
                          return std::nullopt;
                        }
                        return std::sqrt(z2);
                      }});
    curves.push_back({"heater", [fv](double tau) -> std::optional<double> {
                        return tau * fv;
                      }});
  }
  curves.push_back({"engine", [fv, s](double tau) -> std::optional<double> {
                      return engine_lower_bound(s, tau * fv);
                    }});
  return curves;
}

OperationalMode classify_by_curves(double z, double tau, Scenario s, double v, double eps) {
  const auto curves = boundary_curves(s, v);
  // Regions in order of increasing z.
  constexpr std::array<OperationalMode, 4> kOrder = {
      OperationalMode::Refrigerator, OperationalMode::Heater, OperationalMode::ThermalAccelerator,
      OperationalMode::Engine};

  std::size_t region = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto edge = curves[i].z_of_tau(tau);
    if (!edge) {
      // Region i is empty: z is already above it.
      region = i + 1;
      continue;
    }
    if (std::abs(z - *edge) < eps) {
      return OperationalMode::Boundary;
    }
    if (z > *edge) {
      region = i + 1;
    }
  }
  return kOrder[region];
}

PhaseMap::PhaseMap(double v, Scenario scenario, std::vector<double> z_axis,
                   std::vector<double> tau_axis, std::vector<OperationalMode> cells)
    : v_(v),
      scenario_(scenario),
      z_axis_(std::move(z_axis)),
      tau_axis_(std::move(tau_axis)),
      cells_(std::move(cells)) {
  if (cells_.size() != z_axis_.size() * tau_axis_.size()) {
    throw std::invalid_argument("PhaseMap cell count must equal |z_axis| x |tau_axis|");
  }
}

OperationalMode PhaseMap::at(std::size_t iz, std::size_t itau) const {
  return cells_.at(iz * tau_axis_.size() + itau);
}

std::array<double, 5> PhaseMap::mode_fractions() const {
  std::array<double, 5> fractions{};
  for (const OperationalMode mode : cells_) {
    fractions[static_cast<std::size_t>(mode)] += 1.0;
  }
  for (double& f : fractions) {
    f /= static_cast<double>(cells_.size());
  }
  return fractions;
}

std::vector<double> cell_centres(std::size_t n) {
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i) {
    axis[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  }
  return axis;
}

PhaseMap rasterize(Scenario s, double v, std::size_t nz, std::size_t ntau, double eps) {
  require_asymmetric(s);
  if (nz < 2 || ntau < 2) {
    throw std::invalid_argument("rasterize needs at least 2 points per axis");
  }
  auto z_axis = cell_centres(nz);
  auto tau_axis = cell_centres(ntau);
  std::vector<OperationalMode> cells;
  cells.reserve(nz * ntau);
  for (const double z : z_axis) {
    for (const double tau : tau_axis) {
      cells.push_back(classify_by_signs(ReducedParams(z, tau, v), s, eps));
    }
  }
  return PhaseMap(v, s, std::move(z_axis), std::move(tau_axis), std::move(cells));
}

}  // namespace otto
