#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otto/cycle.hpp"
#include "otto/high_temperature.hpp"
#include "otto/modes.hpp"

namespace otto {

/// Mode from the signs of the high-temperature (W, Q_h, Q_c) at one point.
OperationalMode classify_by_signs(const ReducedParams& r, Scenario s, double eps = kBoundaryEps);

/// A closed-form mode boundary z(tau) at fixed v. nullopt where the curve does not exist.
struct BoundaryCurve {
  std::string name;
  std::function<std::optional<double>(double tau)> z_of_tau;
};

/// Tabulated mode boundaries, ordered from small to large z:
///   SC: refrigerator  z = tau f_v
///       heater        z = sqrt(tau f_v / (2 - tau f_v))
///       engine        z = (tau f_v + sqrt(tau f_v (tau f_v + 8))) / 4
///   SE: refrigerator  z = sqrt(2 tau f_v - 1)   (only when tau f_v > 1/2)
///       heater        z = tau f_v
///       engine        z = (sqrt(1 + 8 tau f_v) - 1) / 2
/// Each curve is the upper edge of the named region; the engine curve is its lower edge.
std::vector<BoundaryCurve> boundary_curves(Scenario s, double v);

/// Mode from curve membership. Points within eps (in z) of any curve are Boundary.
OperationalMode classify_by_curves(double z, double tau, Scenario s, double v,
                                   double eps = kBoundaryEps);

/// Uniform cell-centred raster of modes over (0,1) x (0,1).
class PhaseMap {
 public:
  PhaseMap(double v, Scenario scenario, std::vector<double> z_axis, std::vector<double> tau_axis,
           std::vector<OperationalMode> cells);

  double v() const { return v_; }
  Scenario scenario() const { return scenario_; }
  const std::vector<double>& z_axis() const { return z_axis_; }
  const std::vector<double>& tau_axis() const { return tau_axis_; }
  const std::vector<OperationalMode>& cells() const { return cells_; }

  /// Cells are stored z-major: index = iz * |tau_axis| + itau.
  OperationalMode at(std::size_t iz, std::size_t itau) const;

  /// Fraction of cells in each mode, indexed by the enum value.
  std::array<double, 5> mode_fractions() const;

 private:
  double v_;
  Scenario scenario_;
  std::vector<double> z_axis_;
  std::vector<double> tau_axis_;
  std::vector<OperationalMode> cells_;
};

/// Cell centres (i + 1/2) / n, i = 0..n-1.
std::vector<double> cell_centres(std::size_t n);

/// Fills a PhaseMap with classify_by_signs. Requires at least 2 points per axis.
PhaseMap rasterize(Scenario s, double v, std::size_t nz, std::size_t ntau,
                   double eps = kBoundaryEps);

}  // namespace otto
