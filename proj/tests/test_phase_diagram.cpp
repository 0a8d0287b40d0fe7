#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "otto/phase_diagram.hpp"

using namespace otto;

namespace {

// Number of sign-table rows that a (W, Q_h, Q_c) triple satisfies.
int matching_rows(double w, double qh, double qc) {
  int rows = 0;
  rows += (w >= 0 && qh >= 0 && qc <= 0) ? 1 : 0;  // engine
  rows += (w <= 0 && qh <= 0 && qc >= 0) ? 1 : 0;  // refrigerator
  rows += (w <= 0 && qh <= 0 && qc <= 0) ? 1 : 0;  // heater
  rows += (w <= 0 && qh >= 0 && qc <= 0) ? 1 : 0;  // thermal accelerator
  return rows;
}

double fraction(const PhaseMap& map, OperationalMode mode) {
  return map.mode_fractions()[static_cast<std::size_t>(mode)];
}

}  // namespace

TEST_CASE("sign classifier") {
  CHECK(classify_signs(1.0, 2.0, -1.0) == OperationalMode::Engine);
  CHECK(classify_signs(-1.0, -2.0, 1.0) == OperationalMode::Refrigerator);
  CHECK(classify_signs(-1.0, -0.5, -0.5) == OperationalMode::Heater);
  CHECK(classify_signs(-1.0, 0.5, -1.5) == OperationalMode::ThermalAccelerator);
  CHECK(classify_signs(0.0, 1.0, -1.0) == OperationalMode::Boundary);
  CHECK(classify_signs(1e-10, 1.0, -1.0) == OperationalMode::Boundary);
  CHECK(classify_signs(1e-10, 1.0, -1.0, 1e-12) == OperationalMode::Engine);
  CHECK(to_string(OperationalMode::ThermalAccelerator) == "thermal-accelerator");
}

TEST_CASE("classification of individual points") {
  CHECK(classify_by_signs(ReducedParams(0.9, 0.3, 0.5), kSuddenCompression) == OperationalMode::Engine);
  CHECK(classify_by_signs(ReducedParams(0.1, 0.5, 0.5), kSuddenCompression) ==
        OperationalMode::Refrigerator);
  CHECK(classify_by_signs(ReducedParams(1.0, 0.5, 0.5), kSuddenCompression) == OperationalMode::Boundary);
  CHECK(classify_by_signs(ReducedParams(0.59, 0.5, 0.5), kSuddenCompression) ==
        OperationalMode::ThermalAccelerator);
  CHECK(classify_by_signs(ReducedParams(0.3, 0.5, 0.5), kSuddenExpansion) == OperationalMode::Heater);
}

TEST_CASE("boundary curves") {
  const auto sc = boundary_curves(kSuddenCompression, 0.5);
  REQUIRE(sc.size() == 3);
  CHECK(sc[0].name == "refrigerator");
  CHECK(sc[1].name == "heater");
  CHECK(sc[2].name == "engine");
  const double a = 0.5 * relativistic_factor(0.5);
  CHECK(sc[0].z_of_tau(0.5).value() == doctest::Approx(a));
  CHECK(sc[1].z_of_tau(0.5).value() == doctest::Approx(std::sqrt(a / (2.0 - a))));

  const auto se = boundary_curves(kSuddenExpansion, 0.5);
  CHECK_FALSE(se[0].z_of_tau(0.5).has_value());
  CHECK(se[0].z_of_tau(0.9).value() == doctest::Approx(std::sqrt(1.8 * relativistic_factor(0.5) - 1.0)));

  CHECK_THROWS_AS(boundary_curves(kBothSudden, 0.5), std::invalid_argument);
}

TEST_CASE("curves bound the sign-classified regions") {
  for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
    for (double v : {0.1, 0.5, 0.9}) {
      for (int iz = 0; iz < 100; ++iz) {
        for (int it = 0; it < 100; ++it) {
          const double z = (iz + 0.5) / 100.0;
          const double tau = (it + 0.5) / 100.0;
          const OperationalMode by_signs = classify_by_signs(ReducedParams(z, tau, v), s);
          const OperationalMode by_curves = classify_by_curves(z, tau, s, v);
          if (by_signs == OperationalMode::Boundary || by_curves == OperationalMode::Boundary) {
            continue;
          }
          REQUIRE(by_signs == by_curves);
        }
      }
    }
  }
}

TEST_CASE("every cell outside the boundary band matches exactly one sign row") {
  for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
    const PhaseMap map = rasterize(s, 0.75, 100, 100);
    for (std::size_t iz = 0; iz < map.z_axis().size(); ++iz) {
      for (std::size_t it = 0; it < map.tau_axis().size(); ++it) {
        const ReducedParams r(map.z_axis()[iz], map.tau_axis()[it], map.v());
        const PerformanceRecord rec = high_temperature_record(r, s);
        const int rows = matching_rows(rec.w_ext, rec.q_h, rec.q_c);
        REQUIRE(rows >= 1);
        if (map.at(iz, it) != OperationalMode::Boundary) {
          REQUIRE(rows == 1);
        }
      }
    }
  }
}

TEST_CASE("halving the band only affects cells that were in it") {
  for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
    const PhaseMap wide = rasterize(s, 0.5, 80, 80, 1e-3);
    const PhaseMap narrow = rasterize(s, 0.5, 80, 80, 5e-4);
    for (std::size_t i = 0; i < wide.cells().size(); ++i) {
      if (wide.cells()[i] != OperationalMode::Boundary) {
        REQUIRE(narrow.cells()[i] == wide.cells()[i]);
      }
    }
  }
}

TEST_CASE("no SE refrigerator where tau f_v <= 1/2") {
  const PhaseMap map = rasterize(kSuddenExpansion, 0.75, 100, 100);
  const double fv = relativistic_factor(0.75);
  for (std::size_t iz = 0; iz < map.z_axis().size(); ++iz) {
    for (std::size_t it = 0; it < map.tau_axis().size(); ++it) {
      if (map.tau_axis()[it] * fv <= 0.5) {
        REQUIRE(map.at(iz, it) != OperationalMode::Refrigerator);
      }
    }
  }
}

TEST_CASE("engine area grows with velocity") {
  for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
    double previous_engine = 0.0;
    double previous_fridge = 1.0;
    for (int i = 0; i < 10; ++i) {
      const double v = 0.05 + 0.1 * i;
      const PhaseMap map = rasterize(s, v, 100, 100);
      const double engine = fraction(map, OperationalMode::Engine);
      const double fridge = fraction(map, OperationalMode::Refrigerator);
      CHECK(engine >= previous_engine);
      CHECK(fridge <= previous_fridge);
      previous_engine = engine;
      previous_fridge = fridge;
    }
  }
}

TEST_CASE("phase map layout") {
  const PhaseMap map = rasterize(kSuddenCompression, 0.5, 4, 3);
  CHECK(map.cells().size() == 12);
  CHECK(map.z_axis().front() == 0.125);
  CHECK(map.tau_axis().back() == doctest::Approx(5.0 / 6.0));
  CHECK(map.at(3, 0) == classify_by_signs(ReducedParams(0.875, 1.0 / 6.0, 0.5), kSuddenCompression));
  double total = 0.0;
  for (const double f : map.mode_fractions()) {
    total += f;
  }
  CHECK(total == doctest::Approx(1.0));

  CHECK_THROWS_AS(rasterize(kSuddenCompression, 0.5, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(rasterize(kBothAdiabatic, 0.5, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(PhaseMap(0.5, kSuddenCompression, {0.5}, {0.5}, {}), std::invalid_argument);
}

TEST_CASE("cell centres exclude the endpoints") {
  const auto axis = cell_centres(200);
  CHECK(axis.front() > 0.0);
  CHECK(axis.back() < 1.0);
  CHECK(axis.front() == 0.0025);
}
