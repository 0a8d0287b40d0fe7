#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fixtures/reference_values.hpp"
#include "otto/high_temperature.hpp"
#include "otto/optima.hpp"
#include "published_forms.hpp"
#include "test_support.hpp"

using namespace otto;
using otto::testing::rel_diff;
namespace ref = otto::reference;

namespace {

const OptimizationTarget kEtaSc(Objective::MaxEfficiency, kSuddenCompression);
const OptimizationTarget kEtaSe(Objective::MaxEfficiency, kSuddenExpansion);
const OptimizationTarget kOmegaSc(Objective::MaxOmega, kSuddenCompression);
const OptimizationTarget kOmegaSe(Objective::MaxOmega, kSuddenExpansion);
const OptimizationTarget kWorkSc(Objective::MaxWork, kSuddenCompression);
const OptimizationTarget kWorkSe(Objective::MaxWork, kSuddenExpansion);

}  // namespace

TEST_CASE("optimisation targets need an asymmetric scenario") {
  CHECK_THROWS_AS(OptimizationTarget(Objective::MaxWork, kBothSudden), std::invalid_argument);
  CHECK_THROWS_AS(OptimizationTarget(Objective::MaxOmega, kBothAdiabatic), std::invalid_argument);
}

TEST_CASE("maximum-efficiency frequency ratios") {
  CHECK(std::abs(z_star_eta_sc(0.5, 0.5).value() - ref::kZStarEtaSc) < 1e-12);
  CHECK(std::abs(z_star_eta_se(0.5, 0.5).value() - ref::kZStarEtaSe) < 1e-12);
  CHECK(std::abs(z_star_eta_sc(0.3, 0.75).value() - ref::kZStarEtaSc_0_3_0_75) < 1e-12);
  CHECK(std::abs(z_star_eta_se(0.3, 0.75).value() - ref::kZStarEtaSe_0_3_0_75) < 1e-12);
  CHECK_THROWS_AS(z_star_eta_sc(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(z_star_eta_se(0.5, 1.0), std::domain_error);
}

TEST_CASE("the cubic roots equal the trigonometric closed forms") {
  for (int it = 0; it < 20; ++it) {
    for (int iv = 0; iv < 20; ++iv) {
      const double tau = (it + 0.5) / 20.0;
      const double v = (iv + 0.5) / 20.0;
      CHECK(std::abs(z_star_eta_sc(tau, v).value() - testing::transcribed_z_star_eta_sc(tau, v)) < 1e-12);
      CHECK(std::abs(z_star_eta_se(tau, v).value() - testing::transcribed_z_star_eta_se(tau, v)) < 1e-12);
    }
  }
}

TEST_CASE("maximum-efficiency ratios shrink as tau -> 0") {
  double previous_sc = 1.0, previous_se = 1.0;
  for (double tau : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    const double sc = z_star_eta_sc(tau, 0.5).value();
    const double se = z_star_eta_se(tau, 0.5).value();
    CHECK(sc < previous_sc);
    CHECK(se < previous_se);
    previous_sc = sc;
    previous_se = se;
  }
  CHECK(previous_sc < 0.01);
  CHECK(previous_se < 0.01);
}

TEST_CASE("maximum efficiencies") {
  CHECK(rel_diff(eta_max_sc(0.5, 0.5).value(), ref::kEtaMaxSc) < 1e-12);
  CHECK(rel_diff(eta_max_se(0.5, 0.5).value(), ref::kEtaMaxSe) < 1e-12);
  CHECK_THROWS_AS(eta_max_sc(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(eta_max_se(1.0, 0.5), std::domain_error);
}

TEST_CASE("maximum efficiency is the efficiency at the optimum") {
  for (int ie = 1; ie < 20; ++ie) {
    for (int iv = 1; iv < 20; ++iv) {
      const double eta_c = ie / 20.0;
      const double v = iv / 20.0;
      const double tau = 1.0 - eta_c;
      const double z_sc = z_star_eta_sc(tau, v).value();
      const double z_se = z_star_eta_se(tau, v).value();
      CHECK(std::abs(eta_max_sc(eta_c, v).value() - eta_sc(ReducedParams(z_sc, tau, v)).value()) < 1e-10);
      CHECK(std::abs(eta_max_se(eta_c, v).value() - eta_se(ReducedParams(z_se, tau, v)).value()) < 1e-10);
    }
  }
}

TEST_CASE("maximum efficiency grows with the Carnot efficiency and stays below it") {
  for (double v : {0.1, 0.5, 0.95}) {
    double previous_sc = 0.0, previous_se = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double eta_c = i / 100.0;
      const double sc = eta_max_sc(eta_c, v).value();
      const double se = eta_max_se(eta_c, v).value();
      CHECK(sc > previous_sc);
      CHECK(se > previous_se);
      CHECK(sc < 1.0);
      CHECK(se <= 0.5);
      previous_sc = sc;
      previous_se = se;
    }
  }
  CHECK(eta_max_sc(0.999999, 0.5).value() > 0.99);
}

TEST_CASE("optimum is stationary with negative curvature") {
  for (double tau : {0.2, 0.5, 0.8}) {
    for (double v : {0.2, 0.5, 0.9}) {
      const double zs = z_star_eta_sc(tau, v).value();
      const auto d_sc = oracle::derivative_check(
          [&](double z) { return eta_sc(ReducedParams(z, tau, v)).value(); }, zs);
      CHECK(std::abs(d_sc.richardson) < 1e-7);
      CHECK(d_sc.second_difference < 0.0);

      const double ze = z_star_eta_se(tau, v).value();
      const auto d_se = oracle::derivative_check(
          [&](double z) { return eta_se(ReducedParams(z, tau, v)).value(); }, ze);
      CHECK(std::abs(d_se.richardson) < 1e-7);
      CHECK(d_se.second_difference < 0.0);
    }
  }
}

TEST_CASE("maximum-work point") {
  CHECK(std::abs(z_star_work(0.5, 0.5).value() - ref::kZStarWork) < 1e-14);
  CHECK(z_star_work(0.5, 1e-9).value() == doctest::Approx(std::cbrt(0.5)).epsilon(1e-14));
  const auto sc = oracle_argmax(kWorkSc, 0.5, 0.5);
  const auto se = oracle_argmax(kWorkSe, 0.5, 0.5);
  CHECK(std::abs(sc.argmax - ref::kZStarWorkScOracle) < 1e-7);
  CHECK(std::abs(se.argmax - ref::kZStarWorkSeOracle) < 1e-7);
}

TEST_CASE("efficiency at maximum work") {
  CHECK(rel_diff(eta_mw_sc(0.5, 0.5), ref::kEtaMwSc) < 1e-12);
  CHECK(rel_diff(eta_mw_se(0.5, 0.5), ref::kEtaMwSe) < 1e-12);
  for (int ie = 1; ie < 20; ++ie) {
    for (int iv = 1; iv < 20; ++iv) {
      const double eta_c = ie / 20.0;
      const double v = iv / 20.0;
      const double tau = 1.0 - eta_c;
      const ReducedParams r(z_star_work(tau, v).value(), tau, v);
      CHECK(std::abs(eta_mw_sc(eta_c, v) - eta_sc(r).value()) < 1e-9);
      CHECK(std::abs(eta_mw_se(eta_c, v) - eta_se(r).value()) < 1e-9);
    }
  }
}

TEST_CASE("efficiency at maximum work tends to the static value as v -> 0") {
  CHECK(rel_diff(eta_mw_sc(0.5, 1e-7), ref::kEtaMwScNonRel) < 1e-9);
  CHECK(rel_diff(eta_mw_se(0.5, 1e-7), ref::kEtaMwSeNonRel) < 1e-9);
}

TEST_CASE("work curves cross at sqrt(tau f_v)") {
  CHECK(std::abs(work_crossing_z(0.5, 0.5) - ref::kWorkCrossing) < 1e-15);
}

TEST_CASE("Omega optimum") {
  const OptimumReport sc = z_star_omega_sc(0.5, 0.5);
  CHECK(std::abs(sc.z_star - ref::kZStarOmegaSc) < 1e-7);
  CHECK(sc.value_at_opt == doctest::Approx(ref::kOmegaMaxSc).epsilon(1e-10));
  CHECK(std::abs(eta_omega_sc(0.5, 0.5) - ref::kEtaOmegaSc) < 1e-9);

  const OptimumReport se = z_star_omega_se(0.5, 0.5);
  CHECK(std::abs(se.z_star - ref::kZStarOmegaSe) < 1e-7);
  CHECK(std::abs(eta_omega_se(0.5, 0.5) - ref::kEtaOmegaSe) < 1e-9);

  for (const double dz : {-1e-3, 1e-3}) {
    CHECK(objective_value(kOmegaSc, sc.z_star + dz, 0.5, 0.5) < sc.value_at_opt);
    CHECK(objective_value(kOmegaSe, se.z_star + dz, 0.5, 0.5) < se.value_at_opt);
  }
}

TEST_CASE("Omega optimum approaches the eta_max = 1 trade-off as tau -> 0") {
  const double tau = 1e-6, v = 0.5;
  const OptimumReport report = z_star_omega_sc(tau, v);
  const double lo = engine_lower_bound(kSuddenCompression, tau * relativistic_factor(v));
  const auto limit = oracle::maximize(
      [&](double z) {
        const ReducedParams r(z, tau, v);
        return 2.0 * work_sc(r) - qh_sc(r);
      },
      oracle::ScanSpec{lo, 1.0});
  CHECK(std::abs(report.z_star - limit.argmax) < 1e-2);
}

TEST_CASE("efficiency ordering: maximum work <= Omega <= maximum efficiency") {
  for (double v : {0.35, 0.75, 0.95}) {
    for (int i = 1; i < 20; ++i) {
      const double eta_c = i / 20.0;
      CHECK(eta_mw_sc(eta_c, v) <= eta_omega_sc(eta_c, v) + 1e-12);
      CHECK(eta_omega_sc(eta_c, v) <= eta_max_sc(eta_c, v).value() + 1e-12);
      CHECK(eta_mw_se(eta_c, v) <= eta_omega_se(eta_c, v) + 1e-12);
      CHECK(eta_omega_se(eta_c, v) <= eta_max_se(eta_c, v).value() + 1e-12);
    }
  }
}

TEST_CASE("optimize reports its source") {
  const auto eta = optimize(kEtaSc, 0.5, 0.5).value();
  CHECK(eta.source == OptimumSource::ClosedForm);
  CHECK(std::abs(eta.z_star - ref::kZStarEtaSc) < 1e-12);
  CHECK(std::abs(eta.oracle_z_star - ref::kZStarEtaSc) < 1e-6);
  CHECK(eta.value_at_opt == doctest::Approx(ref::kEtaMaxSc).epsilon(1e-12));
  CHECK(eta.eta_at_opt == eta.value_at_opt);

  const auto se = optimize(kEtaSe, 0.5, 0.5).value();
  CHECK(se.source == OptimumSource::ClosedForm);
  CHECK(std::abs(se.z_star - ref::kZStarEtaSe) < 1e-12);

  const auto work = optimize(kWorkSe, 0.5, 0.5).value();
  CHECK(work.source == OptimumSource::ClosedForm);
  CHECK(work.value_at_opt == doctest::Approx(work_se(ReducedParams(ref::kZStarWork, 0.5, 0.5))));

  const auto omega = optimize(kOmegaSc, 0.5, 0.5).value();
  CHECK(std::abs(omega.z_star - omega.oracle_z_star) <= kAgreementTol);
  MESSAGE("Omega SC source at tau=v=0.5: "
          << std::string(omega.source == OptimumSource::ClosedForm ? "closed-form" : "oracle-fallback"));
}

TEST_CASE("closed forms agree with the oracle on a coarse grid") {
  for (double tau : {0.1, 0.4, 0.7, 0.95}) {
    for (double v : {0.05, 0.4, 0.7, 0.99}) {
      for (const auto& target : {kEtaSc, kEtaSe, kWorkSc, kWorkSe}) {
        const auto report = optimize(target, tau, v);
        REQUIRE(report.has_value());
        CHECK(report->source == OptimumSource::ClosedForm);
      }
    }
  }
}

TEST_CASE("efficiency objective is -inf where no heat is absorbed") {
  CHECK(objective_value(kEtaSc, 0.3, 0.5, 0.5) == -std::numeric_limits<double>::infinity());
  CHECK(objective_value(kEtaSe, 0.3, 0.5, 0.5) == -std::numeric_limits<double>::infinity());
  CHECK(objective_value(kWorkSc, 0.3, 0.5, 0.5) == work_sc(ReducedParams(0.3, 0.5, 0.5)));
}

TEST_CASE("published Omega closed forms are checked against the oracle") {
  const PrintedFormulaCheck sc = check_printed_omega_sc(0.5, 0.5);
  const PrintedFormulaCheck se = check_printed_omega_se(0.5, 0.5);
  CHECK(std::abs(sc.oracle - ref::kZStarOmegaSc) < 1e-7);
  CHECK(std::abs(se.oracle - ref::kZStarOmegaSe) < 1e-7);
  MESSAGE("SC printed form agrees with oracle: " << std::string(sc.agrees ? "yes" : "no"));
  MESSAGE("SE printed form agrees with oracle: " << std::string(se.agrees ? "yes" : "no"));
  CHECK(printed_omega_se_acos_argument(0.5, 0.5) ==
        doctest::Approx(testing::transcribed_se_acos_argument(0.5, 0.5)));
}
