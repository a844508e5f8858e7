#include "yaglom/bounds.hpp"
#include "yaglom/counting.hpp"
#include "yaglom/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace yaglom;

TEST_CASE("closed-form curves") {
  CHECK(shannon_rate(1.0) == doctest::Approx(1.0 - std::log2(3.0) / 2.0));
  CHECK(shannon_rate_log(0.0) == doctest::Approx(shannon_rate(1.0)).epsilon(1e-15));
  CHECK(lattice_rate(0.25) == doctest::Approx(1.0));
  CHECK(lattice_shifted_rate_log(std::log(0.25)) == doctest::Approx(1.0 - 1.30));
  CHECK(lachaud_stern_rate(2.0) == doctest::Approx(0.5 * shannon_rate(2.0)));
  CHECK(shannon_rate(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(shannon_rate(4.0), DomainError);
  CHECK_THROWS_AS(shannon_rate(0.0), DomainError);
  CHECK_THROWS_AS(lattice_rate(-1.0), DomainError);

  // deep in log-space the Shannon and lattice curves merge
  CHECK(shannon_rate_log(-1000.0) - lattice_rate_log(-1000.0) == doctest::Approx(0.0));
  CHECK(shannon_rate_log(-1000.0) == doctest::Approx(1000.0 / (2.0 * std::numbers::ln2)));
}

TEST_CASE("lattice curve sits below Shannon by the closed-form gap") {
  for (double x = -50.0; x < std::log(4.0) - 1e-3; x += 0.37) {
    CHECK(shannon_rate_log(x) - lattice_rate_log(x) == doctest::Approx(shannon_lattice_gap_log(x)).epsilon(1e-12));
  }
}

TEST_CASE("Gilbert-Yaglom rate") {
  // q=3, a=1: at rho=1/2 the saddle exponent is exactly 3/2
  CHECK(gilbert_yaglom_rate(3, 0.5) == doctest::Approx(std::log2(3.0) - 1.5).epsilon(1e-13));
  CHECK(gilbert_yaglom_rate_log(3, std::log(0.5)) == doctest::Approx(gilbert_yaglom_rate(3, 0.5)));
  CHECK(gilbert_yaglom_rate(3, 0.9) == 0.0);
  for (int q : {3, 5, 9, 16}) {
    for (double rho : {0.01, 0.05, 0.2}) {
      CHECK(gilbert_yaglom_rate(q, rho) > 0.0);
      CHECK(gilbert_yaglom_rate(q, rho) < shannon_rate(rho));
    }
  }
}

TEST_CASE("large-alphabet construction") {
  CHECK(theta_discretization_defect(1.0) == doctest::Approx(7.719233321827830e-9).epsilon(1e-6));
  CHECK(theta_discretization_defect(0.5) == doctest::Approx(1.4776e-4).epsilon(1e-3));
  CHECK(std::abs(theta_discretization_defect(2.0)) < 1e-15);
  CHECK(large_alphabet_gap(1.0, 256.0) == doctest::Approx(7.719233321827830e-9).epsilon(1e-6));
  CHECK(cube_alphabet_gap(64.0) ==
        doctest::Approx(0.5 * std::log2(std::numbers::pi * std::numbers::e / 2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(large_alphabet_rate(2.0, 1.0), DomainError);
}

TEST_CASE("TVZ line") {
  const TvzParams small = TvzParams::from_t(7, 2);
  CHECK(small.tau == doctest::Approx(1.0 / 3.0));
  CHECK(small.fq == doctest::Approx(47.0 / 48.0));
  CHECK(tvz_line(small, -700.0) == doctest::Approx(1.8326).epsilon(1e-4));
  const double x0 = tvz_log_rho_intercept(small);
  CHECK(tvz_line(small, x0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(tvz_line(small, x0 + 0.1) < 0.0);

  CHECK_THROWS_AS(TvzParams::from_t(7, 3), DomainError);
  CHECK_THROWS_AS(TvzParams::from_t(9, 2), DomainError);
  CHECK_THROWS_AS(TvzParams::from_t(5, 2), DomainError);
  CHECK_THROWS_AS(TvzParams::from_t(7, 5), DomainError);

  const TvzParams ref = TvzParams::from_tau(parse_decimal(kReferencePrimeDigits), kReferenceTau);
  CHECK(ref.log_p == doctest::Approx(314.84396392926128488).epsilon(1e-15));
  CHECK(ref.tau == doctest::Approx(kReferenceTau).epsilon(1e-12));
  CHECK(ref.fq_clamped);
  CHECK(ref.fq == 1.0);
  CHECK(ref.t % 2 == 0);
}

TEST_CASE("tangent to lambda R_L") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  for (int trial = 0; trial < 200; ++trial) {
    const double x0 = std::log(unit(rng));
    const TangentLine line = tangent_line(x0, 0.98);
    const double curve = 0.98 * lattice_rate_log(x0);
    CHECK(line.value_at_log(x0) == doctest::Approx(curve).epsilon(1e-12));
    for (double shift : {-std::numbers::ln2, std::numbers::ln2}) {
      const double x = x0 + shift;
      CHECK(line.value_at_log(x) <= 0.98 * lattice_rate_log(x) + 1e-12);
    }
  }
  CHECK_THROWS_AS(tangent_line(1.0, 0.98), DomainError);
}

TEST_CASE("region residual and tau window agree") {
  CHECK(region_residual(kReferenceLogRho, 314.84396392926128, kReferenceLambda) ==
        doctest::Approx(8.54e-6).epsilon(1e-2));
  for (double x = -700.0; x <= -600.0; x += 7.3) {
    for (double y = 300.0; y <= 330.0; y += 0.77) {
      const double f = region_residual(x, y, 0.98);
      CHECK((f <= 0.0) == tau_window(x, y, 0.98).nonempty());
    }
  }
  CHECK(std::isinf(region_residual(0.0, 400.0, 0.98)));
  CHECK_THROWS_AS(region_residual(-1.0, 0.0, 0.98), DomainError);
  CHECK_THROWS_AS(region_residual(1.0, 2.0, 0.98), DomainError);
}

TEST_CASE("TVZ line clears the tangent wherever tau is in its window") {
  const TvzParams ref = TvzParams::from_tau(parse_decimal(kReferencePrimeDigits), kReferenceTau);
  int inside = 0;
  for (double x = -641.0; x <= -640.0; x += 0.001) {
    if (!tau_window(x, ref.log_p, kReferenceLambda).contains(ref.tau)) continue;
    ++inside;
    CHECK(tvz_line(ref, x) > tangent_line(x, kReferenceLambda).value_at_log(x));
  }
  CHECK(inside > 0);
  CHECK_FALSE(tau_window(kReferenceLogRho, ref.log_p, kReferenceLambda).nonempty());
}

TEST_CASE("envelope") {
  const double c = -10.0;
  for (double x = -900.0; x <= -10.0; x += 37.0) {
    const double h = 1e-4 * (1.0 - x);
    const double fd = (envelope_point(x + h, c).rate - envelope_point(x - h, c).rate) / (2.0 * h);
    CHECK(envelope_slope(x, c) == doctest::Approx(fd).epsilon(1e-6));
  }
  // x + 2 ln p = c and 8 tau = (1 - x) e^c put it on the TVZ line family
  const double x = -400.0;
  const BoundPoint pt = envelope_point(x, c);
  const double y = (c - x) / 2.0;
  const double tau = (1.0 - x) * std::exp(c) / 8.0;
  CHECK(pt.rate == doctest::Approx((1.0 - 1.0 / (1.0 - x)) * (1.0 - tau) * y / std::numbers::ln2));
}

TEST_CASE("curve emission") {
  CurveParams params;
  const auto pts = emit_curve(CurveKind::kShannon, params, -5.0, 0.0, 6);
  REQUIRE(pts.size() == 6);
  CHECK(pts.front().x == -5.0);
  CHECK(pts.back().x == 0.0);
  CHECK(pts[2].rate == doctest::Approx(shannon_rate_log(-3.0)));
  CHECK_FALSE(BoundPoint{-800.0, 0.0}.rho().has_value());

  CHECK(parse_curve_kind("tvz") == CurveKind::kTvzLine);
  CHECK(curve_name(CurveKind::kLatticeShifted) == "lattice_shifted");
  for (auto kind : {CurveKind::kShannon, CurveKind::kLattice, CurveKind::kLatticeShifted, CurveKind::kLachaudStern,
                    CurveKind::kGilbertYaglom, CurveKind::kTvzLine, CurveKind::kEnvelope, CurveKind::kScaledShannon}) {
    CHECK(parse_curve_kind(curve_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_curve_kind("hexagonal"), UsageError);
  CHECK_THROWS_AS(emit_curve(CurveKind::kTvzLine, params, -5.0, 0.0, 6), UsageError);
  CHECK_THROWS(emit_curve(CurveKind::kShannon, params, 0.0, -5.0, 6));
}
