#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sastri/degree_trig.hpp"
#include "support/oracles.hpp"

using namespace sastri;
using namespace sastri::literals;
using sastri::testing::Rng;
using sastri::testing::rel_diff;

TEST_CASE("DegAngle rejects non-finite values") {
  CHECK_THROWS_AS(DegAngle(std::nan("")), DomainError);
  CHECK_THROWS_AS(DegAngle{INFINITY}, DomainError);
  CHECK((30_deg + 15_deg).deg() == 45.0);
  CHECK((2.0 * 30_deg).deg() == 60.0);
}

TEST_CASE("sin/cos are exact at the special angles") {
  CHECK(sin_deg(30_deg) == 0.5);
  CHECK(cos_deg(60_deg) == 0.5);
  CHECK(sin_deg(90_deg) == 1.0);
  CHECK(sin_deg(150_deg) == 0.5);
  CHECK(sin_deg(-30_deg) == -0.5);
  CHECK(cos_deg(180_deg) == -1.0);
  CHECK(sin_deg(DegAngle(720.0 + 30.0)) == 0.5);
  CHECK(cos_deg(90_deg) == 0.0);
  CHECK(sin_deg(60_deg) == cos_deg(30_deg));
}

TEST_CASE("sin/cos agree with radian evaluation away from special angles") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(-1000.0, 1000.0);
    const long double rad = x * sastri::testing::kPiL / 180.0L;
    CHECK(std::fabs(sin_deg(DegAngle(x)) - static_cast<double>(std::sin(rad))) <= 1e-13);
    CHECK(std::fabs(cos_deg(DegAngle(x)) - static_cast<double>(std::cos(rad))) <= 1e-13);
  }
}

TEST_CASE("tan_deg examples") {
  CHECK(tan_deg(45_deg) == 1.0);
  CHECK(tan_deg(0_deg) == 0.0);
  CHECK(std::fabs(tan_deg(DegAngle(63.43494882)) - 2.0) <= 1e-9);
  CHECK(tan_deg(60_deg) == std::numbers::sqrt3);
  CHECK(tan_deg(-45_deg) == -1.0);
  CHECK(tan_deg(225_deg) == 1.0);
}

TEST_CASE("tan_deg rejects poles within tolerance") {
  CHECK_THROWS_AS(tan_deg(90_deg), DomainError);
  CHECK_THROWS_AS(tan_deg(-90_deg), DomainError);
  CHECK_THROWS_AS(tan_deg(270_deg), DomainError);
  CHECK_THROWS_AS(tan_deg(DegAngle(90.0 - 5e-13)), DomainError);
  CHECK_NOTHROW(tan_deg(DegAngle(90.0 - 1e-9)));
  CHECK_THROWS_AS(cot_deg(180_deg), DomainError);
  CHECK_THROWS_AS(cot_deg(0_deg), DomainError);
}

TEST_CASE("tan_deg near a pole keeps relative accuracy") {
  // tan(90 - d) = 1 / tan(d); 90 - x is exact, so d is known exactly.
  const double near_pole = 90.0 - 1e-9;
  const double d = 90.0 - near_pole;
  const double expected = 1.0 / std::tan(d * std::numbers::pi / 180.0);
  CHECK(rel_diff(tan_deg(DegAngle(near_pole)), expected) <= 1e-14);
  const double x = 89.5;  // 90 - 89.5 = 0.5 exactly
  CHECK(rel_diff(tan_deg(DegAngle(x)), 1.0 / std::tan(0.5 * std::numbers::pi / 180.0)) <= 1e-15);
}

TEST_CASE("arctan_deg examples") {
  CHECK(std::fabs(arctan_deg(0.25).deg() - 14.03624347) <= 1e-7);
  CHECK(arctan_deg(0.0).deg() == 0.0);
  CHECK(arctan_deg(1.0).deg() == 45.0);
  CHECK(arctan_deg(-1.0).deg() == -45.0);
  CHECK_THROWS_AS(arctan_deg(NAN), DomainError);
  CHECK_THROWS_AS(arctan_deg(INFINITY), DomainError);
}

TEST_CASE("arctan_deg stays strictly inside (-90, 90)") {
  CHECK(arctan_deg(1e300).deg() < 90.0);
  CHECK(arctan_deg(-1e300).deg() > -90.0);
  CHECK(arctan_deg(1e300).deg() > 89.999999);
}

TEST_CASE("property: tan_deg(arctan_deg(nu)) == nu") {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double mag = rng.log_uniform(1e-12, 1e3);
    const double nu = rng.unit() < 0.5 ? -mag : mag;
    const DegAngle t = arctan_deg(nu);
    REQUIRE(t.deg() > -90.0);
    REQUIRE(t.deg() < 90.0);
    CHECK(std::signbit(t.deg()) == std::signbit(nu));
    CHECK(std::fabs(tan_deg(t) - nu) <= 1e-12 * std::fmax(std::fabs(nu), 1.0));
  }
}

TEST_CASE("property: tan_deg(arctan_deg(nu)) for large nu is limited by the spacing of t") {
  // Near 90 degrees one ulp of t moves tan t by ulp(t) * (pi/180) * (1 + nu^2),
  // so the round trip can only be as good as a couple of those steps.
  Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const double nu = rng.log_uniform(1e3, 1e12);
    const DegAngle t = arctan_deg(nu);
    REQUIRE(t.deg() < 90.0);
    const double ulp_t = std::nextafter(t.deg(), 180.0) - t.deg();
    const double step = ulp_t * std::numbers::pi / 180.0 * (1.0 + nu * nu) / nu;
    CHECK(std::fabs(tan_deg(t) - nu) / nu <= std::fmax(1e-12, 2.0 * step));
  }
}

TEST_CASE("angle_from_half_tangent examples") {
  CHECK(std::fabs(angle_from_half_tangent(2.0).deg() - 126.8698976) <= 1e-6);
  CHECK(angle_from_half_tangent(1.0).deg() == 90.0);
  CHECK(std::fabs(angle_from_half_tangent(1.0 / std::sqrt(3.0)).deg() - 60.0) <= 1e-12);
  CHECK_THROWS_AS(angle_from_half_tangent(0.0), DomainError);
  CHECK_THROWS_AS(angle_from_half_tangent(-2.0), DomainError);
  CHECK_THROWS_AS(angle_from_half_tangent(INFINITY), DomainError);
}

TEST_CASE("property: angle_from_half_tangent lands in (0, 180) and inverts tan(omega/2)") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double h = rng.log_uniform(1e-9, 1e9);
    const DegAngle omega = angle_from_half_tangent(h);
    REQUIRE(omega.deg() > 0.0);
    REQUIRE(omega.deg() < 180.0);
    // Same representability limit as arctan_deg once omega/2 crowds 90.
    const double half = omega.deg() / 2.0;
    const double ulp_half = std::nextafter(half, 180.0) - half;
    const double step = ulp_half * std::numbers::pi / 180.0 * (1.0 + h * h) / h;
    CHECK(rel_diff(tan_deg(omega / 2.0), h) <= (h <= 1e3 ? 1e-12 : std::fmax(1e-12, 2.0 * step)));
  }
}

TEST_CASE("property: direct route matches the double-angle route with quadrant fix") {
  Rng rng(17);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const double h = i % 10 == 0 ? 1.0 + rng.uniform(-1e-6, 1e-6) : rng.log_uniform(1e-12, 1e3);
    if (h == 1.0) continue;
    const double direct = angle_from_half_tangent(h).deg();
    const double paper = sastri::testing::half_tangent_by_double_angle(h);
    CHECK(std::fabs(direct - paper) <= 1e-9);
    ++checked;
  }
  CHECK(checked > 9900);
}

TEST_CASE("sum_to_product_residual examples") {
  const auto same = sum_to_product_residual(37_deg, 37_deg);
  CHECK(same.first <= 1e-12);
  CHECK(same.second <= 1e-12);
  // sin 90 + sin 30 = 1.5 = 2 sin 60 cos 30
  CHECK(sin_deg(90_deg) + sin_deg(30_deg) == 1.5);
  CHECK(std::fabs(2.0 * sin_deg(60_deg) * cos_deg(30_deg) - 1.5) <= 1e-15);
  const auto r = sum_to_product_residual(90_deg, 30_deg);
  CHECK(r.first <= 1e-12);
  CHECK(r.second <= 1e-12);
  const auto zero = sum_to_product_residual(0_deg, 0_deg);
  CHECK(zero.first == 0.0);
  CHECK(zero.second == 0.0);
}

TEST_CASE("cofunction_residual examples") {
  const auto r45 = cofunction_residual(45_deg);
  CHECK(r45.first <= 1e-12);
  CHECK(r45.second <= 1e-12);
  const auto r30 = cofunction_residual(30_deg);
  CHECK(r30.first <= 1e-12);
  CHECK(r30.second <= 1e-12);
  CHECK(std::fabs(tan_deg(60_deg) - std::numbers::sqrt3) <= 1e-15);
  CHECK(std::fabs(cot_deg(30_deg) - std::numbers::sqrt3) <= 1e-15);
  CHECK_THROWS_AS(cofunction_residual(90_deg), DomainError);
  CHECK_THROWS_AS(cofunction_residual(180_deg), DomainError);
  CHECK_THROWS_AS(cofunction_residual(0_deg), DomainError);
}

TEST_CASE("addition_formula_residual examples") {
  for (double beta : {-400.0, -12.5, 0.0, 33.3, 271.0}) {
    const auto r = addition_formula_residual(0_deg, DegAngle(beta));
    CHECK(r.first <= 1e-15);
    CHECK(r.second <= 1e-15);
  }
  const auto r = addition_formula_residual(30_deg, 30_deg);
  CHECK(r.first <= 1e-12);
  CHECK(r.second <= 1e-12);
  CHECK(std::fabs(sin_deg(60_deg) - 2.0 * sin_deg(30_deg) * cos_deg(30_deg)) <= 1e-15);
  // sin(90 + t) = cos t
  for (double t : {-30.0, 0.5, 14.03624347, 60.0}) {
    const auto q = addition_formula_residual(90_deg, DegAngle(t));
    CHECK(q.first <= 1e-12);
    CHECK(q.second <= 1e-12);
    CHECK(std::fabs(sin_deg(DegAngle(90.0 + t)) - cos_deg(DegAngle(t))) <= 1e-15);
  }
}

TEST_CASE("property: identity residuals on random angle pairs") {
  Rng rng(23);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const DegAngle alpha(rng.uniform(-720.0, 720.0));
    const DegAngle beta(rng.uniform(-720.0, 720.0));
    const auto add = addition_formula_residual(alpha, beta);
    const auto s2p = sum_to_product_residual(alpha, beta);
    const auto cof = cofunction_residual(alpha);
    worst = std::fmax(worst, std::fmax(std::fmax(add.first, add.second),
                                       std::fmax(std::fmax(s2p.first, s2p.second), std::fmax(cof.first, cof.second))));
  }
  CHECK(worst <= 1e-10);
}
