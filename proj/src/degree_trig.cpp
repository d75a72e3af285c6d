#include "sastri/degree_trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sastri/tolerances.hpp"

namespace sastri {
namespace {

constexpr double kRadPerDeg = std::numbers::pi / 180.0;
constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kInvSqrt3 = std::numbers::inv_sqrt3;
constexpr double kSqrt3Over2 = std::numbers::sqrt3 / 2.0;
constexpr double kSqrtHalf = 0.70710678118654752440;

// x = r + 90 * quadrant (mod 360) with |r| <= 45. remquo is exact and keeps
// at least three low bits of the quotient, enough for the quadrant.
struct Octant {
  double r;
  int quadrant;
};

Octant reduce_right_angle(double x) {
  int q = 0;
  const double r = std::remquo(x, 90.0, &q);
  return {r, ((q % 4) + 4) % 4};
}

// Kernels on |r| <= 45.
double sin_kernel(double r) {
  const double m = std::fabs(r);
  if (m == 0.0) return r;
  if (m == 30.0) return std::copysign(0.5, r);
  if (m == 45.0) return std::copysign(kSqrtHalf, r);
  return std::sin(r * kRadPerDeg);
}

double cos_kernel(double r) {
  const double m = std::fabs(r);
  if (m == 0.0) return 1.0;
  if (m == 30.0) return kSqrt3Over2;
  if (m == 45.0) return kSqrtHalf;
  return std::cos(r * kRadPerDeg);
}

double tan_kernel(double r) {
  const double m = std::fabs(r);
  if (m == 0.0) return r;
  if (m == 30.0) return std::copysign(kInvSqrt3, r);
  if (m == 45.0) return std::copysign(1.0, r);
  return std::tan(r * kRadPerDeg);
}

double scaled_gap(double lhs, double rhs) {
  return std::fabs(lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

}  // namespace

double sin_deg(DegAngle alpha) {
  const auto [r, q] = reduce_right_angle(alpha.deg());
  switch (q) {
    case 0: return sin_kernel(r);
    case 1: return cos_kernel(r);
    case 2: return -sin_kernel(r);
    default: return -cos_kernel(r);
  }
}

double cos_deg(DegAngle alpha) {
  const auto [r, q] = reduce_right_angle(alpha.deg());
  switch (q) {
    case 0: return cos_kernel(r);
    case 1: return -sin_kernel(r);
    case 2: return -cos_kernel(r);
    default: return sin_kernel(r);
  }
}

double tan_deg(DegAngle alpha) {
  const double r = std::remainder(alpha.deg(), 180.0);  // exact, |r| <= 90
  const double m = std::fabs(r);
  if (90.0 - m <= tol::kPoleDeg) throw DomainError("tan is undefined at 90 + 180k degrees");
  if (m <= 45.0) return tan_kernel(r);
  // tan(r) = 1 / tan(90 - r); 90 - m is exact for m in (45, 90].
  const double u = 90.0 - m;
  if (u == 30.0) return std::copysign(kSqrt3, r);
  return std::copysign(1.0 / tan_kernel(u), r);
}

double cot_deg(DegAngle alpha) {
  const double r = std::remainder(alpha.deg(), 180.0);
  if (std::fabs(r) <= tol::kPoleDeg) throw DomainError("cot is undefined at 180k degrees");
  return cos_deg(alpha) / sin_deg(alpha);
}

DegAngle arctan_deg(double nu) {
  if (!std::isfinite(nu)) throw DomainError("arctan argument must be finite");
  const double m = std::fabs(nu);
  double t;
  if (m == 0.0) {
    t = 0.0;
  } else if (m == 1.0) {
    t = 45.0;
  } else if (m < 1.0) {
    t = std::atan(m) * kDegPerRad;
  } else {
    // Complement in degrees keeps the result off the rounded pi/2.
    t = 90.0 - std::atan(1.0 / m) * kDegPerRad;
    if (t >= 90.0) t = std::nextafter(90.0, 0.0);
  }
  return DegAngle(std::copysign(t, nu));
}

DegAngle arccos_deg(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("arccos argument must lie in [-1, 1]");
  if (x == 0.5) return DegAngle(60.0);
  if (x == -0.5) return DegAngle(120.0);
  return DegAngle(std::acos(x) * kDegPerRad);
}

DegAngle angle_from_half_tangent(double h) {
  if (!std::isfinite(h) || h <= 0.0) throw DomainError("tan(omega/2) must be positive and finite");
  const DegAngle omega = 2.0 * arctan_deg(h);
  if (omega.deg() <= 0.0) throw DomainError("tan(omega/2) underflows to a zero angle");
  return omega;
}

std::pair<double, double> addition_formula_residual(DegAngle alpha, DegAngle beta) {
  const double sa = sin_deg(alpha), ca = cos_deg(alpha);
  const double sb = sin_deg(beta), cb = cos_deg(beta);
  const DegAngle sum = alpha + beta;
  return {scaled_gap(cos_deg(sum), ca * cb - sa * sb), scaled_gap(sin_deg(sum), sa * cb + ca * sb)};
}

std::pair<double, double> sum_to_product_residual(DegAngle alpha, DegAngle beta) {
  const double sa = sin_deg(alpha), sb = sin_deg(beta);
  const DegAngle half_sum = (alpha + beta) / 2.0;
  const DegAngle half_diff = (alpha - beta) / 2.0;
  return {scaled_gap(sa + sb, 2.0 * sin_deg(half_sum) * cos_deg(half_diff)),
          scaled_gap(sa - sb, 2.0 * sin_deg(half_diff) * cos_deg(half_sum))};
}

std::pair<double, double> cofunction_residual(DegAngle alpha) {
  const double r = std::remainder(alpha.deg(), 90.0);
  if (std::fabs(r) <= tol::kPoleDeg)
    throw DomainError("cofunction identities exclude multiples of 90 degrees");
  const DegAngle complement = DegAngle(90.0) - alpha;
  return {scaled_gap(tan_deg(complement), cot_deg(alpha)), scaled_gap(cot_deg(complement), tan_deg(alpha))};
}

}  // namespace sastri
