#pragma once

// Degree-mode trigonometry and residual checks for the classical identities
// (addition, sum-to-product, cofunction). Every angle crossing this interface
// is in degrees; radians never leave the implementation.

#include <cmath>
#include <compare>
#include <utility>

#include "sastri/error.hpp"

namespace sastri {

/// A finite angle measured in degrees. No range restriction; consumers that
/// need one (triangle angles, half-angles) check it themselves.
class DegAngle {
 public:
  constexpr DegAngle() = default;
  constexpr explicit DegAngle(double degrees) : value_(degrees) {
    if (!std::isfinite(degrees)) throw DomainError("angle must be finite");
  }

  constexpr double deg() const noexcept { return value_; }

  friend constexpr DegAngle operator+(DegAngle x, DegAngle y) { return DegAngle(x.value_ + y.value_); }
  friend constexpr DegAngle operator-(DegAngle x, DegAngle y) { return DegAngle(x.value_ - y.value_); }
  friend constexpr DegAngle operator-(DegAngle x) { return DegAngle(-x.value_); }
  friend constexpr DegAngle operator*(DegAngle x, double s) { return DegAngle(x.value_ * s); }
  friend constexpr DegAngle operator*(double s, DegAngle x) { return DegAngle(x.value_ * s); }
  friend constexpr DegAngle operator/(DegAngle x, double s) { return DegAngle(x.value_ / s); }

  friend constexpr auto operator<=>(DegAngle, DegAngle) = default;

 private:
  double value_ = 0.0;
};

namespace literals {
constexpr DegAngle operator""_deg(long double v) { return DegAngle(static_cast<double>(v)); }
constexpr DegAngle operator""_deg(unsigned long long v) { return DegAngle(static_cast<double>(v)); }
}  // namespace literals

// Exact at multiples of 30 and 45 degrees; argument reduction is exact.
double sin_deg(DegAngle alpha);
double cos_deg(DegAngle alpha);

/// Throws DomainError within tol::kPoleDeg of 90 + 180k.
double tan_deg(DegAngle alpha);

/// cos/sin ratio. Throws DomainError within tol::kPoleDeg of 180k.
double cot_deg(DegAngle alpha);

/// The unique t in (-90, 90) with tan t = nu.
DegAngle arctan_deg(double nu);

/// Principal value in [0, 180]. Requires |x| <= 1.
DegAngle arccos_deg(double x);

/// Included angle omega in (0, 180) with tan(omega / 2) = h, for h > 0.
/// Evaluated as 2 arctan(h), which has no pole at h = 1.
DegAngle angle_from_half_tangent(double h);

// Identity residuals. Each component is |lhs - rhs| / max(1, |lhs|, |rhs|).

/// cos(a+b) = cos a cos b - sin a sin b ; sin(a+b) = sin a cos b + cos a sin b
std::pair<double, double> addition_formula_residual(DegAngle alpha, DegAngle beta);

/// sin a + sin b = 2 sin((a+b)/2) cos((a-b)/2) ; sin a - sin b = 2 sin((a-b)/2) cos((a+b)/2)
std::pair<double, double> sum_to_product_residual(DegAngle alpha, DegAngle beta);

/// tan(90 - a) = cot a ; cot(90 - a) = tan a. Undefined at multiples of 90.
std::pair<double, double> cofunction_residual(DegAngle alpha);

}  // namespace sastri
