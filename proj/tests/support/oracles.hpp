#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace sastri::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

 private:
  std::mt19937_64 engine_;
};

inline double rel_diff(double x, double y) {
  const double scale = std::fmax(std::fabs(x), std::fabs(y));
  return scale == 0.0 ? 0.0 : std::fabs(x - y) / scale;
}

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

/// Included angle from tan(omega/2) = h the way a calculator user would:
/// tan omega = 2h / (1 - h^2), press arctan, add 180 when the result is negative.
/// Undefined at h = 1.
inline double half_tangent_by_double_angle(double h) {
  const long double tan_omega = 2.0L * h / (1.0L - static_cast<long double>(h) * h);
  long double omega = std::atan(tan_omega) * 180.0L / kPiL;
  if (omega < 0) omega += 180.0L;
  return static_cast<double>(omega);
}

/// Right triangle with legs a, b and the right angle between them.
struct RightTriangle {
  double c;
  double theta;  // opposite a
  double phi;    // opposite b
};

inline RightTriangle right_triangle(double a, double b) {
  const long double la = a, lb = b;
  const long double c = std::sqrt(la * la + lb * lb);
  return {static_cast<double>(c), static_cast<double>(std::atan2(la, lb) * 180.0L / kPiL),
          static_cast<double>(std::atan2(lb, la) * 180.0L / kPiL)};
}

}  // namespace sastri::testing
