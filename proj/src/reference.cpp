#include <quadmath.h>

#include <cmath>

#include "sastri/accuracy.hpp"

namespace sastri {
namespace {

using quad = __float128;

const quad kPi = 4 * atanq(1);

// Degree reduction happens in double, where remquo is exact for any finite
// input; only the reduced argument is converted.
quad sin_deg_q(double x) {
  int q = 0;
  const double r = std::remquo(x, 90.0, &q);
  const quad rad = static_cast<quad>(r) * kPi / 180;
  switch (((q % 4) + 4) % 4) {
    case 0: return sinq(rad);
    case 1: return cosq(rad);
    case 2: return -sinq(rad);
    default: return -cosq(rad);
  }
}

double to_deg(quad rad) { return static_cast<double>(rad * 180 / kPi); }

}  // namespace

TriangleSolution reference_solution(const SasProblem& problem) {
  const quad a = problem.a();
  const quad b = problem.b();
  const double omega = problem.omega().deg();

  // C at the origin, A = (b, 0), B = (a cos omega, a sin omega).
  const quad sin_omega = sin_deg_q(omega);
  const quad sin_half = sin_deg_q(omega / 2.0);  // omega/2 is exact
  const quad one_minus_cos = 2 * sin_half * sin_half;
  const quad c = sqrtq((a - b) * (a - b) + 4 * a * b * sin_half * sin_half);
  const quad theta = atan2q(a * sin_omega, (b - a) + a * one_minus_cos);
  const quad phi = atan2q(b * sin_omega, (a - b) + b * one_minus_cos);

  TriangleSolution out{problem.a(),
                       problem.b(),
                       static_cast<double>(c),
                       DegAngle(to_deg(theta)),
                       DegAngle(to_deg(phi)),
                       problem.omega(),
                       Method::reference,
                       0.0};
  out.residual = law_of_sines_residual(out.a, out.b, out.c, out.theta, out.phi, out.omega);
  return out;
}

}  // namespace sastri
