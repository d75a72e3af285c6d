#include "sastri/sas_solver.hpp"

#include <algorithm>
#include <cmath>

#include "sastri/error.hpp"
#include "sastri/ratio_lemma.hpp"
#include "sastri/tolerances.hpp"

namespace sastri {
namespace {

bool is_triangle_angle(DegAngle x) { return x.deg() > 0.0 && x.deg() < 180.0; }

double rel_gap(double x, double y) { return std::fabs(x - y) / std::max(std::fabs(x), std::fabs(y)); }

}  // namespace

SasProblem::SasProblem(double a, double b, DegAngle omega) : a_(a), b_(b), omega_(omega) {
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("side a must be positive and finite");
  if (!std::isfinite(b) || b <= 0.0) throw DomainError("side b must be positive and finite");
  if (!is_triangle_angle(omega))
    throw DomainError("omega out of range; omega must lie strictly between 0 and 180");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::sines: return "sines";
    case Method::cosines: return "cosines";
    case Method::reference: return "reference";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "sines") return Method::sines;
  if (name == "cosines") return Method::cosines;
  if (name == "reference") return Method::reference;
  return std::nullopt;
}

double nu_from(const SasProblem& problem) {
  if (problem.a() == problem.b()) return 0.0;
  return componendo(problem.a(), problem.b()) / tan_deg(problem.omega() / 2.0);
}

DegAngle t_from_nu(double nu) { return arctan_deg(nu); }

HalfAngleState half_angle_state(const SasProblem& problem) {
  const double nu = nu_from(problem);
  return {nu, t_from_nu(nu)};
}

// theta = 90 + t - omega/2, phi = 90 - (t + omega/2), with 90 - omega/2
// formed as (180 - omega)/2 so it stays exact when omega is near 180.
static AnglePair half_angle_split(DegAngle t, DegAngle omega) {
  const DegAngle half_rest = (DegAngle(180.0) - omega) / 2.0;
  return {half_rest + t, half_rest - t};
}

AnglePair angles_from_t(DegAngle t, DegAngle omega) {
  if (!(t.deg() > -90.0 && t.deg() < 90.0)) throw DomainError("t must lie strictly between -90 and 90");
  if (!is_triangle_angle(omega))
    throw DomainError("omega out of range; omega must lie strictly between 0 and 180");
  const AnglePair out = half_angle_split(t, omega);
  if (!is_triangle_angle(out.theta) || !is_triangle_angle(out.phi))
    throw DomainError("(t, omega) does not describe a triangle");
  return out;
}

double third_side(const SasProblem& problem, DegAngle theta, DegAngle phi) {
  const double sum = theta.deg() + phi.deg() + problem.omega().deg();
  if (!(std::fabs(sum - 180.0) <= tol::kAngleSumInputDeg) || !is_triangle_angle(theta) ||
      !is_triangle_angle(phi))
    throw DomainError("angles are inconsistent with the problem");
  const double sin_omega = sin_deg(problem.omega());
  const double sin_theta = sin_deg(theta);
  const double sin_phi = sin_deg(phi);
  if (sin_theta >= sin_phi) return problem.a() * sin_omega / sin_theta;
  return problem.b() * sin_omega / sin_phi;
}

TriangleSolution solve_sas_sines(const SasProblem& problem) {
  const double a = problem.a();
  const double b = problem.b();
  const DegAngle omega = problem.omega();
  const HalfAngleState state = half_angle_state(problem);
  AnglePair angles = half_angle_split(state.t, omega);

  const double half_rest = (180.0 - omega.deg()) / 2.0;
  if (std::fabs(state.t.deg()) > 0.5 * half_rest) {
    // The smaller angle is (90 - omega/2) - |t|, which cancels when one side
    // dwarfs the other. Evaluate it through
    //   tan(h - |t|) = (1 - |k|) T / (T^2 + |k|),  T = tan(omega/2), k = (a-b)/(a+b)
    // with 1 - |k| = 2 min(a, b) / (a + b).
    const double sum = a + b;
    const double k_abs = std::fabs(a - b) / sum;
    const double one_minus_k = 2.0 * std::min(a, b) / sum;
    const double tan_half = tan_deg(omega / 2.0);
    const DegAngle smaller = arctan_deg(one_minus_k * tan_half / (tan_half * tan_half + k_abs));
    (a > b ? angles.phi : angles.theta) = smaller;
  }
  if (!is_triangle_angle(angles.theta) || !is_triangle_angle(angles.phi))
    throw DomainError("half-angle pipeline produced a degenerate angle");

  const double c = third_side(problem, angles.theta, angles.phi);
  return {a,
          b,
          c,
          angles.theta,
          angles.phi,
          omega,
          Method::sines,
          law_of_sines_residual(a, b, c, angles.theta, angles.phi, omega)};
}

TriangleSolution solve_sas_cosines(const SasProblem& problem) {
  const double a = problem.a();
  const double b = problem.b();
  const DegAngle omega = problem.omega();
  const double cos_omega = cos_deg(omega);
  const double c_squared = a * a + b * b - 2.0 * a * b * cos_omega;
  if (!(c_squared > 0.0) || !std::isfinite(c_squared))
    throw DomainError("law of cosines produced a non-positive c^2");
  const double c = std::sqrt(c_squared);

  // cos(theta) = (b^2 + c^2 - a^2) / (2bc) = (b - a cos omega) / c
  auto clamped_arccos = [](double x) {
    if (std::fabs(x) > 1.0 + tol::kArccosClamp) throw DomainError("arccos argument outside [-1, 1]");
    return arccos_deg(std::clamp(x, -1.0, 1.0));
  };
  const DegAngle rest = DegAngle(180.0) - omega;
  DegAngle theta, phi;
  if (a >= b) {
    theta = clamped_arccos((b - a * cos_omega) / c);
    phi = rest - theta;
  } else {
    phi = clamped_arccos((a - b * cos_omega) / c);
    theta = rest - phi;
  }
  if (!is_triangle_angle(theta) || !is_triangle_angle(phi))
    throw DomainError("law of cosines produced a degenerate angle");
  return {a, b, c, theta, phi, omega, Method::cosines, law_of_sines_residual(a, b, c, theta, phi, omega)};
}

DegAngle t45_omega(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || !(a > b))
    throw DomainError("t = 45 requires a > b > 0");
  // (a^2 - b^2) / (2ab), arranged to avoid overflow in the products.
  const double tan_omega = (a - b) / (2.0 * a) * ((a + b) / b);
  return arctan_deg(tan_omega);
}

double law_of_sines_residual(double a, double b, double c, DegAngle theta, DegAngle phi, DegAngle omega) {
  const double ra = a / sin_deg(theta);
  const double rb = b / sin_deg(phi);
  const double rc = c / sin_deg(omega);
  return std::max({rel_gap(ra, rb), rel_gap(ra, rc), rel_gap(rb, rc)});
}

std::optional<std::string> check_solution(const TriangleSolution& s, const SolutionTolerances& limits) {
  if (!(s.a > 0.0 && s.b > 0.0 && s.c > 0.0)) return "sides must be positive";
  if (!is_triangle_angle(s.theta) || !is_triangle_angle(s.phi) || !is_triangle_angle(s.omega))
    return "angles must lie in (0, 180)";
  if (!(std::fabs(s.theta.deg() + s.phi.deg() + s.omega.deg() - 180.0) <= limits.angle_sum_deg))
    return "angle sum differs from 180";
  if (!(law_of_sines_residual(s.a, s.b, s.c, s.theta, s.phi, s.omega) <= limits.law_of_sines_rel))
    return "law of sines ratios disagree";
  if (!(std::fabs(s.a - s.b) < s.c && s.c < s.a + s.b)) return "triangle inequality fails";
  if ((s.a >= s.b) != (s.theta >= s.phi)) return "side and angle ordering disagree";
  return std::nullopt;
}

}  // namespace sastri
