#pragma once

// Side-angle-side triangle solving. Sides a and b enclose the angle omega;
// theta is opposite a, phi is opposite b, and c is opposite omega.
//
// The primary route never forms a^2 + b^2 - 2ab cos(omega):
//
//   nu    = cot(omega/2) (a - b) / (a + b)
//   t     = arctan(nu)                      in (-90, 90), t = (theta - phi) / 2
//   theta = 90 + t - omega/2
//   phi   = 90 - (t + omega/2)
//   c     = a sin(omega) / sin(theta)       (or b sin(omega) / sin(phi))
//
// solve_sas_cosines is the textbook route and serves as the oracle.

#include <optional>
#include <string>
#include <string_view>

#include "sastri/degree_trig.hpp"
#include "sastri/tolerances.hpp"

namespace sastri {

/// Validated SAS input: a > 0, b > 0, 0 < omega < 180 (all finite).
class SasProblem {
 public:
  SasProblem(double a, double b, DegAngle omega);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  DegAngle omega() const noexcept { return omega_; }

  friend bool operator==(const SasProblem&, const SasProblem&) = default;

 private:
  double a_;
  double b_;
  DegAngle omega_;
};

enum class Method { sines, cosines, reference };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// nu and t = arctan(nu). Invariants: -90 < t < 90, tan t = nu, sign t = sign nu.
struct HalfAngleState {
  double nu;
  DegAngle t;
};

struct AnglePair {
  DegAngle theta;
  DegAngle phi;
};

struct TriangleSolution {
  double a;
  double b;
  double c;
  DegAngle theta;
  DegAngle phi;
  DegAngle omega;
  Method method;
  /// Max pairwise relative deviation among a/sin theta, b/sin phi, c/sin omega.
  double residual;
};

/// nu = componendo(a, b) / tan(omega/2); exactly 0 when a == b.
double nu_from(const SasProblem& problem);

/// The unique t in (-90, 90) with tan t = nu.
DegAngle t_from_nu(double nu);

HalfAngleState half_angle_state(const SasProblem& problem);

/// theta = 90 + t - omega/2, phi = 90 - (t + omega/2). Throws DomainError if
/// either angle falls outside (0, 180).
AnglePair angles_from_t(DegAngle t, DegAngle omega);

/// Third side from the Law of Sines, dividing by the larger of sin theta and
/// sin phi. Requires theta + phi + omega = 180 within tol::kAngleSumInputDeg.
double third_side(const SasProblem& problem, DegAngle theta, DegAngle phi);

TriangleSolution solve_sas_sines(const SasProblem& problem);

/// c = sqrt(a^2 + b^2 - 2ab cos omega); the angle opposite the longer of a, b
/// from arccos, the other from the angle sum.
TriangleSolution solve_sas_cosines(const SasProblem& problem);

/// Included angle in (0, 90) for which the half-angle t equals 45 degrees,
/// i.e. tan omega = (a^2 - b^2) / (2ab). Requires a > b > 0.
DegAngle t45_omega(double a, double b);

double law_of_sines_residual(double a, double b, double c, DegAngle theta, DegAngle phi, DegAngle omega);

struct SolutionTolerances {
  double angle_sum_deg = tol::kAngleSumDeg;
  double law_of_sines_rel = tol::kLawOfSinesRel;
};

/// First violated TriangleSolution invariant, or nullopt.
std::optional<std::string> check_solution(const TriangleSolution& s, const SolutionTolerances& limits = {});

}  // namespace sastri
