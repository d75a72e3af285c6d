#include "sastri/family.hpp"

#include <cmath>
#include <numbers>

#include "sastri/error.hpp"
#include "sastri/sas_solver.hpp"

namespace sastri {

double trinomial_f(double r) { return 3.0 * (r - 1.0) * (r - 1.0) + (r + 1.0) * (r + 1.0); }

FamilySample family_point(double r, double b) {
  if (!std::isfinite(r) || !(r > 1.0)) throw DomainError("family ratio r must exceed 1");
  if (!std::isfinite(b) || !(b > 0.0)) throw DomainError("side b must be positive and finite");
  const double root = std::sqrt(r * r - r + 1.0);
  const double sin_phi = std::numbers::sqrt3 / (2.0 * root);
  const double sin_theta = r * std::numbers::sqrt3 / (2.0 * root);
  const TriangleSolution solved = solve_sas_sines(SasProblem(r * b, b, DegAngle(kFamilyOmegaDeg)));
  return {r, sin_theta, sin_phi, solved.theta, solved.phi, root};
}

std::vector<FamilySample> family_sweep(double r_min, double r_max, std::size_t n, double b) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_min > 1.0) || !(r_min < r_max))
    throw DomainError("sweep requires 1 < r_min < r_max");
  if (n < 2) throw DomainError("sweep requires at least 2 samples");
  const double log_span = std::log(r_max / r_min);
  std::vector<FamilySample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r;
    if (i == 0) {
      r = r_min;
    } else if (i + 1 == n) {
      r = r_max;
    } else {
      r = r_min * std::exp(log_span * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.push_back(family_point(r, b));
  }
  return out;
}

}  // namespace sastri
