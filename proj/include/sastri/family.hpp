#pragma once

// One-parameter family of SAS triangles with a/b = r > 1 and omega = 60:
//
//   sin theta = r sqrt(3) / (2 sqrt(r^2 - r + 1))
//   sin phi   =   sqrt(3) / (2 sqrt(r^2 - r + 1))
//   c / b     =              sqrt(r^2 - r + 1)
//
// r^2 - r + 1 = f(r) / 4 with f(r) = 3(r - 1)^2 + (r + 1)^2 = 4(r - 1/2)^2 + 3,
// increasing on (1, inf). As r grows from 1, phi falls from 60 toward 0 and
// theta = 120 - phi rises from 60 toward 120 (theta = 90, phi = 30 at r = 2).

#include <cstddef>
#include <vector>

#include "sastri/degree_trig.hpp"

namespace sastri {

inline constexpr double kFamilyOmegaDeg = 60.0;

struct FamilySample {
  double r;
  double sin_theta;
  double sin_phi;
  DegAngle theta;
  DegAngle phi;
  double c_over_b;
};

/// f(r) = 3(r - 1)^2 + (r + 1)^2; minimum 3 at r = 1/2.
double trinomial_f(double r);

/// Closed-form sines and c/b; theta and phi come from solve_sas_sines because
/// arcsin cannot tell an obtuse theta (r > 2) from its supplement.
FamilySample family_point(double r, double b = 1.0);

/// n >= 2 samples, geometrically spaced on [r_min, r_max], endpoints exact.
std::vector<FamilySample> family_sweep(double r_min, double r_max, std::size_t n, double b = 1.0);

}  // namespace sastri
