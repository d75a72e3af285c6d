#pragma once

// Numerical tolerances for IEEE-754 binary64. Angles are in degrees.

namespace sastri::tol {

/// Distance (degrees) from a tangent/cotangent pole treated as the pole itself.
inline constexpr double kPoleDeg = 1e-12;

/// |x + y| at or below this is treated as zero by the componendo transform.
inline constexpr double kComponendoZero = 1e-300;

/// arccos arguments within this window outside [-1, 1] are clamped.
inline constexpr double kArccosClamp = 1e-12;

/// Angle-sum consistency required by third_side.
inline constexpr double kAngleSumInputDeg = 1e-9;

/// TriangleSolution invariants.
inline constexpr double kAngleSumDeg = 1e-10;
inline constexpr double kLawOfSinesRel = 1e-10;

/// HalfAngleState: tan(t) against nu.
inline constexpr double kHalfAngleRel = 1e-12;

/// FamilySample invariants.
inline constexpr double kFamilyRel = 1e-12;
inline constexpr double kFamilyAngleSumDeg = 1e-10;

}  // namespace sastri::tol
