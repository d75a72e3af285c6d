#pragma once

#include <utility>

namespace sastri {

/// (x - y) / (x + y). Throws DomainError when |x + y| <= tol::kComponendoZero.
/// Antisymmetric bit for bit: componendo(x, y) == -componendo(y, x).
double componendo(double x, double y);

/// For a/b = c/d  <=>  (a-b)/(a+b) = (c-d)/(c+d), returns
/// (|a/b - c/d|, |componendo(a, b) - componendo(c, d)|). One component is
/// (numerically) zero exactly when the other is. Requires bd != 0,
/// a + b != 0, c + d != 0.
std::pair<double, double> lemma_equivalence_check(double a, double b, double c, double d);

}  // namespace sastri
