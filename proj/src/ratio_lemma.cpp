#include "sastri/ratio_lemma.hpp"

#include <cmath>

#include "sastri/error.hpp"
#include "sastri/tolerances.hpp"

namespace sastri {

double componendo(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("componendo arguments must be finite");
  const double sum = x + y;
  if (std::fabs(sum) <= tol::kComponendoZero) throw DomainError("componendo requires x + y != 0");
  return (x - y) / sum;
}

std::pair<double, double> lemma_equivalence_check(double a, double b, double c, double d) {
  if (b == 0.0 || d == 0.0) throw DomainError("ratio lemma requires b * d != 0");
  const double left = componendo(a, b);
  const double right = componendo(c, d);
  return {std::fabs(a / b - c / d), std::fabs(left - right)};
}

}  // namespace sastri
