#include <algorithm>
#include <cmath>

#include "sastri/accuracy.hpp"
#include "sastri/error.hpp"

namespace sastri {
namespace {

double rel_error(double value, double ref) { return std::fabs(value - ref) / std::fabs(ref); }

MethodErrors measure(const SasProblem& problem, TriangleSolution (*solve)(const SasProblem&),
                     const TriangleSolution& ref) {
  MethodErrors e;
  try {
    const TriangleSolution s = solve(problem);
    e.c_rel = rel_error(s.c, ref.c);
    e.theta_rel = rel_error(s.theta.deg(), ref.theta.deg());
    e.phi_rel = rel_error(s.phi.deg(), ref.phi.deg());
  } catch (const DomainError& err) {
    e.failure = err.what();
  }
  return e;
}

ErrorStats stats(std::vector<double> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return {values.back(), median};
}

}  // namespace

ComparisonReport compare_methods(std::span<const SasProblem> problems, std::string regime) {
  if (problems.empty()) throw DomainError("comparison needs at least one problem");
  ComparisonReport report;
  report.regime = std::move(regime);
  report.records.reserve(problems.size());
  for (const SasProblem& p : problems) {
    ComparisonRecord rec{p, {}, {}};
    try {
      const TriangleSolution ref = reference_solution(p);
      rec.sines = measure(p, &solve_sas_sines, ref);
      rec.cosines = measure(p, &solve_sas_cosines, ref);
    } catch (const DomainError& err) {
      rec.sines.failure = rec.cosines.failure = std::string("reference: ") + err.what();
    }
    report.records.push_back(std::move(rec));
  }
  report.sines = aggregate(report.records, Method::sines);
  report.cosines = aggregate(report.records, Method::cosines);
  return report;
}

MethodAggregate aggregate(std::span<const ComparisonRecord> records, Method method) {
  if (method == Method::reference) throw DomainError("the reference is not compared against itself");
  std::vector<double> c, theta, phi;
  MethodAggregate out;
  for (const ComparisonRecord& rec : records) {
    const MethodErrors& e = method == Method::sines ? rec.sines : rec.cosines;
    if (e.failure) {
      ++out.failures;
      continue;
    }
    ++out.evaluated;
    c.push_back(e.c_rel);
    theta.push_back(e.theta_rel);
    phi.push_back(e.phi_rel);
  }
  out.c = stats(std::move(c));
  out.theta = stats(std::move(theta));
  out.phi = stats(std::move(phi));
  return out;
}

}  // namespace sastri
