#pragma once

// Accuracy harness: seeded SAS corpora in four conditioning regimes, an
// extended-precision reference solver, and per-problem error comparison of
// the sines and cosines routes against it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sastri/sas_solver.hpp"

namespace sastri {

enum class Regime { well_conditioned, thin_isoceles, near_straight, extreme_ratio };

inline constexpr Regime kAllRegimes[] = {Regime::well_conditioned, Regime::thin_isoceles,
                                         Regime::near_straight, Regime::extreme_ratio};

std::string_view to_string(Regime r);
std::optional<Regime> parse_regime(std::string_view name);

struct CorpusSpec {
  Regime regime;
  std::size_t count;
  std::uint64_t seed;
};

/// Deterministic for a fixed seed. Regime ranges:
///   well_conditioned  a, b in [0.1, 10], omega in [10, 170]
///   thin_isoceles     a/b in [1 - 1e-6, 1 + 1e-6], omega in [1e-6, 1e-2] (log-uniform)
///   near_straight     a, b in [0.1, 10], 180 - omega in [1e-9, 1] (log-uniform)
///   extreme_ratio     a/b in [1e6, 1e12] (log-uniform), omega in [10, 170]
/// Throws DomainError if count == 0.
std::vector<SasProblem> generate_corpus(const CorpusSpec& spec);

/// Solves in binary128 (113-bit significand) through vertex coordinates,
///   c^2 = (a - b)^2 + 4ab sin^2(omega/2),
///   theta = atan2(a sin omega, (b - a) + 2a sin^2(omega/2)),
/// then rounds to double. Shares no formula with either double-precision route.
TriangleSolution reference_solution(const SasProblem& problem);

struct MethodErrors {
  std::optional<std::string> failure;
  double c_rel = 0.0;
  double theta_rel = 0.0;
  double phi_rel = 0.0;
};

struct ComparisonRecord {
  SasProblem problem;
  MethodErrors sines;
  MethodErrors cosines;
};

struct ErrorStats {
  double max = 0.0;
  double median = 0.0;

  friend bool operator==(const ErrorStats&, const ErrorStats&) = default;
};

struct MethodAggregate {
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  ErrorStats c;
  ErrorStats theta;
  ErrorStats phi;

  friend bool operator==(const MethodAggregate&, const MethodAggregate&) = default;
};

struct ComparisonReport {
  std::string regime;
  std::vector<ComparisonRecord> records;
  MethodAggregate sines;
  MethodAggregate cosines;
};

/// Runs sines, cosines and reference on every problem, in order. Solver
/// failures are recorded on the record and excluded from the statistics.
/// Throws DomainError on an empty list.
ComparisonReport compare_methods(std::span<const SasProblem> problems, std::string regime = "unlabeled");

/// Statistics over the successful records for one method (sines or cosines).
MethodAggregate aggregate(std::span<const ComparisonRecord> records, Method method);

}  // namespace sastri
