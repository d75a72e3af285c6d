#include <cstdio>
#include <ostream>
#include <vector>

#include "output.hpp"
#include "sastri/accuracy.hpp"
#include "sastri/cli.hpp"
#include "sastri/error.hpp"

namespace sastri::cli {
namespace {

nlohmann::json errors_json(const MethodErrors& e) {
  if (e.failure) return {{"error", *e.failure}};
  return {{"c_rel_err", e.c_rel}, {"theta_rel_err", e.theta_rel}, {"phi_rel_err", e.phi_rel}};
}

nlohmann::json aggregate_json(const MethodAggregate& m) {
  auto stats = [](const ErrorStats& s) { return nlohmann::json{{"max", s.max}, {"median", s.median}}; };
  return {{"evaluated", m.evaluated},
          {"failures", m.failures},
          {"c_rel_err", stats(m.c)},
          {"theta_rel_err", stats(m.theta)},
          {"phi_rel_err", stats(m.phi)}};
}

nlohmann::json report_json(const ComparisonReport& r, const CompareArgs& args) {
  nlohmann::json records = nlohmann::json::array();
  for (const ComparisonRecord& rec : r.records) {
    records.push_back({{"a", rec.problem.a()},
                       {"b", rec.problem.b()},
                       {"omega_deg", rec.problem.omega().deg()},
                       {"sines", errors_json(rec.sines)},
                       {"cosines", errors_json(rec.cosines)}});
  }
  return {{"regime", r.regime},
          {"count", r.records.size()},
          {"seed", args.seed},
          {"aggregates", {{"sines", aggregate_json(r.sines)}, {"cosines", aggregate_json(r.cosines)}}},
          {"records", std::move(records)}};
}

void report_text(const ComparisonReport& r, const CompareArgs& args, std::ostream& out) {
  out << "regime " << r.regime << " (count " << r.records.size() << ", seed " << args.seed << ")\n";
  char line[256];
  std::snprintf(line, sizeof line, "  %-8s %9s %13s %13s %13s %13s %13s %13s\n", "method", "failures", "max_c",
                "median_c", "max_theta", "median_theta", "max_phi", "median_phi");
  out << line;
  auto row = [&](const char* name, const MethodAggregate& m) {
    std::snprintf(line, sizeof line, "  %-8s %9zu %13.6e %13.6e %13.6e %13.6e %13.6e %13.6e\n", name, m.failures,
                  m.c.max, m.c.median, m.theta.max, m.theta.median, m.phi.max, m.phi.median);
    out << line;
  };
  row("sines", r.sines);
  row("cosines", r.cosines);
}

}  // namespace

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "text" && args.format != "json") {
    err << "error: format must be text or json\n";
    return kExitUsage;
  }
  if (args.count == 0) {
    err << "error: count must be at least 1\n";
    return kExitUsage;
  }
  std::vector<Regime> regimes;
  if (args.regime == "all") {
    regimes.assign(std::begin(kAllRegimes), std::end(kAllRegimes));
  } else if (const auto r = parse_regime(args.regime)) {
    regimes.push_back(*r);
  } else {
    err << "error: unknown regime '" << args.regime << "'\n";
    return kExitUsage;
  }

  std::vector<ComparisonReport> reports;
  try {
    for (Regime regime : regimes) {
      const auto corpus = generate_corpus({regime, args.count, args.seed});
      reports.push_back(compare_methods(corpus, std::string(to_string(regime))));
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (args.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, args));
    out << arr.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) out << '\n';
      report_text(reports[i], args, out);
    }
  }
  return kExitOk;
}

}  // namespace sastri::cli
