#include <ostream>
#include <vector>

#include "output.hpp"
#include "sastri/cli.hpp"
#include "sastri/error.hpp"

namespace sastri::cli {
namespace {

nlohmann::json solve_input_json(const SolveArgs& args) {
  nlohmann::json in = {{"a", args.a}, {"b", args.b}};
  if (args.omega_deg) in["omega_deg"] = *args.omega_deg;
  if (args.tan_half_omega) in["tan_half_omega"] = *args.tan_half_omega;
  return in;
}

int fail(const SolveArgs& args, const std::string& message, std::ostream& out, std::ostream& err) {
  if (args.format == "json") out << error_json(message, solve_input_json(args)).dump() << '\n';
  err << "error: " << message << '\n';
  return kExitUsage;
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  if (args.omega_deg.has_value() == args.tan_half_omega.has_value())
    return fail(args, "exactly one of --omega-deg or --tan-half-omega is required", out, err);
  if (args.method != "sines" && args.method != "cosines" && args.method != "both")
    return fail(args, "method must be sines, cosines or both", out, err);
  if (args.format != "text" && args.format != "json") return fail(args, "format must be text or json", out, err);

  std::vector<TriangleSolution> solutions;
  try {
    const DegAngle omega =
        args.omega_deg ? DegAngle(*args.omega_deg) : angle_from_half_tangent(*args.tan_half_omega);
    const SasProblem problem(args.a, args.b, omega);
    if (args.method != "cosines") solutions.push_back(solve_sas_sines(problem));
    if (args.method != "sines") solutions.push_back(solve_sas_cosines(problem));
  } catch (const DomainError& e) {
    return fail(args, e.what(), out, err);
  }

  if (args.format == "json") {
    if (solutions.size() == 1) {
      out << solution_json(solutions.front()).dump() << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& s : solutions) arr.push_back(solution_json(s));
      out << arr.dump() << '\n';
    }
    return kExitOk;
  }
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (i > 0) out << '\n';
    out << solution_text(solutions[i]);
  }
  return kExitOk;
}

}  // namespace sastri::cli
