#pragma once

// Shared output helpers for the CLI commands.

#include <json.hpp>
#include <string>
#include <string_view>

#include "sastri/sas_solver.hpp"

namespace sastri::cli {

/// Six decimals, as used by text output.
std::string fixed6(double x);

/// 17 significant digits, as used by CSV output.
std::string sig17(double x);

/// Scientific with six decimals.
std::string sci6(double x);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(std::string_view text);

/// Keys: a, b, c, theta_deg, phi_deg, omega_deg, method, residual.
nlohmann::json solution_json(const TriangleSolution& s);

nlohmann::json error_json(std::string_view message, nlohmann::json input);

/// Aligned "key  value" block with six-decimal numbers.
std::string solution_text(const TriangleSolution& s);

}  // namespace sastri::cli
