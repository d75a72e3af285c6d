#include "output.hpp"

#include <cstdio>

namespace sastri::cli {
namespace {

std::string printf_double(const char* fmt, double x) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, fmt, x);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace

std::string fixed6(double x) { return printf_double("%.6f", x); }
std::string sig17(double x) { return printf_double("%.17g", x); }
std::string sci6(double x) { return printf_double("%.6e", x); }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

nlohmann::json solution_json(const TriangleSolution& s) {
  return {{"a", s.a},
          {"b", s.b},
          {"c", s.c},
          {"theta_deg", s.theta.deg()},
          {"phi_deg", s.phi.deg()},
          {"omega_deg", s.omega.deg()},
          {"method", std::string(to_string(s.method))},
          {"residual", s.residual}};
}

nlohmann::json error_json(std::string_view message, nlohmann::json input) {
  return {{"error", std::string(message)}, {"input", std::move(input)}};
}

std::string solution_text(const TriangleSolution& s) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += key;
    out.append(11 - key.size(), ' ');
    out += value;
    out += '\n';
  };
  line("method", std::string(to_string(s.method)));
  line("a", fixed6(s.a));
  line("b", fixed6(s.b));
  line("c", fixed6(s.c));
  line("omega_deg", fixed6(s.omega.deg()));
  line("theta_deg", fixed6(s.theta.deg()));
  line("phi_deg", fixed6(s.phi.deg()));
  line("residual", sci6(s.residual));
  return out;
}

}  // namespace sastri::cli
