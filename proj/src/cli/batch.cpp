#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "output.hpp"
#include "sastri/cli.hpp"
#include "sastri/error.hpp"

namespace sastri::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view name, std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
    throw DomainError(std::string(name) + " is not a number: '" + std::string(text) + "'");
  if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
  return value;
}

bool is_header(const std::vector<std::string_view>& fields) {
  if (fields.size() != 3) return false;
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
  };
  return lower(fields[0]) == "a" && lower(fields[1]) == "b" && lower(fields[2]) == "omega_deg";
}

struct RowResult {
  std::size_t line;
  std::vector<std::string_view> fields;
  std::optional<TriangleSolution> solution;
  std::string error;
};

RowResult process_row(std::size_t line_no, std::string_view line, Method method) {
  RowResult row{line_no, split_commas(line), std::nullopt, {}};
  try {
    if (row.fields.size() != 3)
      throw DomainError("expected 3 fields (a,b,omega_deg), got " + std::to_string(row.fields.size()));
    const double a = parse_number("a", row.fields[0]);
    const double b = parse_number("b", row.fields[1]);
    const double omega = parse_number("omega_deg", row.fields[2]);
    const SasProblem problem(a, b, DegAngle(omega));
    row.solution = method == Method::cosines ? solve_sas_cosines(problem) : solve_sas_sines(problem);
  } catch (const DomainError& e) {
    row.error = e.what();
  }
  return row;
}

nlohmann::json row_input_json(const RowResult& row, std::string_view raw) {
  nlohmann::json in = {{"line", row.line}};
  if (row.fields.size() == 3) {
    static constexpr const char* kNames[] = {"a", "b", "omega_deg"};
    for (std::size_t i = 0; i < 3; ++i) {
      double v = 0.0;
      const auto f = row.fields[i];
      const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec == std::errc() && end == f.data() + f.size() && std::isfinite(v))
        in[kNames[i]] = v;
      else
        in[kNames[i]] = std::string(f);
    }
  } else {
    in["raw"] = std::string(raw);
  }
  return in;
}

}  // namespace

int cmd_batch(const BatchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.method != "sines" && args.method != "cosines") {
    err << "error: method must be sines or cosines\n";
    return kExitUsage;
  }
  if (args.format != "csv" && args.format != "json") {
    err << "error: format must be csv or json\n";
    return kExitUsage;
  }
  std::ifstream in(args.input, std::ios::binary);
  if (!in) {
    err << "error: cannot read input file '" << args.input << "'\n";
    return kExitUsage;
  }
  const Method method = args.method == "cosines" ? Method::cosines : Method::sines;

  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> lines;
  std::string text;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (line_no == 1 && text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);
    const std::string_view body = trim(text);
    if (body.empty() || body.front() == '#') continue;
    if (!seen_data) {
      seen_data = true;
      if (is_header(split_commas(body))) continue;
    }
    lines.push_back({line_no, std::string(body)});
  }
  if (in.bad()) {
    err << "error: cannot read input file '" << args.input << "'\n";
    return kExitUsage;
  }

  std::vector<RowResult> rows;
  rows.reserve(lines.size());
  for (const Line& line : lines) rows.push_back(process_row(line.number, line.text, method));

  if (args.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].solution)
        arr.push_back(solution_json(*rows[i].solution));
      else
        arr.push_back(error_json(rows[i].error, row_input_json(rows[i], lines[i].text)));
    }
    out << arr.dump() << '\n';
    return kExitOk;
  }

  if (rows.empty()) return kExitOk;
  out << "a,b,omega_deg,c,theta_deg,phi_deg,method,residual,error\n";
  for (const RowResult& row : rows) {
    if (row.solution) {
      const TriangleSolution& s = *row.solution;
      out << sig17(s.a) << ',' << sig17(s.b) << ',' << sig17(s.omega.deg()) << ',' << sig17(s.c) << ','
          << sig17(s.theta.deg()) << ',' << sig17(s.phi.deg()) << ',' << to_string(s.method) << ','
          << sig17(s.residual) << ",\n";
    } else {
      for (std::size_t i = 0; i < 3; ++i)
        out << (i < row.fields.size() && row.fields.size() == 3 ? csv_field(row.fields[i]) : "") << ',';
      out << ",,,,," << csv_field(row.error) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace sastri::cli
