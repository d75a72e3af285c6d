#include <cmath>
#include <random>

#include "sastri/accuracy.hpp"
#include "sastri/error.hpp"

namespace sastri {
namespace {

// Uniform draws built from the top 53 bits of mt19937_64 so the stream does
// not depend on the standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return std::fmin(hi, lo + (hi - lo) * unit()); }

  double log_uniform(double lo, double hi) {
    const double x = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * unit());
    return std::fmin(hi, std::fmax(lo, x));
  }

 private:
  std::mt19937_64 engine_;
};

SasProblem draw_problem(Regime regime, Draw& draw) {
  switch (regime) {
    case Regime::well_conditioned: {
      const double a = draw.uniform(0.1, 10.0);
      const double b = draw.uniform(0.1, 10.0);
      return SasProblem(a, b, DegAngle(draw.uniform(10.0, 170.0)));
    }
    case Regime::thin_isoceles: {
      const double b = draw.uniform(0.1, 10.0);
      const double ratio = draw.uniform(1.0 - 1e-6, 1.0 + 1e-6);
      return SasProblem(b * ratio, b, DegAngle(draw.log_uniform(1e-6, 1e-2)));
    }
    case Regime::near_straight: {
      const double a = draw.uniform(0.1, 10.0);
      const double b = draw.uniform(0.1, 10.0);
      return SasProblem(a, b, DegAngle(180.0 - draw.log_uniform(1e-9, 1.0)));
    }
    case Regime::extreme_ratio: {
      const double b = draw.uniform(0.1, 10.0);
      const double ratio = draw.log_uniform(1e6, 1e12);
      return SasProblem(b * ratio, b, DegAngle(draw.uniform(10.0, 170.0)));
    }
  }
  throw DomainError("unknown regime");
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::well_conditioned: return "well_conditioned";
    case Regime::thin_isoceles: return "thin_isoceles";
    case Regime::near_straight: return "near_straight";
    case Regime::extreme_ratio: return "extreme_ratio";
  }
  return "unknown";
}

std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : kAllRegimes)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

std::vector<SasProblem> generate_corpus(const CorpusSpec& spec) {
  if (spec.count == 0) throw DomainError("corpus count must be at least 1");
  Draw draw(spec.seed);
  std::vector<SasProblem> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(draw_problem(spec.regime, draw));
  return out;
}

}  // namespace sastri
