#include <ostream>

#include "output.hpp"
#include "sastri/cli.hpp"
#include "sastri/error.hpp"
#include "sastri/family.hpp"

namespace sastri::cli {

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<FamilySample> samples;
  try {
    samples = family_sweep(args.r_min, args.r_max, args.n, args.b);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << "r,sin_theta,sin_phi,theta_deg,phi_deg,c_over_b\n";
  for (const FamilySample& s : samples) {
    out << sig17(s.r) << ',' << sig17(s.sin_theta) << ',' << sig17(s.sin_phi) << ',' << sig17(s.theta.deg())
        << ',' << sig17(s.phi.deg()) << ',' << sig17(s.c_over_b) << '\n';
  }
  return kExitOk;
}

}  // namespace sastri::cli
