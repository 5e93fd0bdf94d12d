#ifndef AHE_VERIFY_HPP
#define AHE_VERIFY_HPP

#include <string>
#include <vector>

namespace ahe {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The acceptance criteria, one result per criterion, each at its pinned
// tolerance.
std::vector<CheckResult> run_acceptance_suite(unsigned seed = 20240801);

// Superset: the acceptance criteria plus the cross-module identity checks
// (conformal two-path agreement, gradient normalization, rescaling isometry,
// two-preimage scan).
std::vector<CheckResult> run_full_verification(unsigned seed = 20240801);

}  // namespace ahe

#endif
