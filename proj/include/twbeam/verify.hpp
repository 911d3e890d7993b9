#pragma once

#include <string>
#include <vector>

#include "twbeam/beam.hpp"
#include "twbeam/sweep.hpp"

namespace twbeam {

struct VerifyCheck {
  std::string name;
  double measured;
  double limit;     // pass when measured <= limit
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Canonical beams used by the built-in verification cases.
BeamConfig table1_beam();                  // uniform 2 m, 30x10 mm, Al
AbsorberConfig table1_absorber();          // L1 = 0.8 m, k = 5.625e6, c = 875
BeamConfig aggressive_taper_beam();        // 45/15 x 15/5 mm, area ratio 9
BeamConfig motaharibidgoli_beam();         // 1.5812 m, 12.7 x 1.5875 mm
BeamConfig craver_jampala_beam();          // taper 1.4, fixed end larger

/// Reference values for the tapered-cantilever fundamental frequency,
/// nondimensionalized as omega_1 sqrt(rho A(L) L^4 / (E I(L))), at
/// k_bar = k L^3 / (E I(L)).
struct FrequencyReferenceRow {
  double k_bar;
  double exact;          // closed-form reference solution
  double present_study;  // values this formulation reproduces
};
const std::vector<FrequencyReferenceRow>& frequency_reference_rows();

/// Max envelope deviation between an n-mode and an n_ref-mode solution,
/// as a fraction of the n_ref peak envelope value.
double envelope_deviation(const BeamConfig& beam,
                          const AbsorberConfig& absorber,
                          const ExcitationConfig& excitation, std::size_t n,
                          std::size_t n_ref, std::size_t grid_points = 2001);

/// Built-in verification: reference frequency rows, convergence of the
/// uniform and tapered cases, the traveling-wave benchmark minimum,
/// rank-1/direct equivalence, and basis orthogonality.
VerifyReport run_verification(unsigned threads = 0);

}  // namespace twbeam
