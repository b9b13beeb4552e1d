#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hbk/emknot.hpp"

namespace hbk {

struct Violation {
  std::optional<Side> side;  // set when the offending object is a knot
  EMParams params;
  std::string detail;
};

struct CheckResult {
  std::string name;
  long long instances = 0;
  std::vector<Violation> violations;
};

struct VerificationReport {
  std::string suite;
  int box_bound = 0;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool passed() const;
  long long total_violations() const;
};

// Replays every nonvanishing claim, polynomial identity and slope estimate
// over the admissible tuples with coordinates bounded by `bound`:
// lambda parity, the nonvanishing of phi/delta/|lambda|>2, the delta-phi
// relation, the unimodular pairing, the delta estimates, the r_a/r_b/rb~/r_c
// estimate brackets, and r_a != r_b.  The r_a lower bound for p not in {0,1}
// is checked at 35/3, the value the estimate's own derivation yields
// (12 - 1/3); the bound is attained at (3,2,0,2).  Requires bound >= 3.
VerificationReport verify_lemmas(int bound);

// Cross-checks every closed-form slope against its three independent
// oracles on the same box: the mod-Z continued-fraction slopes, the 4x4
// determinant magnitudes, the denominator magnitudes; plus the tangle
// fraction identities, admissibility preservation of every rewrite, the
// mirror negation of all slope data, and agreement of the specialized and
// generic slope formulas.  Requires bound >= 3.
VerificationReport verify_oracles(int bound);

// Groups the admissible knots on the box by their characteristic-annulus
// slopes and verifies each group is a single orbit of the rewrite moves,
// computed inside the enlarged box bound+2 so images near the boundary stay
// visible.  Also checks that every rewrite edge preserves slopes and that
// slope-equal left-form knots carry identical slope pairs.  Requires
// bound >= 3.
VerificationReport collision_search(int bound);

}  // namespace hbk
