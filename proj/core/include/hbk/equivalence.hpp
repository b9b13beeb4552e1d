#pragma once

#include <string>
#include <vector>

#include "hbk/emknot.hpp"
#include "hbk/invariants.hpp"

namespace hbk {

enum class VerdictReason { TypeMismatch, SlopeMatch, SlopeMismatch };

const char* to_string(VerdictReason r);  // "type-mismatch" / "slope-match" / "slope-mismatch"

// One identity application inside a witness chain: the move applied and the
// presentation it reached.
struct RewriteStep {
  std::string move;
  Side side;
  EMParams params;
};

struct EquivalenceVerdict {
  bool equivalent;
  VerdictReason reason;
  // Best-effort chain of identity applications from the first knot to the
  // second, found by a bounded search; informational only and possibly empty
  // even for equivalent knots.
  std::vector<RewriteStep> witness;
};

// Knots are equivalent exactly when their characteristic-annulus slopes
// agree: the unordered pair {r_a, r_b} for two asymmetric exteriors, the
// single slope r_c for two left-form knots.  Knots of different decomposition
// type are never equivalent.
EquivalenceVerdict equivalent(const HandlebodyKnot& a, const HandlebodyKnot& b);

// Whether the mirror image of a is equivalent to b.
EquivalenceVerdict mirror_equivalent(const HandlebodyKnot& a, const HandlebodyKnot& b);

// Exterior homeomorphism test for two left-form knots: the characteristic
// slopes must agree modulo Z and up to sign.  The criterion is established
// only in the left-form regime, so other inputs throw std::invalid_argument.
bool exteriors_homeomorphic(const HandlebodyKnot& a, const HandlebodyKnot& b);

// The family of left knots (*, m, 0, p) for p in [p_from, p_to]: pairwise
// inequivalent handlebody-knots sharing one exterior.  Requires m != 0, 1.
struct FamilyEntry {
  HandlebodyKnot knot;
  ProjRat r_c;
};

struct FamilyReport {
  long long m;
  std::vector<FamilyEntry> members;
  bool pairwise_inequivalent;
  bool pairwise_exteriors_homeomorphic;
};

FamilyReport enumerate_family(long long m, long long p_from, long long p_to);

}  // namespace hbk
