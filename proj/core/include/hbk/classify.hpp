#pragma once

#include <set>

#include "hbk/emknot.hpp"
#include "hbk/invariants.hpp"

namespace hbk {

// The two possible shapes of the canonical decomposition of the exterior:
// an I-bundle over a once-punctured Moebius band (M) with two characteristic
// annuli, or over a once-punctured Klein bottle (K) with one.
enum class JsjType { M, K };

enum class McgGroup { Z2, Z2xZ2 };

const char* to_string(JsjType t);
const char* to_string(McgGroup g);

JsjType jsj_type(const HandlebodyKnot& hk);

// Symmetry group of the pair.  Type M is always Z2; type K is Z2 x Z2
// exactly when the slope pair is symmetric (r1 = r2), which happens exactly
// on the left presentations (*,±1,n,0) and (*,2,0,1).
McgGroup mcg(const HandlebodyKnot& hk);

struct Classification {
  JsjType jsj_type;
  McgGroup mcg;
  bool mcg_positive_equal;  // orientation-preserving subgroup is the whole group
};

Classification classify(const HandlebodyKnot& hk);

// Census of essential annuli in the exterior.  For type K the separating
// non-characteristic annuli form a family indexed by an integer; the indices
// listed are the finitely many of annulus type 3-2, every other index is
// type 4-1, and the unique non-separating annulus (type 3-3) accounts for
// the +1 in the non-4-1 count.  Type M has two characteristic annuli, one
// type 4-1 annulus and no indexed family.
struct AnnulusCensus {
  std::set<long long> type32_indices;
  int noncharacteristic_non41_count;
  bool has_type33;
  int characteristic_count;
};

AnnulusCensus annulus_census(const HandlebodyKnot& hk);

}  // namespace hbk
