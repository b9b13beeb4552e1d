#pragma once

#include <string>

#include <json.hpp>

#include "hbk/classify.hpp"
#include "hbk/equivalence.hpp"
#include "hbk/invariants.hpp"
#include "hbk/verify.hpp"

namespace hbk::cli {

using nlohmann::json;

// Rationals serialize as exact integer pairs, never as decimals.
json rational_json(const ProjRat& x);

json invariants_json(const HandlebodyKnot& hk);
json classify_json(const HandlebodyKnot& hk);
json verdict_json(const EquivalenceVerdict& v);
json exterior_json(bool homeomorphic);
json family_json(const FamilyReport& report);
json census_json(const HandlebodyKnot& hk, const AnnulusCensus& census);
json report_json(const VerificationReport& report);

std::string invariants_table(const HandlebodyKnot& hk);
std::string classify_table(const HandlebodyKnot& hk);
std::string verdict_table(const EquivalenceVerdict& v);
std::string family_table(const FamilyReport& report);
std::string census_table(const HandlebodyKnot& hk, const AnnulusCensus& census);
std::string report_table(const VerificationReport& report);

}  // namespace hbk::cli
