#include "render.hpp"

#include <sstream>

namespace hbk::cli {

namespace {

json params_json(const EMParams& q) {
  return json{{"l", q.l}, {"m", q.m}, {"n", q.n}, {"p", q.p}};
}

json knot_json(const HandlebodyKnot& hk) {
  json out{{"side", to_string(hk.side())}, {"params", params_json(hk.params())}};
  if (hk.side() == Side::Left) out["l_irrelevant"] = true;
  return out;
}

json slopes_json(const SlopeData& s) {
  if (std::holds_alternative<TypeMSlopes>(s)) {
    const auto& m = std::get<TypeMSlopes>(s);
    return json{{"r_a", rational_json(m.r_a)}, {"r_b", rational_json(m.r_b)}};
  }
  const auto& k = std::get<TypeKSlopes>(s);
  return json{{"r1", rational_json(k.r1)},
              {"r2", rational_json(k.r2)},
              {"r_c", rational_json(k.r_c)}};
}

std::string knot_header(const HandlebodyKnot& hk) {
  std::ostringstream out;
  out << "side      " << to_string(hk.side()) << "\n";
  const EMParams& q = hk.params();
  out << "params    l=" << q.l << (hk.side() == Side::Left ? " (irrelevant)" : "")
      << " m=" << q.m << " n=" << q.n << " p=" << q.p << "\n";
  return out.str();
}

}  // namespace

json rational_json(const ProjRat& x) {
  return json{{"num", to_int64(x.num())}, {"den", to_int64(x.den())}};
}

json invariants_json(const HandlebodyKnot& hk) {
  DerivedQuantities d = derived(hk.params());
  json out = knot_json(hk);
  out["lambda"] = to_int64(d.lambda);
  out["phi"] = to_int64(d.phi);
  out["delta"] = to_int64(d.delta);
  out["jsj_type"] = to_string(jsj_type(hk));
  out["slopes"] = slopes_json(characteristic_slopes(hk));
  return out;
}

json classify_json(const HandlebodyKnot& hk) {
  Classification c = classify(hk);
  json out = knot_json(hk);
  out["jsj_type"] = to_string(c.jsj_type);
  out["mcg"] = to_string(c.mcg);
  out["mcg_positive_equal"] = c.mcg_positive_equal;
  return out;
}

json verdict_json(const EquivalenceVerdict& v) {
  json steps = json::array();
  for (const RewriteStep& s : v.witness) {
    json step{{"move", s.move}, {"side", to_string(s.side)}, {"params", params_json(s.params)}};
    steps.push_back(step);
  }
  return json{{"equivalent", v.equivalent}, {"reason", to_string(v.reason)}, {"witness", steps}};
}

json exterior_json(bool homeomorphic) { return json{{"exteriors_homeomorphic", homeomorphic}}; }

json family_json(const FamilyReport& report) {
  json members = json::array();
  for (const FamilyEntry& e : report.members) {
    json entry = knot_json(e.knot);
    entry["r_c"] = rational_json(e.r_c);
    members.push_back(entry);
  }
  return json{{"m", report.m},
              {"members", members},
              {"pairwise_inequivalent", report.pairwise_inequivalent},
              {"pairwise_exteriors_homeomorphic", report.pairwise_exteriors_homeomorphic}};
}

json census_json(const HandlebodyKnot& hk, const AnnulusCensus& census) {
  json out = knot_json(hk);
  out["jsj_type"] = to_string(jsj_type(hk));
  out["type32_indices"] = census.type32_indices;
  out["noncharacteristic_non41_count"] = census.noncharacteristic_non41_count;
  out["has_type33"] = census.has_type33;
  out["characteristic_count"] = census.characteristic_count;
  return out;
}

json report_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json violations = json::array();
    for (const Violation& v : c.violations) {
      json item{{"l", v.params.l}, {"m", v.params.m}, {"n", v.params.n}, {"p", v.params.p},
                {"detail", v.detail}};
      item["side"] = v.side ? json(to_string(*v.side)) : json(nullptr);
      violations.push_back(item);
    }
    checks.push_back(json{
        {"name", c.name}, {"instances", c.instances}, {"violations", violations}});
  }
  return json{{"suite", report.suite},
              {"box_bound", report.box_bound},
              {"elapsed_ms", report.elapsed.count()},
              {"passed", report.passed()},
              {"checks", checks}};
}

std::string invariants_table(const HandlebodyKnot& hk) {
  DerivedQuantities d = derived(hk.params());
  std::ostringstream out;
  out << knot_header(hk);
  out << "lambda    " << to_string(d.lambda) << "\n";
  out << "phi       " << to_string(d.phi) << "\n";
  out << "delta     " << to_string(d.delta) << "\n";
  out << "jsj_type  " << to_string(jsj_type(hk)) << "\n";
  SlopeData s = characteristic_slopes(hk);
  if (std::holds_alternative<TypeMSlopes>(s)) {
    const auto& m = std::get<TypeMSlopes>(s);
    out << "r_a       " << to_string(m.r_a) << "\n";
    out << "r_b       " << to_string(m.r_b) << "\n";
  } else {
    const auto& k = std::get<TypeKSlopes>(s);
    out << "r1        " << to_string(k.r1) << "\n";
    out << "r2        " << to_string(k.r2) << "\n";
    out << "r_c       " << to_string(k.r_c) << "\n";
  }
  return out.str();
}

std::string classify_table(const HandlebodyKnot& hk) {
  Classification c = classify(hk);
  std::ostringstream out;
  out << knot_header(hk);
  out << "jsj_type  " << to_string(c.jsj_type) << "\n";
  out << "mcg       " << to_string(c.mcg) << "\n";
  out << "mcg+      equal to mcg\n";
  return out.str();
}

std::string verdict_table(const EquivalenceVerdict& v) {
  std::ostringstream out;
  out << "equivalent  " << (v.equivalent ? "yes" : "no") << "\n";
  out << "reason      " << to_string(v.reason) << "\n";
  if (!v.witness.empty()) {
    out << "witness\n";
    for (const RewriteStep& s : v.witness)
      out << "  " << s.move << " -> " << to_string(s.side) << to_string(s.params) << "\n";
  }
  return out.str();
}

std::string family_table(const FamilyReport& report) {
  std::ostringstream out;
  out << "family L(*," << report.m << ",0,p)\n";
  for (const FamilyEntry& e : report.members)
    out << "  p=" << e.knot.params().p << "  r_c=" << to_string(e.r_c) << "\n";
  out << "pairwise inequivalent          " << (report.pairwise_inequivalent ? "yes" : "no")
      << "\n";
  out << "pairwise homeomorphic exteriors "
      << (report.pairwise_exteriors_homeomorphic ? "yes" : "no") << "\n";
  return out.str();
}

std::string census_table(const HandlebodyKnot& hk, const AnnulusCensus& census) {
  std::ostringstream out;
  out << knot_header(hk);
  out << "jsj_type  " << to_string(jsj_type(hk)) << "\n";
  out << "type 3-2 indices  {";
  bool first = true;
  for (long long i : census.type32_indices) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  out << "}\n";
  out << "noncharacteristic non-4-1  " << census.noncharacteristic_non41_count << "\n";
  out << "type 3-3 annulus           " << (census.has_type33 ? "yes" : "no") << "\n";
  out << "characteristic annuli      " << census.characteristic_count << "\n";
  return out.str();
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "  bound " << report.box_bound << "  ("
      << report.elapsed.count() << " ms)\n";
  for (const CheckResult& c : report.checks) {
    out << "  " << c.name;
    for (std::size_t i = c.name.size(); i < 32; ++i) out << ' ';
    out << c.instances << " instances  " << c.violations.size() << " violations\n";
    for (const Violation& v : c.violations) {
      out << "    ";
      if (v.side) out << to_string(*v.side);
      out << to_string(v.params) << "  " << v.detail << "\n";
    }
  }
  out << (report.passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace hbk::cli
