// Acceptance suite: one line per criterion, every comparison exact.
// Exits nonzero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hbk/classify.hpp"
#include "hbk/equivalence.hpp"
#include "hbk/invariants.hpp"
#include "hbk/verify.hpp"

using namespace hbk;

namespace {

struct Criterion {
  std::string name;
  long long budget_ms;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, std::string& why, const std::string& message) {
  if (!ok && why.empty()) why = message;
  return ok;
}

// 1. The left family (*,-1,0,p) has characteristic slope 4p - 4/3.
bool lee_lee_family(std::string& why) {
  bool ok = true;
  for (long long p = -20; p <= 20; ++p) {
    ProjRat rc = std::get<TypeKSlopes>(characteristic_slopes(HandlebodyKnot::left(-1, 0, p))).r_c;
    ok &= expect(rc == ProjRat(12 * p - 4, 3), why, "r_c mismatch at p=" + std::to_string(p));
  }
  return ok;
}

// 2. The twist-transfer identities hold as exact fractions for |.| <= 10.
bool tangle_identities(std::string& why) {
  const long long b = 10;
  bool ok = true;
  for (long long m = -b; m <= b && ok; ++m) {
    for (long long n = -b; n <= b && ok; ++n)
      ok &= expect(cf_eval({n, -2, 1 - m, -2, 1}) == cf_eval({n - 1, 2, -m - 1, 2, 0}), why,
                   "chain identity fails at m=" + std::to_string(m) + " n=" + std::to_string(n));
    for (long long p = -b; p <= b && ok; ++p)
      for (long long l = -b; l <= b && ok; ++l)
        ok &= expect(cf_eval({-p, 2, -m, l}) == cf_eval({1 - p, -2, 1 - m, l}), why,
                     "four-term identity fails at m=" + std::to_string(m));
    ok &= expect(cf_eval({1 - m, -2, 1}) == cf_eval({-m, 2, 0}), why,
                 "three-term identity fails at m=" + std::to_string(m));
  }
  // generic rewrite on the construction tangles
  for (long long m = -b; m <= b && ok; ++m)
    for (long long x = -b; x <= b && ok; ++x)
      for (long long y = -b; y <= b && ok; ++y) {
        RationalTangle tb({y, -2, m, -x});
        ok &= expect(equivalent(tb, rewrite_two_twist(tb, 1, -1)), why, "rewrite fails on B");
        RationalTangle tc({-y, 2, m - 1, 2, 0});
        ok &= expect(equivalent(tc, rewrite_two_twist(tc, 1, +1)) &&
                         equivalent(tc, rewrite_two_twist(tc, 3, +1)),
                     why, "rewrite fails on C");
      }
  return ok;
}

bool report_clean(const VerificationReport& r, std::string& why) {
  for (const CheckResult& c : r.checks)
    for (const Violation& v : c.violations) {
      why = c.name + " violated at " + to_string(v.params) +
            (v.detail.empty() ? "" : ": " + v.detail);
      return false;
    }
  return true;
}

// 3. Mod-Z, determinant and denominator oracles agree with the closed forms.
bool oracle_agreement(std::string& why) { return report_clean(verify_oracles(8), why); }

// 4. Nonvanishing and estimate checks hold with zero violations.
bool lemma_suite(std::string& why) { return report_clean(verify_lemmas(8), why); }

// 5. Symmetry groups: Z2 on type M; Z2xZ2 exactly on the symmetric-pair locus,
//    which is exactly the left presentations (*,±1,n,0) and (*,2,0,1).
bool symmetry_classification(std::string& why) {
  bool ok = true;
  std::vector<HandlebodyKnot> knots;
  for (const EMParams& q : valid_params_in_box(8)) knots.emplace_back(Side::Right, q);
  for (const HandlebodyKnot& k : left_knots_in_box(8)) knots.push_back(k);
  for (const HandlebodyKnot& k : knots) {
    if (jsj_type(k) == JsjType::M) {
      ok &= expect(mcg(k) == McgGroup::Z2, why, "type M knot with mcg != Z2 at " +
                                                    to_string(k.params()));
      continue;
    }
    auto s = std::get<TypeKSlopes>(characteristic_slopes(k));
    const EMParams c = canonicalize(k).params();
    bool symmetric_locus =
        (c.p == 0 && (c.m == 1 || c.m == -1)) || (c.m == 2 && c.n == 0 && c.p == 1);
    bool z2z2 = mcg(k) == McgGroup::Z2xZ2;
    ok &= expect(z2z2 == (s.r1 == s.r2), why, "mcg disagrees with r1=r2 at " +
                                                  to_string(k.params()));
    ok &= expect(z2z2 == symmetric_locus, why,
                 "mcg disagrees with the canonical-form locus at " + to_string(k.params()));
  }
  return ok;
}

// 6. Census count is 4 or 5, and 5 exactly on the three exceptional families.
bool annulus_census_bounds(std::string& why) {
  bool ok = true;
  std::vector<HandlebodyKnot> knots;
  for (const EMParams& q : valid_params_in_box(8))
    if (admits_left_form(q)) knots.emplace_back(Side::Right, q);
  for (const HandlebodyKnot& k : left_knots_in_box(8)) knots.push_back(k);
  for (const HandlebodyKnot& k : knots) {
    AnnulusCensus c = annulus_census(k);
    int count = c.noncharacteristic_non41_count;
    ok &= expect(count == 4 || count == 5, why, "census count out of range at " +
                                                    to_string(k.params()));
    const EMParams q = canonicalize(k).params();
    bool exceptional = (q.m == 1 && q.p == 0) || (q.m == -1 && q.p == 0) ||
                       (q.m == 2 && q.n == 0 && q.p == 1);
    ok &= expect((count == 5) == exceptional, why,
                 "census count disagrees with the exceptional families at " +
                     to_string(k.params()));
    ok &= expect(count == static_cast<int>(c.type32_indices.size()) + 1, why,
                 "count is not |indices| + 1");
    ok &= expect(c.has_type33 && c.characteristic_count == 1, why, "census shape wrong");
  }
  return ok;
}

// 7. Equal slopes always come from rewrite-connected presentations.
bool collision_freeness(std::string& why) { return report_clean(collision_search(6), why); }

// 8. Known specimens.
bool known_specimens(std::string& why) {
  bool ok = true;
  HandlebodyKnot r3110(Side::Right, {3, 1, 1, 0});
  ok &= expect(jsj_type(r3110) == JsjType::K, why, "R(3,1,1,0) is not recognized as a left form");
  ok &= expect(derived(r3110.params()).delta == 2, why, "delta(3,1,0) != 2");
  ok &= expect(canonicalize(r3110).side() == Side::Left, why,
               "R(3,1,1,0) does not canonicalize to a left form");

  ok &= expect(equivalent(HandlebodyKnot::left(1, 1, 0), HandlebodyKnot::left(2, 0, 1)).equivalent,
               why, "L(*,1,1,0) and L(*,2,0,1) not equivalent");

  for (long long m : {-3, -1, 2, 4})
    for (long long p = -2; p <= 2; ++p)
      for (long long pp = -2; pp <= 2; ++pp) {
        HandlebodyKnot a = HandlebodyKnot::left(m, 0, p);
        HandlebodyKnot b = HandlebodyKnot::left(1 - m, 0, pp);
        ok &= expect(exteriors_homeomorphic(a, b), why, "exteriors differ in the m/1-m family");
        auto ra = std::get<TypeKSlopes>(characteristic_slopes(a)).r_c;
        auto rb = std::get<TypeKSlopes>(characteristic_slopes(b)).r_c;
        if (!(ra == rb))
          ok &= expect(!equivalent(a, b).equivalent, why,
                       "slope-distinct family members reported equivalent");
      }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"lee-lee-family", 1000, lee_lee_family},
      {"tangle-identity-suite", 1000, tangle_identities},
      {"oracle-agreement", 30000, oracle_agreement},
      {"lemma-suite", 30000, lemma_suite},
      {"symmetry-classification", 30000, symmetry_classification},
      {"annulus-census", 10000, annulus_census_bounds},
      {"slope-collision-search", 300000, collision_freeness},
      {"known-specimens", 1000, known_specimens},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms > c.budget_ms) {
      ok = false;
      if (why.empty()) why = "exceeded " + std::to_string(c.budget_ms) + " ms budget";
    }
    std::printf("%s  %zu. %-26s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                static_cast<long long>(ms), why.empty() ? "" : "  -- ", why.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
