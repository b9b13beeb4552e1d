#include <doctest.h>

#include <set>

#include "hbk/verify.hpp"

using namespace hbk;

namespace {

std::set<std::string> check_names(const VerificationReport& r) {
  std::set<std::string> names;
  for (const CheckResult& c : r.checks) names.insert(c.name);
  return names;
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
  if (a.box_bound != b.box_bound || a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    const CheckResult &x = a.checks[i], &y = b.checks[i];
    if (x.name != y.name || x.instances != y.instances ||
        x.violations.size() != y.violations.size())
      return false;
    for (std::size_t j = 0; j < x.violations.size(); ++j)
      if (!(x.violations[j].params == y.violations[j].params)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("lemma suite passes on a small box") {
  VerificationReport r = verify_lemmas(4);
  CHECK(r.passed());
  CHECK(r.total_violations() == 0);
  CHECK(check_names(r) == std::set<std::string>{
                              "lambda-odd", "phi-delta-lambda-nonvanishing",
                              "delta-phi-relation", "delta-estimate", "unimodular-pair",
                              "dhb-nonzero", "ra-estimate", "rb-estimate", "rb-tilde-estimate",
                              "rc-estimate", "ra-neq-rb"});
  for (const CheckResult& c : r.checks) CHECK(c.instances > 0);
}

TEST_CASE("oracle suite passes on a small box") {
  VerificationReport r = verify_oracles(4);
  CHECK(r.passed());
  CHECK(check_names(r) == std::set<std::string>{
                              "mod-z-slopes", "closed-form-mod-z", "determinant-magnitudes",
                              "denominator-magnitudes", "tangle-fractions", "tangle-identities",
                              "identity-validity", "mirror-negation",
                              "specialization-consistency"});
}

TEST_CASE("collision suite passes on a small box") {
  VerificationReport r = collision_search(3);
  CHECK(r.passed());
  CHECK(check_names(r) == std::set<std::string>{"rewrite-soundness", "slope-collision-orbits",
                                                "slope-pair-consistency"});
}

TEST_CASE("reports are deterministic") {
  CHECK(reports_equal(verify_lemmas(3), verify_lemmas(3)));
  CHECK(reports_equal(verify_oracles(3), verify_oracles(3)));
  CHECK(reports_equal(collision_search(3), collision_search(3)));
}

TEST_CASE("bounds below 3 are rejected") {
  CHECK_THROWS_AS(verify_lemmas(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_oracles(0), std::invalid_argument);
  CHECK_THROWS_AS(collision_search(-1), std::invalid_argument);
}
