#include "hbk/verify.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "hbk/classify.hpp"
#include "hbk/equivalence.hpp"
#include "hbk/invariants.hpp"
#include "hbk/tangle.hpp"
#include "rewrite_graph.hpp"

namespace hbk {

bool VerificationReport::passed() const { return total_violations() == 0; }

long long VerificationReport::total_violations() const {
  long long n = 0;
  for (const auto& c : checks) n += static_cast<long long>(c.violations.size());
  return n;
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const EMParams& q, const std::string& detail,
              std::optional<Side> side = std::nullopt) {
    ++result_.instances;
    if (!ok) result_.violations.push_back(Violation{side, q, detail});
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

Int int_abs(Int v) { return v < 0 ? -v : v; }

ProjRat rat(Int n, Int d) { return ProjRat(n, d); }

bool abs_at_least(const ProjRat& x, Int num, Int den) { return abs(x) >= rat(num, den); }
bool abs_at_most(const ProjRat& x, Int num, Int den) { return abs(x) <= rat(num, den); }

std::vector<HandlebodyKnot> knots_in_box(int bound) {
  std::vector<HandlebodyKnot> out;
  for (const EMParams& q : valid_params_in_box(bound)) out.emplace_back(Side::Right, q);
  for (const HandlebodyKnot& k : left_knots_in_box(bound)) out.push_back(k);
  return out;
}

bool is_type_m(const EMParams& q) { return !admits_left_form(q); }

// ---------------------------------------------------------------------------
// Lemma suite
// ---------------------------------------------------------------------------

CheckResult check_lambda_odd(const std::vector<EMParams>& box) {
  Check c("lambda-odd");
  for (const EMParams& q : box) {
    Int lambda = derived(q).lambda;
    c.expect(int_abs(lambda) % 2 == 1, q, "lambda is even: " + to_string(lambda));
  }
  return c.take();
}

CheckResult check_nonvanishing(const std::vector<EMParams>& box) {
  Check c("phi-delta-lambda-nonvanishing");
  for (const EMParams& q : box) {
    DerivedQuantities d = derived(q);
    c.expect(d.phi != 0 && d.delta != 0 && int_abs(d.lambda) > 2, q,
             "phi=" + to_string(d.phi) + " delta=" + to_string(d.delta) +
                 " lambda=" + to_string(d.lambda));
  }
  return c.take();
}

CheckResult check_delta_phi_relation(const std::vector<EMParams>& box) {
  Check c("delta-phi-relation");
  for (const EMParams& q : box) {
    DerivedQuantities d = derived(q);
    Int rhs = checked_sub(checked_mul(2, Int(q.p)), checked_add(checked_mul(q.l, d.phi), 1));
    c.expect(d.delta == rhs, q, "delta != -l*phi + 2p - 1");
  }
  return c.take();
}

CheckResult check_delta_estimate(const std::vector<EMParams>& box) {
  Check c("delta-estimate");
  for (const EMParams& q : box) {
    if (q.p == 0 || q.p == 1 || q.l == 2 || q.l == -2) continue;
    DerivedQuantities d = derived(q);
    ProjRat bf = cf_eval({q.p, -2, q.m, -q.l});
    bool ok = abs_at_least(bf, 9, 4) && int_abs(d.phi) >= 4 && int_abs(d.delta) >= 9;
    c.expect(ok, q,
             "[p,-2,m,-l]=" + to_string(bf) + " phi=" + to_string(d.phi) +
                 " delta=" + to_string(d.delta));
  }
  return c.take();
}

CheckResult check_unimodular_pair(const std::vector<EMParams>& box) {
  Check c("unimodular-pair");
  for (const EMParams& q : box) {
    DerivedQuantities d = derived(q);
    Int lhs = checked_add(checked_mul(checked_sub(2, checked_mul(4, Int(q.n))), d.phi),
                          checked_mul(checked_sub(checked_mul(2, Int(q.p)), 1), d.lambda));
    // (2-4n)phi + (2p-1)lambda expands to 4pn - 1, hence -1 on every
    // admissible tuple; in particular it is a unit.
    c.expect(lhs == -1, q, "(2-4n)phi+(2p-1)lambda = " + to_string(lhs));
  }
  return c.take();
}

CheckResult check_dhb_nonzero(const std::vector<EMParams>& box) {
  Check c("dhb-nonzero");
  for (const EMParams& q : box) {
    Int v = em_determinants(q).dh_b;
    c.expect(v != 0, q, "2-4n+l*lambda vanishes");
  }
  return c.take();
}

CheckResult check_ra_estimate(const std::vector<EMParams>& box) {
  Check c("ra-estimate");
  for (const EMParams& q : box) {
    if (!is_type_m(q)) continue;
    ProjRat ra = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q})).r_a;
    bool ok = true;
    std::string detail = "r_a=" + to_string(ra);
    if (q.n != 0) ok = q.n == 1 ? abs_at_least(ra, 8, 3) : abs_at_least(ra, 14, 3);
    if (q.p != 0) ok = q.p == 1 ? abs_at_least(ra, 8, 3) : abs_at_least(ra, 35, 3);
    c.expect(ok, q, detail);
  }
  return c.take();
}

CheckResult check_rb_estimate(const std::vector<EMParams>& box) {
  Check c("rb-estimate");
  for (const EMParams& q : box) {
    if (!is_type_m(q) || q.p == 0) continue;
    ProjRat rb = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q})).r_b;
    bool ok = q.p == 1 ? (rat(7, 5) <= rb && rb <= rat(7, 2)) : abs_at_most(rb, 7, 9);
    c.expect(ok, q, "r_b=" + to_string(rb));
  }
  return c.take();
}

CheckResult check_rb_tilde_estimate(const std::vector<EMParams>& box) {
  Check c("rb-tilde-estimate");
  for (const EMParams& q : box) {
    if (!is_type_m(q)) continue;
    ProjRat rbt = rb_tilde(q);
    bool ok;
    if (q.m == 1)
      ok = rat(3, 4) <= rbt && rbt <= rat(3, 2);
    else if (q.m == -1)
      ok = rat(-3, 2) <= rbt && rbt <= rat(-3, 4);
    else
      ok = abs_at_most(rbt, 3, 5);
    c.expect(ok, q, "rb~=" + to_string(rbt));
  }
  return c.take();
}

CheckResult check_rc_estimate(const std::vector<HandlebodyKnot>& lefts) {
  Check c("rc-estimate");
  for (const HandlebodyKnot& k : lefts) {
    const EMParams& q = k.params();
    ProjRat rc = std::get<TypeKSlopes>(characteristic_slopes(k)).r_c;
    bool ok = true;
    if (q.p != 0 && q.p != 1) ok = abs_at_least(rc, 16, 3);
    else if (q.n != 0 && q.n != 1) ok = abs_at_most(rc, 4, 5);
    else if (q.p == 1 || q.n == 1) ok = rat(4, 3) <= rc && rc <= rat(8, 3);
    c.expect(ok, q, "r_c=" + to_string(rc), Side::Left);
  }
  return c.take();
}

CheckResult check_ra_neq_rb(const std::vector<EMParams>& box) {
  Check c("ra-neq-rb");
  for (const EMParams& q : box) {
    if (!is_type_m(q)) continue;
    auto s = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q}));
    c.expect(!(s.r_a == s.r_b), q, "r_a = r_b = " + to_string(s.r_a));
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// Oracle suite
// ---------------------------------------------------------------------------

CheckResult check_mod_z_slopes(const std::vector<EMParams>& box) {
  Check c("mod-z-slopes");
  for (const EMParams& q : box) {
    DerivedQuantities d = derived(q);
    EmTangles t = em_tangles(q.l, q.m, q.n, q.p);
    Int lm1 = d.delta0;
    bool ok =
        slope_mod_one(t.a, Direction::Horizontal) == mod_one(rat(-1, q.l)) &&
        slope_mod_one(t.a, Direction::Vertical) == ProjRat(0) &&
        slope_mod_one(t.b, Direction::Horizontal) ==
            mod_one(rat(checked_add(checked_mul(-2, lm1), q.l), d.delta)) &&
        slope_mod_one(t.b, Direction::Vertical) ==
            mod_one(rat(checked_sub(checked_mul(2, Int(q.m)), 1), d.phi)) &&
        slope_mod_one(t.c, Direction::Vertical) == mod_one(rat(checked_mul(4, Int(q.m)), d.lambda));
    c.expect(ok, q, "continued-fraction mod-Z slope mismatch");
  }
  return c.take();
}

CheckResult check_closed_form_mod_z(const std::vector<EMParams>& box,
                                    const std::vector<HandlebodyKnot>& lefts) {
  Check c("closed-form-mod-z");
  for (const EMParams& q : box) {
    EmTangles t = em_tangles(q.l, q.m, q.n, q.p);
    VerticalSlopes v = vertical_slopes(q);
    bool ok = mod_one(v.a) == slope_mod_one(t.a, Direction::Vertical) &&
              mod_one(v.b) == slope_mod_one(t.b, Direction::Vertical);
    if (is_type_m(q)) {
      auto s = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q}));
      ok = ok && mod_one(s.r_a) == slope_mod_one(t.a, Direction::Horizontal) &&
           mod_one(s.r_b) == slope_mod_one(t.b, Direction::Horizontal);
    }
    c.expect(ok, q, "closed form disagrees with mod-Z oracle");
  }
  for (const HandlebodyKnot& k : lefts) {
    const EMParams& q = k.params();
    ProjRat rc = std::get<TypeKSlopes>(characteristic_slopes(k)).r_c;
    EmTangles t = em_tangles(q.l, q.m, q.n, q.p);
    c.expect(mod_one(rc) == slope_mod_one(t.c, Direction::Vertical), q,
             "r_c disagrees with mod-Z oracle", Side::Left);
  }
  return c.take();
}

CheckResult check_determinant_magnitudes(const std::vector<EMParams>& box,
                                         const std::vector<HandlebodyKnot>& lefts) {
  Check c("determinant-magnitudes");
  for (const EMParams& q : box) {
    EmDeterminants dets = em_determinants(q);
    VerticalSlopes v = vertical_slopes(q);
    bool ok = int_abs(montesinos_det(MontesinosKind::HorizontalA, q)) == int_abs(dets.dh_a) &&
              int_abs(montesinos_det(MontesinosKind::HorizontalB, q)) == int_abs(dets.dh_b) &&
              montesinos_det(MontesinosKind::RcNumerator, q) == checked_mul(4, derived(q).phi) &&
              int_abs(v.a.num()) == int_abs(dets.dv_a) && int_abs(v.b.num()) == int_abs(dets.dv_b);
    if (is_type_m(q)) {
      auto s = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q}));
      ok = ok && int_abs(s.r_a.num()) == int_abs(dets.dh_a) &&
           int_abs(s.r_b.num()) == int_abs(dets.dh_b);
    }
    c.expect(ok, q, "determinant magnitude mismatch");
  }
  for (const HandlebodyKnot& k : lefts) {
    const EMParams& q = k.params();
    ProjRat rc = std::get<TypeKSlopes>(characteristic_slopes(k)).r_c;
    c.expect(int_abs(rc.num()) == int_abs(checked_mul(4, derived(q).phi)), q,
             "numerator of r_c is not |4*phi|", Side::Left);
  }
  return c.take();
}

CheckResult check_denominator_magnitudes(const std::vector<EMParams>& box,
                                         const std::vector<HandlebodyKnot>& lefts) {
  Check c("denominator-magnitudes");
  for (const EMParams& q : box) {
    DerivedQuantities d = derived(q);
    VerticalSlopes v = vertical_slopes(q);
    EmDeterminants dets = em_determinants(q);
    bool ok = v.a.den() == 1 && v.b.den() == int_abs(d.phi);
    // The horizontal numerator/denominator closed forms are coprime on every
    // admissible tuple, which pins the magnitudes even where the sign
    // determination needs the |l| > 2, |delta| > 2 regime.
    ok = ok && ProjRat(dets.dh_a, q.l).den() == int_abs(Int(q.l)) &&
         ProjRat(dets.dh_b, d.delta).den() == int_abs(d.delta);
    if (is_type_m(q)) {
      auto s = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q}));
      ok = ok && s.r_a.den() == int_abs(Int(q.l)) && s.r_b.den() == int_abs(d.delta);
    }
    c.expect(ok, q, "denominator magnitude mismatch");
  }
  for (const HandlebodyKnot& k : lefts) {
    const EMParams& q = k.params();
    ProjRat rc = std::get<TypeKSlopes>(characteristic_slopes(k)).r_c;
    c.expect(rc.den() == int_abs(derived(q).lambda), q, "denominator of r_c is not |lambda|",
             Side::Left);
  }
  return c.take();
}

CheckResult check_tangle_fractions(const std::vector<EMParams>& box) {
  Check c("tangle-fractions");
  for (const EMParams& q : box) {
    DerivedQuantities d = derived(q);
    EmTangles t = em_tangles(q.l, q.m, q.n, q.p);
    Int cq = checked_add(
        checked_sub(checked_sub(checked_mul(checked_mul(2, Int(q.m)), q.n), q.m), q.n), 1);
    bool ok = fraction(t.a) == ProjRat(q.l) && fraction(t.b) == rat(d.delta, d.phi) &&
              fraction(t.c) == rat(cq, d.lambda) &&
              fraction(em_tangle_b_prime(q.m, q.p)) ==
                  rat(checked_sub(checked_mul(2, Int(q.p)), 1), d.phi) &&
              fraction(em_tangle_c_prime(q.m, q.n)) ==
                  rat(checked_sub(1, checked_mul(2, Int(q.n))), cq);
    c.expect(ok, q, "tangle fraction disagrees with closed form");
  }
  return c.take();
}

CheckResult check_tangle_identities(int bound) {
  Check c("tangle-identities");
  const long long b = bound;
  // Pure fraction identities; they hold for every integer choice, so the
  // sweep runs over the raw box with no admissibility filter.
  for (long long m = -b; m <= b; ++m) {
    for (long long n = -b; n <= b; ++n) {
      EMParams q{0, m, n, 0};
      bool ok = cf_eval({n, -2, 1 - m, -2, 1}) == cf_eval({n - 1, 2, -m - 1, 2, 0});
      c.expect(ok, q, "twist-transfer chain (mirror, p=0) breaks fraction");
    }
    for (long long p = -b; p <= b; ++p)
      for (long long l = -b; l <= b; ++l) {
        EMParams q{l, m, 0, p};
        bool ok = cf_eval({-p, 2, -m, l}) == cf_eval({1 - p, -2, 1 - m, l});
        c.expect(ok, q, "twist-transfer (mirror, n=0) breaks fraction");
      }
    bool ok = cf_eval({1 - m, -2, 1}) == cf_eval({-m, 2, 0});
    c.expect(ok, {0, m, 0, 0}, "twist-transfer (short form) breaks fraction");
  }
  // The generic rewrite on the construction tangles with a two-coefficient
  // interior: fraction must be preserved at every applicable position.
  for (long long m = -b; m <= b; ++m)
    for (long long l = -b; l <= b; ++l) {
      for (long long p = -b; p <= b; ++p) {
        RationalTangle tb({p, -2, m, -l});
        c.expect(equivalent(tb, rewrite_two_twist(tb, 1, -1)), {l, m, 0, p},
                 "rewrite at B changes fraction");
      }
      for (long long n = -b; n <= b; ++n) {
        RationalTangle tc({-n, 2, m - 1, 2, 0});
        bool ok = equivalent(tc, rewrite_two_twist(tc, 1, +1)) &&
                  equivalent(tc, rewrite_two_twist(tc, 3, +1));
        c.expect(ok, {l, m, n, 0}, "rewrite at C changes fraction");
      }
    }
  return c.take();
}

CheckResult check_identity_validity(const std::vector<HandlebodyKnot>& knots) {
  Check c("identity-validity");
  for (const HandlebodyKnot& k : knots) {
    const EMParams& q = k.params();
    bool ok = true;
    std::string detail;
    try {
      for (const EMParams& img : mirror_images(q))
        if (!is_valid(img)) {
          ok = false;
          detail = "mirror image " + to_string(img) + " inadmissible";
        }
      if (k.side() == Side::Right && q.p == 0 && (q.m == 1 || q.m == -1))
        horizontal_flip(k);
      rotation_images(k);
      double_mirror_images(k);
      canonicalize(k);
    } catch (const std::logic_error& e) {
      ok = false;
      detail = e.what();
    }
    c.expect(ok, q, detail, k.side());
  }
  return c.take();
}

bool negated(const SlopeData& a, const SlopeData& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<TypeMSlopes>(a)) {
    const auto& x = std::get<TypeMSlopes>(a);
    const auto& y = std::get<TypeMSlopes>(b);
    return y.r_a == negate(x.r_a) && y.r_b == negate(x.r_b);
  }
  const auto& x = std::get<TypeKSlopes>(a);
  const auto& y = std::get<TypeKSlopes>(b);
  return y.r1 == negate(x.r1) && y.r2 == negate(x.r2) && y.r_c == negate(x.r_c);
}

CheckResult check_mirror_negation(const std::vector<HandlebodyKnot>& knots) {
  Check c("mirror-negation");
  for (const HandlebodyKnot& k : knots) {
    bool ok = negated(characteristic_slopes(k), characteristic_slopes(mirror(k)));
    c.expect(ok, k.params(), "mirror does not negate the slope data", k.side());
  }
  return c.take();
}

CheckResult check_specializations(const std::vector<EMParams>& box,
                                  const std::vector<HandlebodyKnot>& lefts) {
  Check c("specialization-consistency");
  for (const EMParams& q : box) {
    if (!is_type_m(q)) continue;
    HorizontalSlopes h = horizontal_slopes(q);
    auto s = std::get<TypeMSlopes>(characteristic_slopes({Side::Right, q}));
    c.expect(s.r_a == h.a && s.r_b == h.b, q,
             "specialized r_a/r_b differ from the generic horizontal slopes");
  }
  for (const HandlebodyKnot& k : lefts) {
    const EMParams& q = k.params();
    DerivedQuantities d = derived(q);
    auto s = std::get<TypeKSlopes>(characteristic_slopes(k));
    VerticalSlopes v = vertical_slopes(q);
    bool ok = s.r1 == v.a && s.r2 == v.b;
    if (q.p == 0)
      ok = ok && s.r1 == rat(checked_mul(d.lambda, q.m), 1) && s.r2 == rat(d.lambda, q.m);
    else
      ok = ok && s.r1 == rat(checked_mul(checked_sub(checked_mul(2, Int(q.m)), 1), d.phi), 1) &&
           s.r2 == rat(checked_sub(checked_mul(2, Int(q.m)), 1), d.phi);
    Int rc_num = checked_neg(checked_sub(
        checked_mul(checked_mul(8, Int(q.p)), q.m),
        checked_add(checked_mul(4, Int(q.p)), checked_mul(4, Int(q.m)))));
    ok = ok && s.r_c == rat(rc_num, d.lambda);
    c.expect(ok, q, "slope-pair/r_c specializations disagree", Side::Left);
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// Collision suite
// ---------------------------------------------------------------------------

// Order-comparable encoding of the deciding slope invariant.
using SlopeKey = std::vector<Int>;

SlopeKey slope_key(const SlopeData& s) {
  if (std::holds_alternative<TypeMSlopes>(s)) {
    const auto& m = std::get<TypeMSlopes>(s);
    ProjRat lo = m.r_a, hi = m.r_b;
    if (hi < lo) std::swap(lo, hi);
    return {0, lo.num(), lo.den(), hi.num(), hi.den()};
  }
  const auto& k = std::get<TypeKSlopes>(s);
  return {1, k.r_c.num(), k.r_c.den()};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void run_collision_checks(int bound, VerificationReport& report) {
  using detail::NodeKey;
  std::vector<HandlebodyKnot> small = knots_in_box(bound);
  std::vector<HandlebodyKnot> big = knots_in_box(bound + 2);

  std::map<NodeKey, int> index;
  for (const HandlebodyKnot& k : big) index.emplace(detail::key_of(k), index.size());

  std::vector<SlopeData> slopes(big.size(), SlopeData{});
  for (const HandlebodyKnot& k : big) slopes[index.at(detail::key_of(k))] =
      characteristic_slopes(k);

  Check soundness("rewrite-soundness");
  UnionFind uf(big.size());
  for (const HandlebodyKnot& k : big) {
    int from = index.at(detail::key_of(k));
    for (const detail::Edge& e : detail::neighbor_edges(detail::key_of(k))) {
      auto it = index.find(e.to);
      if (it == index.end()) continue;  // image outside the enlarged box
      soundness.expect(slopes_equal(slopes[from], slopes[it->second]), k.params(),
                       std::string(e.move) + " changes the slope invariant", k.side());
      uf.unite(from, it->second);
    }
  }
  report.checks.push_back(soundness.take());

  std::map<SlopeKey, std::vector<int>> groups;
  for (const HandlebodyKnot& k : small) {
    int i = index.at(detail::key_of(k));
    groups[slope_key(slopes[i])].push_back(i);
  }

  Check orbits("slope-collision-orbits");
  Check pairs("slope-pair-consistency");
  for (auto& [key, members] : groups) {
    int root = uf.find(members.front());
    bool connected = true;
    for (int i : members) connected = connected && uf.find(i) == root;
    for (int i : members) {
      const HandlebodyKnot& k = big[i];
      orbits.expect(connected, k.params(),
                    "slope group not connected by rewrites (size " +
                        std::to_string(members.size()) + ")",
                    k.side());
    }
    if (key[0] == 1) {
      const auto& first = std::get<TypeKSlopes>(slopes[members.front()]);
      for (int i : members) {
        const auto& s = std::get<TypeKSlopes>(slopes[i]);
        pairs.expect(s.r1 == first.r1 && s.r2 == first.r2, big[i].params(),
                     "equal r_c but different slope pair", big[i].side());
      }
    }
  }
  report.checks.push_back(orbits.take());
  report.checks.push_back(pairs.take());
}

VerificationReport make_report(const std::string& suite, int bound) {
  if (bound < 3) throw std::invalid_argument("verification bound must be at least 3");
  VerificationReport report;
  report.suite = suite;
  report.box_bound = bound;
  return report;
}

}  // namespace

VerificationReport verify_lemmas(int bound) {
  VerificationReport report = make_report("lemmas", bound);
  auto start = std::chrono::steady_clock::now();
  std::vector<EMParams> box = valid_params_in_box(bound);
  std::vector<HandlebodyKnot> lefts = left_knots_in_box(bound);
  report.checks.push_back(check_lambda_odd(box));
  report.checks.push_back(check_nonvanishing(box));
  report.checks.push_back(check_delta_phi_relation(box));
  report.checks.push_back(check_delta_estimate(box));
  report.checks.push_back(check_unimodular_pair(box));
  report.checks.push_back(check_dhb_nonzero(box));
  report.checks.push_back(check_ra_estimate(box));
  report.checks.push_back(check_rb_estimate(box));
  report.checks.push_back(check_rb_tilde_estimate(box));
  report.checks.push_back(check_rc_estimate(lefts));
  report.checks.push_back(check_ra_neq_rb(box));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport verify_oracles(int bound) {
  VerificationReport report = make_report("oracles", bound);
  auto start = std::chrono::steady_clock::now();
  std::vector<EMParams> box = valid_params_in_box(bound);
  std::vector<HandlebodyKnot> lefts = left_knots_in_box(bound);
  std::vector<HandlebodyKnot> knots = knots_in_box(bound);
  report.checks.push_back(check_mod_z_slopes(box));
  report.checks.push_back(check_closed_form_mod_z(box, lefts));
  report.checks.push_back(check_determinant_magnitudes(box, lefts));
  report.checks.push_back(check_denominator_magnitudes(box, lefts));
  report.checks.push_back(check_tangle_fractions(box));
  report.checks.push_back(check_tangle_identities(bound));
  report.checks.push_back(check_identity_validity(knots));
  report.checks.push_back(check_mirror_negation(knots));
  report.checks.push_back(check_specializations(box, lefts));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport collision_search(int bound) {
  VerificationReport report = make_report("collisions", bound);
  auto start = std::chrono::steady_clock::now();
  run_collision_checks(bound, report);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace hbk
