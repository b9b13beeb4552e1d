#include "hbk/classify.hpp"

namespace hbk {

const char* to_string(JsjType t) { return t == JsjType::M ? "M" : "K"; }

const char* to_string(McgGroup g) { return g == McgGroup::Z2 ? "Z2" : "Z2xZ2"; }

JsjType jsj_type(const HandlebodyKnot& hk) {
  if (hk.side() == Side::Left) return JsjType::K;
  return admits_left_form(hk.params()) ? JsjType::K : JsjType::M;
}

McgGroup mcg(const HandlebodyKnot& hk) {
  if (jsj_type(hk) == JsjType::M) return McgGroup::Z2;
  const auto& k = std::get<TypeKSlopes>(characteristic_slopes(hk));
  return k.r1 == k.r2 ? McgGroup::Z2xZ2 : McgGroup::Z2;
}

Classification classify(const HandlebodyKnot& hk) {
  return Classification{jsj_type(hk), mcg(hk), true};
}

AnnulusCensus annulus_census(const HandlebodyKnot& hk) {
  if (jsj_type(hk) == JsjType::M) return AnnulusCensus{{}, 0, false, 2};

  // The exceptional index clauses are stated on the canonical left
  // presentation, so equivalent presentations get identical censuses.
  HandlebodyKnot canon = canonicalize(hk);
  const EMParams& q = canon.params();
  std::set<long long> indices{0, 1, -1};
  if ((q.m == 1 && q.p == 0) || (q.m == 2 && q.n == 0 && q.p == 1)) indices.insert(2);
  if (q.m == -1 && q.p == 0) indices.insert(-2);
  return AnnulusCensus{indices, static_cast<int>(indices.size()) + 1, true, 1};
}

}  // namespace hbk
