#include "hbk/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "hbk/classify.hpp"
#include "rewrite_graph.hpp"

namespace hbk {

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::TypeMismatch: return "type-mismatch";
    case VerdictReason::SlopeMatch: return "slope-match";
    case VerdictReason::SlopeMismatch: return "slope-mismatch";
  }
  return "?";
}

namespace {

// Breadth-first search through the identity rewrites, clipped to a parameter
// box around the endpoints.  The chain is informational, so the caps err on
// the side of giving up quickly.
std::vector<RewriteStep> find_witness(const HandlebodyKnot& from, const HandlebodyKnot& to) {
  using detail::NodeKey;
  const NodeKey start = detail::key_of(from);
  const NodeKey goal = detail::key_of(to);
  if (start == goal) return {};

  const long long box = std::max(detail::key_radius(start), detail::key_radius(goal)) + 2;
  constexpr std::size_t kNodeCap = 50000;

  std::map<NodeKey, std::pair<NodeKey, const char*>> parent;
  std::deque<NodeKey> queue{start};
  parent.emplace(start, std::make_pair(start, ""));
  while (!queue.empty() && parent.size() < kNodeCap) {
    NodeKey cur = queue.front();
    queue.pop_front();
    for (const detail::Edge& e : detail::neighbor_edges(cur)) {
      if (detail::key_radius(e.to) > box) continue;
      if (parent.contains(e.to)) continue;
      parent.emplace(e.to, std::make_pair(cur, e.move));
      if (e.to == goal) {
        std::vector<RewriteStep> chain;
        for (NodeKey k = goal; !(k == start); k = parent.at(k).first) {
          HandlebodyKnot knot = detail::knot_of(k);
          chain.push_back(RewriteStep{parent.at(k).second, knot.side(), knot.params()});
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(e.to);
    }
  }
  return {};
}

}  // namespace

EquivalenceVerdict equivalent(const HandlebodyKnot& a, const HandlebodyKnot& b) {
  if (jsj_type(a) != jsj_type(b))
    return EquivalenceVerdict{false, VerdictReason::TypeMismatch, {}};
  if (!slopes_equal(characteristic_slopes(a), characteristic_slopes(b)))
    return EquivalenceVerdict{false, VerdictReason::SlopeMismatch, {}};
  return EquivalenceVerdict{true, VerdictReason::SlopeMatch, find_witness(a, b)};
}

EquivalenceVerdict mirror_equivalent(const HandlebodyKnot& a, const HandlebodyKnot& b) {
  return equivalent(mirror(a), b);
}

bool exteriors_homeomorphic(const HandlebodyKnot& a, const HandlebodyKnot& b) {
  if (jsj_type(a) != JsjType::K || jsj_type(b) != JsjType::K)
    throw std::invalid_argument(
        "exterior comparison is established only for left-form knots");
  ProjRat rc_a = std::get<TypeKSlopes>(characteristic_slopes(a)).r_c;
  ProjRat rc_b = std::get<TypeKSlopes>(characteristic_slopes(b)).r_c;
  return mod_one(rc_a) == mod_one(rc_b) || mod_one(rc_a) == mod_one(negate(rc_b));
}

FamilyReport enumerate_family(long long m, long long p_from, long long p_to) {
  if (m == 0 || m == 1)
    throw std::invalid_argument("family requires m != 0, 1");
  if (p_from > p_to) throw std::invalid_argument("empty p range");

  FamilyReport report{m, {}, true, true};
  for (long long p = p_from; p <= p_to; ++p) {
    HandlebodyKnot knot = HandlebodyKnot::left(m, 0, p);
    report.members.push_back(
        FamilyEntry{knot, std::get<TypeKSlopes>(characteristic_slopes(knot)).r_c});
  }
  for (std::size_t i = 0; i < report.members.size(); ++i)
    for (std::size_t j = i + 1; j < report.members.size(); ++j) {
      const HandlebodyKnot &a = report.members[i].knot, &b = report.members[j].knot;
      if (equivalent(a, b).equivalent) report.pairwise_inequivalent = false;
      if (!exteriors_homeomorphic(a, b)) report.pairwise_exteriors_homeomorphic = false;
    }
  return report;
}

}  // namespace hbk
