#include "rewrite_graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace hbk::detail {

NodeKey key_of(const HandlebodyKnot& hk) {
  const EMParams& q = hk.params();
  if (hk.side() == Side::Left) return NodeKey{1, 0, q.m, q.n, q.p};
  return NodeKey{0, q.l, q.m, q.n, q.p};
}

HandlebodyKnot knot_of(const NodeKey& key) {
  if (key.side == 1) return HandlebodyKnot::left(key.m, key.n, key.p);
  return HandlebodyKnot(Side::Right, {key.l, key.m, key.n, key.p});
}

long long key_radius(const NodeKey& key) {
  return std::max({std::llabs(key.l), std::llabs(key.m), std::llabs(key.n), std::llabs(key.p)});
}

std::vector<Edge> neighbor_edges(const NodeKey& key) {
  HandlebodyKnot knot = knot_of(key);
  std::vector<Edge> out;
  auto push = [&](const char* move, const HandlebodyKnot& image) {
    NodeKey to = key_of(image);
    if (to == key) return;
    out.push_back(Edge{move, to});
  };

  if (key.side == 0 && key.p == 0 && (key.m == 1 || key.m == -1))
    push("horizontal-flip", horizontal_flip(knot));
  for (const HandlebodyKnot& image : rotation_images(knot)) push("rotation", image);
  for (const HandlebodyKnot& image : double_mirror_images(knot)) push("double-mirror", image);
  return out;
}

}  // namespace hbk::detail
