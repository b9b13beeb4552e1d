#pragma once

// Shared machinery for walking the identity rewrites as a graph on admissible
// knots.  Nodes are right knots keyed by their full tuple and left knots
// keyed by (m,n,p) alone (the placeholder l is not part of the identity).
// Edges are the soundness-preserving moves: horizontal flip, the rotation
// identities, and the nontrivial mirror∘mirror compositions.

#include <string>
#include <vector>

#include "hbk/emknot.hpp"

namespace hbk::detail {

struct NodeKey {
  int side;  // 0 = right, 1 = left
  long long l, m, n, p;

  friend bool operator==(const NodeKey&, const NodeKey&) = default;
  friend bool operator<(const NodeKey& a, const NodeKey& b) {
    if (a.side != b.side) return a.side < b.side;
    if (a.l != b.l) return a.l < b.l;
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.p < b.p;
  }
};

NodeKey key_of(const HandlebodyKnot& hk);
HandlebodyKnot knot_of(const NodeKey& key);

// Largest coordinate magnitude; used to clip walks to a parameter box.
long long key_radius(const NodeKey& key);

struct Edge {
  const char* move;
  NodeKey to;
};

std::vector<Edge> neighbor_edges(const NodeKey& key);

}  // namespace hbk::detail
