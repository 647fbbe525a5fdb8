#pragma once

#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

inline constexpr int kMaxEnumerationVertices = 8;

/// Relabelling of g that is identical for all graphs isomorphic to g.
///
/// Vertices are first split by colour refinement (iterated degree
/// signatures, an isomorphism invariant); the canonical form is then the
/// lexicographically least adjacency-row sequence over every permutation
/// that respects the refined cells. Exhaustive within cells, so intended
/// for n <= 8.
struct CanonicalForm {
  Graph graph;
  /// relabel[v] is the new index of original vertex v.
  std::vector<int> relabel;
};

CanonicalForm canonical_form(const Graph& g);

/// Brute-force isomorphism test over all n! bijections.
bool are_isomorphic_bruteforce(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected bipartite graphs on
/// exactly n vertices, 2 <= n <= 8, ordered by edge count then canonical code.
/// Candidates are all cross-edge subsets of each bipartition {0..k-1}|{k..n-1}.
std::vector<Graph> enumerate_connected_bipartite(int n);

/// One representative per isomorphism class of all simple graphs on exactly
/// n vertices, 1 <= n <= 8, grown one vertex at a time.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace edgereg
