#pragma once

#include <optional>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

/// Walk p_0 p_1 ... p_{2k+1} (k >= 1) whose pairs p_{2l+1} p_{2l+2} are
/// product factors. factor_assignment[l] is the position in the product
/// used by that pair; positions are distinct.
struct EvenConnectionWitness {
  std::vector<int> path;
  std::vector<int> factor_assignment;
};

/// Shortest even-connection from u to v (u == v allowed), lexicographically
/// least vertex sequence among the shortest. Breadth-first over states
/// (vertex, parity, uses per distinct factor value); a factor value may be
/// used as often as it occurs in the product. Throws PreconditionError if a
/// factor is not an edge of g.
std::optional<EvenConnectionWitness> find_even_connection(const Graph& g, const SFoldProduct& p, int u,
                                                          int v);

/// Re-derives every defining condition from scratch: endpoints, k >= 1, each
/// step an edge, interior pairs equal to their assigned factors, and per-value
/// use counts within multiplicity.
bool check_even_connection_witness(const Graph& g, const SFoldProduct& p, int u, int v,
                                   const EvenConnectionWitness& w);

/// A pair of the colon ideal that is not an edge of g: a new edge (u < v) or a
/// square (u == v), with the witness that produced it.
struct ColonPair {
  int u = 0;
  int v = 0;
  EvenConnectionWitness witness;
};

struct ColonGraphResult {
  /// g plus every even-connected pair u != v.
  Graph graph;
  /// Vertices even-connected to themselves; x_v^2 lies in the colon.
  VertexSet extra_squares = 0;
  std::vector<Edge> new_edges;
  std::vector<ColonPair> new_pairs;
  /// For bipartite g: the result is bipartite on g's bipartition with no
  /// squares. Always true for non-bipartite g.
  bool bipartite_closure = true;

  /// Ideal generated by the edges of `graph` and the squares.
  MonomialIdeal ideal() const;
};

ColonGraphResult colon_graph(const Graph& g, const SFoldProduct& p);

struct ColonGeneratorCheck {
  bool equal = false;
  /// Generators of the combinatorial side missing from the direct colon.
  std::vector<Monomial> only_left;
  /// Generators of the direct colon missing from the combinatorial side.
  std::vector<Monomial> only_right;
};

/// Compares colon_graph(g, p) with (I(g)^{s+1} : e_1...e_s) computed by
/// monomial division. The second overload takes a precomputed I(g)^{s+1}.
ColonGeneratorCheck verify_colon_generators(const Graph& g, const SFoldProduct& p);
ColonGeneratorCheck verify_colon_generators(const Graph& g, const SFoldProduct& p,
                                           const MonomialIdeal& power_s_plus_1);

/// (I^{s+1} : e_1...e_s) == ((I^2 : e_i)^s : prod_{j != i} e_j), both sides by
/// monomial arithmetic; `i` is a 0-based factor position. Bipartite g only.
bool verify_iterated_colon(const Graph& g, const SFoldProduct& p, int i);

/// Monotonicity under enlarging the product: if u, v are even-connected with
/// respect to `sub` they are with respect to `super`. Throws
/// PreconditionError unless `sub` is a submultiset of `super`.
bool check_connection_monotone(const Graph& g, const SFoldProduct& sub, const SFoldProduct& super, int u, int v);

}  // namespace edgereg
