#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edgereg {

/// Bitmask over vertex indices 0..31.
using VertexSet = std::uint32_t;

/// Homology and canonical-form kernels index vertices by bit; 16 keeps every
/// exhaustive subset loop (2^n) and every exponent vector at desk scale.
inline constexpr int kMaxVertices = 16;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

std::vector<int> set_members(VertexSet s);

/// Unordered pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1, adjacency held as one
/// bit row per vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  static Graph from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  VertexSet neighbors(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const;
  VertexSet all_vertices() const;
  const std::vector<VertexSet>& rows() const { return rows_; }

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Display name of v: its label when labels are present, else its index.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Structural equality; labels are metadata and do not participate.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

struct Bipartition {
  VertexSet left = 0;
  VertexSet right = 0;

  std::vector<int> left_vertices() const { return set_members(left); }
  std::vector<int> right_vertices() const { return set_members(right); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Cycle v_1 ... v_k, closed by v_k v_1. `induced` marks a chordless cycle.
struct CycleWitness {
  std::vector<int> vertices;
  bool induced = false;
};

struct InducedSubgraph {
  Graph graph;
  /// index_map[i] is the original vertex that became vertex i.
  std::vector<int> index_map;
};

struct ChordalityResult {
  bool chordal = true;
  std::optional<CycleWitness> witness;
};

/// 2-colouring, or nullopt when an odd cycle exists. In each component the
/// lowest-index vertex goes left.
std::optional<Bipartition> is_bipartite(const Graph& g);
bool is_valid_bipartition(const Graph& g, const Bipartition& b);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Cross pairs of `b` inverted; throws PreconditionError if `b` is not a
/// bipartition of `g`.
Graph bipartite_complement(const Graph& g, const Bipartition& b);

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Lexicographic BFS order followed by a perfect-elimination check. A failing
/// check yields a chordless cycle of length >= 4 as certificate.
ChordalityResult is_chordal(const Graph& g);

/// First chordless cycle of length >= min_length in the order: lowest start
/// vertex, then lowest-index extension. Exhaustive; exponential in n.
std::optional<CycleWitness> find_induced_cycle_geq(const Graph& g, int min_length);

/// Some induced cycle on exactly four vertices, by scanning all 4-subsets.
std::optional<CycleWitness> find_induced_four_cycle(const Graph& g);

/// Bipartite with no induced cycle of length >= 6.
bool is_chordal_bipartite(const Graph& g);

/// Checks consecutive adjacency and, when the witness claims it, the absence
/// of chords.
bool verify_cycle_witness(const Graph& g, const CycleWitness& w);

}  // namespace edgereg
