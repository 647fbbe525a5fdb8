#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/linalg.hpp"

namespace edgereg {

/// Finite simplicial complex on vertices 0..n-1 with every face stored.
/// The void complex (no faces at all) and the irrelevant complex {∅} are
/// distinct.
class SimplicialComplex {
 public:
  /// Downward closure of `facets`. An empty list gives the void complex.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<VertexSet>& facets);
  /// All subsets of the vertex set accepted by `is_face`, which must be
  /// closed under taking subsets.
  static SimplicialComplex from_predicate(int vertex_count, const std::function<bool(VertexSet)>& is_face);

  int vertex_count() const { return vertex_count_; }
  bool is_void() const { return faces_.empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const;
  bool contains(VertexSet face) const;
  /// Faces of dimension d (cardinality d+1), ascending.
  const std::vector<VertexSet>& faces(int d) const;
  std::size_t face_count() const;
  std::vector<VertexSet> facets() const;

 private:
  int vertex_count_ = 0;
  /// faces_[d+1] holds the faces of dimension d.
  std::vector<std::vector<VertexSet>> faces_;
};

/// Reduced homology dimensions of dimensions -1..dim(C), stored at index d+1.
struct HomologyRanks {
  std::vector<std::size_t> by_dim;

  std::size_t at(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < by_dim.size() ? by_dim[i] : 0;
  }
};

/// Boundary matrices from faces oriented by increasing vertex index, ranks by
/// exact elimination over `f`.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& c, Field f);

/// Faces are the independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

}  // namespace edgereg
