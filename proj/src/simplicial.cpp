#include "edgereg/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "edgereg/error.hpp"

namespace edgereg {

namespace {

const std::vector<VertexSet> kNoFaces;

void check_count(int n) {
  if (n < 0 || n > kMaxVertices) throw PreconditionError("simplicial complex vertex count out of range");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, const std::vector<VertexSet>& facets) {
  check_count(vertex_count);
  const VertexSet all = (VertexSet{1} << vertex_count) - 1;
  std::vector<bool> present(std::size_t{1} << vertex_count, false);
  for (VertexSet f : facets) {
    if ((f & ~all) != 0) throw PreconditionError("facet uses a vertex outside the complex");
    // Every submask of f, including f and ∅.
    for (VertexSet s = f;; s = (s - 1) & f) {
      present[s] = true;
      if (s == 0) break;
    }
  }
  return from_predicate(vertex_count, [&](VertexSet s) { return static_cast<bool>(present[s]); });
}

SimplicialComplex SimplicialComplex::from_predicate(int vertex_count,
                                                    const std::function<bool(VertexSet)>& is_face) {
  check_count(vertex_count);
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  const VertexSet limit = VertexSet{1} << vertex_count;
  for (VertexSet s = 0; s < limit; ++s) {
    if (!is_face(s)) continue;
    const auto slot = static_cast<std::size_t>(std::popcount(s));
    if (c.faces_.size() <= slot) c.faces_.resize(slot + 1);
    c.faces_[slot].push_back(s);
  }
  return c;
}

int SimplicialComplex::dimension() const { return static_cast<int>(faces_.size()) - 2; }

bool SimplicialComplex::contains(VertexSet face) const {
  const auto& fs = faces(std::popcount(face) - 1);
  return std::binary_search(fs.begin(), fs.end(), face);
}

const std::vector<VertexSet>& SimplicialComplex::faces(int d) const {
  const auto slot = static_cast<std::size_t>(d + 1);
  if (d < -1 || slot >= faces_.size()) return kNoFaces;
  return faces_[slot];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& fs : faces_) total += fs.size();
  return total;
}

std::vector<VertexSet> SimplicialComplex::facets() const {
  std::vector<VertexSet> out;
  for (int d = dimension(); d >= -1; --d) {
    for (VertexSet f : faces(d)) {
      const bool covered = std::any_of(out.begin(), out.end(), [&](VertexSet g) { return (f & ~g) == 0; });
      if (!covered) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& c, Field f) {
  HomologyRanks h;
  if (c.is_void()) return h;
  const int top = c.dimension();
  // boundary_rank[d+1] = rank of the map from d-faces to (d-1)-faces.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) {
    const auto& cols = c.faces(d);
    const auto& rows = c.faces(d - 1);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (int v : set_members(cols[j])) {
        const VertexSet face = cols[j] & ~vertex_bit(v);
        const auto it = std::lower_bound(rows.begin(), rows.end(), face);
        m.at(static_cast<std::size_t>(it - rows.begin()), j) = sign;
        sign = -sign;
      }
    }
    boundary_rank[static_cast<std::size_t>(d + 1)] = rank(m, f);
  }
  for (int d = -1; d <= top; ++d) {
    const std::size_t faces = c.faces(d).size();
    h.by_dim.push_back(faces - boundary_rank[static_cast<std::size_t>(d + 1)] -
                       boundary_rank[static_cast<std::size_t>(d + 2)]);
  }
  return h;
}

SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex::from_predicate(g.vertex_count(), [&](VertexSet s) {
    for (int v : set_members(s)) {
      if ((g.neighbors(v) & s) != 0) return false;
    }
    return true;
  });
}

}  // namespace edgereg
