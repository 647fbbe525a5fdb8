#include "edgereg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "edgereg/error.hpp"

namespace edgereg {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int vertex_count) {
  check_vertex_count(vertex_count);
  rows_.assign(static_cast<std::size_t>(vertex_count), 0);
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : Graph(vertex_count) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                              std::to_string(e.v));
    }
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    rows_[static_cast<std::size_t>(e.u)] |= vertex_bit(e.v);
    rows_[static_cast<std::size_t>(e.v)] |= vertex_bit(e.u);
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
    throw PreconditionError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  check_vertex_count(n);
  const VertexSet all = n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  for (int v = 0; v < n; ++v) {
    const VertexSet r = rows[static_cast<std::size_t>(v)];
    if ((r & ~all) != 0 || (r & vertex_bit(v)) != 0) {
      throw PreconditionError("adjacency row " + std::to_string(v) + " is not simple");
    }
    for (int w : set_members(r)) {
      if ((rows[static_cast<std::size_t>(w)] & vertex_bit(v)) == 0) {
        throw PreconditionError("adjacency rows are not symmetric");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw PreconditionError("label count does not match vertex count");
  }
  g.labels_ = std::move(labels);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += std::popcount(r);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  return (rows_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

VertexSet Graph::all_vertices() const {
  const int n = vertex_count();
  return n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : set_members(rows_[static_cast<std::size_t>(u)])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  if (!labels_.empty()) return labels_.at(static_cast<std::size_t>(v));
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  return from_rows(rows_, std::move(labels));
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  Bipartition b;
  for (int start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != -1) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : set_members(g.neighbors(v))) {
        int& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    (colour[static_cast<std::size_t>(v)] == 0 ? b.left : b.right) |= vertex_bit(v);
  }
  return b;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  if ((b.left & b.right) != 0 || (b.left | b.right) != g.all_vertices()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const VertexSet side = (b.left & vertex_bit(v)) != 0 ? b.left : b.right;
    if ((g.neighbors(v) & side) != 0) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  VertexSet seen = vertex_bit(0);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v : set_members(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(g.rows());
  const VertexSet all = g.all_vertices();
  for (int v = 0; v < g.vertex_count(); ++v) {
    rows[static_cast<std::size_t>(v)] = ~rows[static_cast<std::size_t>(v)] & all & ~vertex_bit(v);
  }
  return Graph::from_rows(std::move(rows), g.labels());
}

Graph bipartite_complement(const Graph& g, const Bipartition& b) {
  if (!is_valid_bipartition(g, b)) {
    throw PreconditionError("bipartite_complement: not a bipartition of the graph");
  }
  std::vector<VertexSet> rows(g.rows());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const VertexSet other = (b.left & vertex_bit(v)) != 0 ? b.right : b.left;
    rows[static_cast<std::size_t>(v)] = other & ~rows[static_cast<std::size_t>(v)];
  }
  return Graph::from_rows(std::move(rows), g.labels());
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> keep(vertices);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep) {
    if (v < 0 || v >= g.vertex_count()) {
      throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<VertexSet> rows(keep.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) rows[i] |= vertex_bit(static_cast<int>(j));
    }
    if (!g.labels().empty()) labels.push_back(g.label(keep[i]));
  }
  return {Graph::from_rows(std::move(rows), std::move(labels)), keep};
}

namespace {

/// Lexicographic breadth-first search; returns vertices in visit order.
std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      if (pick == -1 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(pick)]) {
        pick = v;
      }
    }
    visited[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int w : set_members(g.neighbors(pick))) {
      if (!visited[static_cast<std::size_t>(w)]) label[static_cast<std::size_t>(w)].push_back(n - step);
    }
  }
  return order;
}

/// Chordless cycle v, u, ..., w when u and w (non-adjacent neighbours of v)
/// are joined by a path avoiding the rest of N[v].
std::optional<CycleWitness> cycle_through(const Graph& g, int v, int u, int w) {
  const VertexSet blocked = g.neighbors(v) | vertex_bit(v);
  const VertexSet allowed = (g.all_vertices() & ~blocked) | vertex_bit(w);
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  VertexSet seen = vertex_bit(u);
  std::deque<int> queue{u};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : set_members(g.neighbors(x) & allowed & ~seen)) {
      seen |= vertex_bit(y);
      parent[static_cast<std::size_t>(y)] = x;
      if (y == w) {
        std::vector<int> path{w};
        for (int z = x; z != u; z = parent[static_cast<std::size_t>(z)]) path.push_back(z);
        path.push_back(u);
        path.push_back(v);
        std::reverse(path.begin(), path.end());
        return CycleWitness{std::move(path), true};
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::optional<CycleWitness> any_chordless_cycle(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::vector<int> nb = set_members(g.neighbors(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        if (auto c = cycle_through(g, v, nb[i], nb[j])) return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  const std::vector<int> visit = lex_bfs(g);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(visit[static_cast<std::size_t>(i)])] = i;

  // Elimination runs in reverse visit order; the neighbours of v visited
  // before it must be pairwise adjacent.
  for (int i = n - 1; i >= 0; --i) {
    const int v = visit[static_cast<std::size_t>(i)];
    std::vector<int> earlier;
    for (int w : set_members(g.neighbors(v))) {
      if (position[static_cast<std::size_t>(w)] < i) earlier.push_back(w);
    }
    for (std::size_t a = 0; a < earlier.size(); ++a) {
      for (std::size_t b = a + 1; b < earlier.size(); ++b) {
        if (g.has_edge(earlier[a], earlier[b])) continue;
        ChordalityResult r;
        r.chordal = false;
        r.witness = cycle_through(g, v, earlier[a], earlier[b]);
        if (!r.witness) r.witness = any_chordless_cycle(g);
        return r;
      }
    }
  }
  return {};
}

std::optional<CycleWitness> find_induced_cycle_geq(const Graph& g, int min_length) {
  if (min_length < 3) throw PreconditionError("find_induced_cycle_geq: length bound below 3");
  const int n = g.vertex_count();
  std::vector<int> path;
  std::optional<CycleWitness> found;

  // Extends a chordless path; every vertex after the start exceeds it, so
  // each cycle is discovered from its lowest vertex.
  std::function<bool(VertexSet)> extend = [&](VertexSet on_path) -> bool {
    const int start = path.front();
    const int last = path.back();
    const VertexSet inner = on_path & ~vertex_bit(start) & ~vertex_bit(last);
    const VertexSet candidates = g.neighbors(last) & ~on_path & ~((vertex_bit(start) << 1) - 1);
    for (int x : set_members(candidates)) {
      if ((g.neighbors(x) & inner) != 0) continue;
      if (path.size() >= 2 && g.has_edge(x, start)) {
        if (static_cast<int>(path.size()) + 1 >= min_length) {
          std::vector<int> cycle(path);
          cycle.push_back(x);
          found = CycleWitness{std::move(cycle), true};
          return true;
        }
        continue;
      }
      path.push_back(x);
      if (extend(on_path | vertex_bit(x))) return true;
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    if (extend(vertex_bit(s))) return found;
  }
  return std::nullopt;
}

std::optional<CycleWitness> find_induced_four_cycle(const Graph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const VertexSet w = vertex_bit(a) | vertex_bit(b) | vertex_bit(c) | vertex_bit(d);
          bool two_regular = true;
          for (int v : {a, b, c, d}) {
            if (std::popcount(g.neighbors(v) & w) != 2) two_regular = false;
          }
          if (!two_regular) continue;
          // a's two neighbours inside w flank it; the fourth vertex is opposite.
          const std::vector<int> nb = set_members(g.neighbors(a) & w);
          const int opposite = std::countr_zero(w & ~g.neighbors(a) & ~vertex_bit(a));
          return CycleWitness{{a, nb[0], opposite, nb[1]}, true};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_chordal_bipartite(const Graph& g) {
  if (!is_bipartite(g)) throw PreconditionError("is_chordal_bipartite: graph is not bipartite");
  return !find_induced_cycle_geq(g, 6).has_value();
}

bool verify_cycle_witness(const Graph& g, const CycleWitness& w) {
  const std::size_t k = w.vertices.size();
  if (k < 3) return false;
  VertexSet seen = 0;
  for (int v : w.vertices) {
    if (v < 0 || v >= g.vertex_count() || (seen & vertex_bit(v)) != 0) return false;
    seen |= vertex_bit(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(w.vertices[i], w.vertices[(i + 1) % k])) return false;
  }
  if (w.induced) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (g.has_edge(w.vertices[i], w.vertices[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace edgereg
