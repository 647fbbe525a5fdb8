#include "edgereg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "edgereg/error.hpp"

namespace edgereg {

namespace {

using Code = std::vector<VertexSet>;

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int w : set_members(g.neighbors(v))) nb.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

Code relabelled_rows(const Graph& g, const std::vector<int>& relabel) {
  Code rows(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet r = 0;
    for (int w : set_members(g.neighbors(v))) r |= vertex_bit(relabel[static_cast<std::size_t>(w)]);
    rows[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v)])] = r;
  }
  return rows;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  const std::vector<int> colour = refine_colours(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
  });
  // Cells are maximal runs of equal colour in `order`; positions within a
  // cell are permuted freely.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        colour[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
      ++j;
    }
    cells.emplace_back(i, j);
    i = j;
  }

  Code best;
  std::vector<int> best_relabel;
  std::vector<int> perm(order);
  for (auto [a, b] : cells) std::sort(perm.begin() + a, perm.begin() + b);
  std::vector<int> relabel(static_cast<std::size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i) relabel[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    Code rows = relabelled_rows(g, relabel);
    if (best_relabel.empty() || rows < best) {
      best = std::move(rows);
      best_relabel = relabel;
    }
    // Odometer over the cells' permutations, last cell fastest.
    std::size_t c = cells.size();
    bool advanced = false;
    while (c > 0) {
      --c;
      auto [a, b] = cells[c];
      if (std::next_permutation(perm.begin() + a, perm.begin() + b)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  if (n == 0) return {g, {}};
  return {Graph::from_rows(best), best_relabel};
}

bool are_isomorphic_bruteforce(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabelled_rows(a, perm) == b.rows()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::vector<Graph> sorted_representatives(const std::set<Code>& codes) {
  std::vector<Graph> out;
  for (const Code& c : codes) out.push_back(Graph::from_rows(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const Graph& x, const Graph& y) { return x.edge_count() < y.edge_count(); });
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected_bipartite(int n) {
  if (n < 2 || n > kMaxEnumerationVertices) {
    throw PreconditionError("enumerate_connected_bipartite: n must lie in 2.." +
                            std::to_string(kMaxEnumerationVertices));
  }
  std::set<Code> codes;
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<Edge> cross;
    for (int x = 0; x < k; ++x) {
      for (int y = k; y < n; ++y) cross.emplace_back(x, y);
    }
    const std::uint32_t subsets = std::uint32_t{1} << cross.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
      for (std::size_t e = 0; e < cross.size(); ++e) {
        if ((mask >> e & 1u) == 0) continue;
        rows[static_cast<std::size_t>(cross[e].u)] |= vertex_bit(cross[e].v);
        rows[static_cast<std::size_t>(cross[e].v)] |= vertex_bit(cross[e].u);
      }
      if (std::any_of(rows.begin(), rows.end(), [](VertexSet r) { return r == 0; })) continue;
      Graph g = Graph::from_rows(std::move(rows));
      if (!is_connected(g)) continue;
      codes.insert(canonical_form(g).graph.rows());
    }
  }
  return sorted_representatives(codes);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw PreconditionError("enumerate_graphs: n must lie in 1.." +
                            std::to_string(kMaxEnumerationVertices));
  }
  std::set<Code> level{Code{0}};
  for (int m = 2; m <= n; ++m) {
    std::set<Code> next;
    for (const Code& base : level) {
      for (VertexSet nb = 0; nb < vertex_bit(m - 1); ++nb) {
        std::vector<VertexSet> rows(base);
        for (int v : set_members(nb)) rows[static_cast<std::size_t>(v)] |= vertex_bit(m - 1);
        rows.push_back(nb);
        next.insert(canonical_form(Graph::from_rows(std::move(rows))).graph.rows());
      }
    }
    level = std::move(next);
  }
  return sorted_representatives(level);
}

}  // namespace edgereg
