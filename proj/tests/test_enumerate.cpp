#include <doctest.h>

#include <numeric>
#include <random>

#include "edgereg/enumerate.hpp"
#include "edgereg/error.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace edgereg;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  return Graph(g.vertex_count(), e);
}

}  // namespace

TEST_CASE("connected bipartite class counts") {
  const std::vector<std::size_t> expected{0, 0, 1, 1, 3, 5, 17, 44, 182};
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(enumerate_connected_bipartite(n).size() == expected[n]);
  }
  CHECK_THROWS_AS(enumerate_connected_bipartite(1), PreconditionError);
  CHECK_THROWS_AS(enumerate_connected_bipartite(9), PreconditionError);
}

TEST_CASE("all graph class counts") {
  const std::vector<std::size_t> expected{0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(enumerate_graphs(n).size() == expected[n]);
  }
  CHECK_THROWS_AS(enumerate_graphs(0), PreconditionError);
}

TEST_CASE("enumeration matches labelled brute force") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto bip = enumerate_connected_bipartite(n);
    CHECK(bip.size() == oracle::count_classes(n, [](const Graph& g) {
            return oracle::is_connected(g) && oracle::is_bipartite(g);
          }));
    for (const Graph& g : bip) {
      CHECK(g.vertex_count() == n);
      CHECK(oracle::is_connected(g));
      CHECK(oracle::is_bipartite(g));
    }
    for (std::size_t a = 0; a < bip.size(); ++a)
      for (std::size_t b = a + 1; b < bip.size(); ++b) CHECK_FALSE(oracle::isomorphic(bip[a], bip[b]));
    CHECK(enumerate_graphs(n).size() == oracle::count_classes(n, [](const Graph&) { return true; }));
  }
}

TEST_CASE("enumeration order is by edge count") {
  const auto gs = enumerate_connected_bipartite(7);
  for (std::size_t k = 1; k < gs.size(); ++k) CHECK(gs[k - 1].edge_count() <= gs[k].edge_count());
  CHECK(gs == enumerate_connected_bipartite(7));
}

TEST_CASE("canonical form is a relabelling invariant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) e.emplace_back(i, j);
    const Graph g(n, e);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    const CanonicalForm cg = canonical_form(g);
    CHECK(cg.graph == canonical_form(h).graph);
    CHECK(relabel(g, cg.relabel) == cg.graph);
    CHECK(are_isomorphic_bruteforce(g, h));
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  const auto gs = enumerate_graphs(6);
  std::set<std::vector<VertexSet>> forms;
  for (const Graph& g : gs) forms.insert(canonical_form(g).graph.rows());
  CHECK(forms.size() == gs.size());
  CHECK_FALSE(are_isomorphic_bruteforce(oracle::cycle(6), oracle::complete_bipartite(3, 3)));
  // regular graphs with equal degree sequences: two triangles versus C6
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(canonical_form(two_triangles).graph == canonical_form(oracle::cycle(6)).graph);
}
