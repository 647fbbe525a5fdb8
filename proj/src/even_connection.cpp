#include "edgereg/even_connection.hpp"

#include <algorithm>
#include <deque>

#include "edgereg/error.hpp"

namespace edgereg {

namespace {

void check_factors(const Graph& g, const SFoldProduct& p) {
  for (const Edge& e : p.factors) {
    if (!g.has_edge(e.u, e.v)) {
      throw PreconditionError("product factor " + g.label(e.u) + g.label(e.v) + " is not an edge");
    }
  }
}

std::vector<int> assign_factors(const SFoldProduct& p, const std::vector<int>& path) {
  std::vector<int> assignment;
  std::vector<bool> taken(p.factors.size(), false);
  for (std::size_t l = 1; l + 1 < path.size(); l += 2) {
    const Edge pair(path[l], path[l + 1]);
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      if (!taken[i] && p.factors[i] == pair) {
        taken[i] = true;
        assignment.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return assignment;
}

}  // namespace

std::optional<EvenConnectionWitness> find_even_connection(const Graph& g, const SFoldProduct& p, int u,
                                                          int v) {
  check_factors(g, p);
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("even-connection endpoint out of range");
  const std::vector<Edge> values = p.distinct();
  if (values.empty()) return std::nullopt;

  // Uses per distinct value packed in mixed radix (multiplicity + 1).
  std::vector<int> radix;
  std::vector<int> stride;
  int budgets = 1;
  for (const Edge& e : values) {
    stride.push_back(budgets);
    radix.push_back(p.multiplicity(e) + 1);
    budgets *= radix.back();
  }
  auto used = [&](int code, std::size_t k) { return code / stride[k] % radix[k]; };

  // phase 0: next step is any edge; phase 1: next step is a factor.
  auto state_id = [&](int vertex, int phase, int code) { return (code * 2 + phase) * n + vertex; };
  const int states = budgets * 2 * n;
  std::vector<int> parent(static_cast<std::size_t>(states), -2);
  const int start = state_id(u, 0, 0);
  parent[static_cast<std::size_t>(start)] = -1;
  std::deque<int> queue{start};

  auto rebuild = [&](int goal) {
    std::vector<int> path;
    for (int s = goal; s != -1; s = parent[static_cast<std::size_t>(s)]) path.push_back(s % n);
    std::reverse(path.begin(), path.end());
    return EvenConnectionWitness{path, assign_factors(p, path)};
  };

  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const int vertex = s % n;
    const int phase = s / n % 2;
    const int code = s / n / 2;
    for (int w : set_members(g.neighbors(vertex))) {
      int next = -1;
      if (phase == 0) {
        next = state_id(w, 1, code);
      } else {
        const auto k = static_cast<std::size_t>(
            std::lower_bound(values.begin(), values.end(), Edge(vertex, w)) - values.begin());
        if (k == values.size() || !(values[k] == Edge(vertex, w))) continue;
        if (used(code, k) + 1 >= radix[k]) continue;
        next = state_id(w, 0, code + stride[k]);
      }
      if (parent[static_cast<std::size_t>(next)] != -2) continue;
      parent[static_cast<std::size_t>(next)] = s;
      if (phase == 0 && w == v && code != 0) return rebuild(next);
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

bool check_even_connection_witness(const Graph& g, const SFoldProduct& p, int u, int v,
                                   const EvenConnectionWitness& w) {
  const auto& path = w.path;
  if (path.size() < 4 || path.size() % 2 != 0) return false;
  if (path.front() != u || path.back() != v) return false;
  for (std::size_t r = 0; r + 1 < path.size(); ++r) {
    if (!g.has_edge(path[r], path[r + 1])) return false;
  }
  const std::size_t k = path.size() / 2 - 1;
  if (w.factor_assignment.size() != k) return false;
  std::vector<int> seen;
  for (std::size_t l = 0; l < k; ++l) {
    const int i = w.factor_assignment[l];
    if (i < 0 || i >= p.size()) return false;
    if (std::find(seen.begin(), seen.end(), i) != seen.end()) return false;
    seen.push_back(i);
    if (!(p.factors[static_cast<std::size_t>(i)] == Edge(path[2 * l + 1], path[2 * l + 2]))) return false;
  }
  for (const Edge& e : p.distinct()) {
    int uses = 0;
    for (std::size_t l = 0; l < k; ++l) uses += Edge(path[2 * l + 1], path[2 * l + 2]) == e ? 1 : 0;
    if (uses > p.multiplicity(e)) return false;
  }
  return true;
}

MonomialIdeal ColonGraphResult::ideal() const {
  std::vector<Monomial> gens;
  for (const Edge& e : graph.edges()) gens.push_back(Monomial::from_edge(e));
  for (int v : set_members(extra_squares)) gens.push_back(Monomial::variable(v) * Monomial::variable(v));
  return MonomialIdeal(std::move(gens));
}

ColonGraphResult colon_graph(const Graph& g, const SFoldProduct& p) {
  check_factors(g, p);
  const int n = g.vertex_count();
  ColonGraphResult r;
  std::vector<VertexSet> rows(g.rows());
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) continue;
      auto w = find_even_connection(g, p, u, v);
      if (!w) continue;
      if (u == v) {
        r.extra_squares |= vertex_bit(u);
      } else {
        rows[static_cast<std::size_t>(u)] |= vertex_bit(v);
        rows[static_cast<std::size_t>(v)] |= vertex_bit(u);
        r.new_edges.emplace_back(u, v);
      }
      r.new_pairs.push_back(ColonPair{u, v, std::move(*w)});
    }
  }
  r.graph = Graph::from_rows(std::move(rows), g.labels());
  if (auto b = is_bipartite(g)) {
    r.bipartite_closure = r.extra_squares == 0 && is_valid_bipartition(r.graph, *b);
  }
  return r;
}

ColonGeneratorCheck verify_colon_generators(const Graph& g, const SFoldProduct& p,
                                           const MonomialIdeal& power_s_plus_1) {
  const MonomialIdeal left = colon_graph(g, p).ideal();
  const MonomialIdeal right = colon_by_monomial(power_s_plus_1, p.monomial());
  ColonGeneratorCheck c;
  c.equal = ideal_equals(left, right);
  if (!c.equal) {
    for (const Monomial& m : left.generators()) {
      if (std::find(right.generators().begin(), right.generators().end(), m) == right.generators().end()) {
        c.only_left.push_back(m);
      }
    }
    for (const Monomial& m : right.generators()) {
      if (std::find(left.generators().begin(), left.generators().end(), m) == left.generators().end()) {
        c.only_right.push_back(m);
      }
    }
  }
  return c;
}

ColonGeneratorCheck verify_colon_generators(const Graph& g, const SFoldProduct& p) {
  check_factors(g, p);
  return verify_colon_generators(g, p, power(edge_ideal(g), p.size() + 1));
}

bool verify_iterated_colon(const Graph& g, const SFoldProduct& p, int i) {
  if (!is_bipartite(g)) throw PreconditionError("verify_iterated_colon: graph is not bipartite");
  check_factors(g, p);
  const int s = p.size();
  if (s < 1) throw PreconditionError("verify_iterated_colon: empty product");
  if (i < 0 || i >= s) throw PreconditionError("verify_iterated_colon: factor index out of range");
  const MonomialIdeal ideal = edge_ideal(g);
  const MonomialIdeal left = colon_by_monomial(power(ideal, s + 1), p.monomial());
  const MonomialIdeal first = colon_by_monomial(power(ideal, 2), Monomial::from_edge(p.factors[static_cast<std::size_t>(i)]));
  Monomial rest;
  for (int j = 0; j < s; ++j) {
    if (j != i) rest = rest * Monomial::from_edge(p.factors[static_cast<std::size_t>(j)]);
  }
  const MonomialIdeal right = colon_by_monomial(power(first, s), rest);
  return ideal_equals(left, right);
}

bool check_connection_monotone(const Graph& g, const SFoldProduct& sub, const SFoldProduct& super, int u, int v) {
  if (!sub.is_submultiset_of(super)) {
    throw PreconditionError("check_connection_monotone: product is not contained in the larger product");
  }
  if (!find_even_connection(g, sub, u, v)) return true;
  return find_even_connection(g, super, u, v).has_value();
}

}  // namespace edgereg
