#include "edgereg/characterizations.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "edgereg/enumerate.hpp"
#include "edgereg/error.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/parallel.hpp"
#include "edgereg/serialize.hpp"

namespace edgereg {

std::string to_string(RegClassTag tag) {
  switch (tag) {
    case RegClassTag::Reg2:
      return "reg2";
    case RegClassTag::Reg3:
      return "reg3";
    case RegClassTag::RegGeq4:
      return "regGeq4";
  }
  return "?";
}

bool froberg_is_reg2(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("froberg_is_reg2: edgeless graph");
  return is_chordal(complement(g)).chordal;
}

RegClass classify_bipartite(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("classify_bipartite: edgeless graph");
  const auto b = is_bipartite(g);
  if (!b) throw PreconditionError("classify_bipartite: graph is not bipartite");
  if (!is_connected(g)) throw PreconditionError("classify_bipartite: graph is disconnected");
  RegClass c;
  c.bipartition = *b;
  const ChordalityResult co = is_chordal(complement(g));
  if (co.chordal) return c;
  c.complement_cycle = co.witness;
  c.bipartite_complement_cycle = find_induced_cycle_geq(bipartite_complement(g, *b), 6);
  c.tag = c.bipartite_complement_cycle ? RegClassTag::RegGeq4 : RegClassTag::Reg3;
  return c;
}

PowerTower::PowerTower(Graph g, EngineOptions opts) : graph_(std::move(g)), opts_(opts) {}

const MonomialIdeal& PowerTower::power(int s) {
  if (s < 1) throw PreconditionError("PowerTower: power must be at least 1");
  if (auto it = powers_.find(s); it != powers_.end()) return it->second;
  MonomialIdeal p = s == 1 ? edge_ideal(graph_) : product(power(s - 1), power(1));
  return powers_.emplace(s, std::move(p)).first->second;
}

const BettiTable& PowerTower::table(int s) {
  if (auto it = tables_.find(s); it != tables_.end()) return it->second;
  BettiTable t = koszul_betti(power(s), opts_);
  return tables_.emplace(s, std::move(t)).first->second;
}

int PowerTower::regularity(int s) { return table(s).regularity(); }

ColonSplitCheck check_colon_split(const MonomialIdeal& ideal, const Monomial& m, const EngineOptions& opts) {
  if (ideal.is_zero()) throw PreconditionError("check_colon_split: zero ideal");
  if (m.is_one()) throw PreconditionError("check_colon_split: monomial must not be 1");
  ColonSplitCheck c;
  c.degree = m.degree();
  c.reg_ideal = regularity(ideal, opts);
  c.reg_colon = regularity(colon_by_monomial(ideal, m), opts);
  c.reg_sum = regularity(add_monomial(ideal, m), opts);
  c.inequality = c.reg_ideal <= std::max(c.reg_colon + c.degree, c.reg_sum);
  if (c.degree == 1) c.equality = c.reg_ideal == c.reg_colon + 1 || c.reg_ideal == c.reg_sum;
  return c;
}

PowerStepCheck check_power_step_bound(PowerTower& tower, int s) {
  if (s < 1) throw PreconditionError("check_power_step_bound: s must be at least 1");
  PowerStepCheck c;
  c.s = s;
  c.reg_next = tower.regularity(s + 1);
  c.reg_current = tower.regularity(s);
  const MonomialIdeal& next = tower.power(s + 1);
  const auto& gens = tower.power(s).generators();
  const auto regs = parallel_map(gens.size(), tower.options().workers, [&](std::size_t l) {
    EngineOptions serial = tower.options();
    serial.workers = 1;
    return regularity(colon_by_monomial(next, gens[l]), serial);
  });
  c.max_colon_reg = regs.empty() ? 0 : *std::max_element(regs.begin(), regs.end());
  c.bound = std::max(c.max_colon_reg + 2 * s, c.reg_current);
  return c;
}

PowerStepCheck check_power_step_bound(const Graph& g, int s, const EngineOptions& opts) {
  PowerTower tower(g, opts);
  return check_power_step_bound(tower, s);
}

Reg3ColonCheck check_reg3_colons(PowerTower& tower, int s, std::uint64_t seed, std::size_t samples) {
  const Graph& g = tower.graph();
  if (classify_bipartite(g).tag != RegClassTag::Reg3) {
    throw PreconditionError("check_reg3_colons: graph is not in the regularity-3 class");
  }
  if (s < 1) throw PreconditionError("check_reg3_colons: s must be at least 1");
  Reg3ColonCheck c;
  c.s = s;
  c.seed = seed;
  const std::vector<SFoldProduct> products = s <= 2 ? all_products(g, s) : sample_products(g, s, samples, seed);
  c.products = products.size();
  const MonomialIdeal& next = tower.power(s + 1);
  struct Outcome {
    int reg;
    bool consistent;
  };
  const auto outcomes = parallel_map(products.size(), tower.options().workers, [&](std::size_t k) {
    EngineOptions serial = tower.options();
    serial.workers = 1;
    const MonomialIdeal colon = colon_by_monomial(next, products[k].monomial());
    const int reg = regularity(colon, serial);
    // For bipartite g the colon is the edge ideal of a graph on V(g).
    std::vector<Edge> edges;
    for (const Monomial& m : colon.generators()) {
      const std::vector<int> vars = set_members(m.support());
      if (vars.size() == 2 && m.is_squarefree()) edges.emplace_back(vars[0], vars[1]);
    }
    bool consistent = true;
    if (edges.size() == colon.size()) {
      const Graph colon_graph(g.vertex_count(), edges);
      if (froberg_is_reg2(colon_graph)) consistent = reg == 2;
    }
    return Outcome{reg, consistent};
  });
  for (const Outcome& o : outcomes) {
    c.max_colon_reg = std::max(c.max_colon_reg, o.reg);
    c.attains_three |= o.reg == 3;
    c.linear_colons_consistent &= o.consistent;
  }
  return c;
}

Reg3ColonCheck check_reg3_colons(const Graph& g, int s, const EngineOptions& opts, std::uint64_t seed, std::size_t samples) {
  PowerTower tower(g, opts);
  return check_reg3_colons(tower, s, seed, samples);
}

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.second; });
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

bool class_matches(RegClassTag tag, int reg) {
  switch (tag) {
    case RegClassTag::Reg2:
      return reg == 2;
    case RegClassTag::Reg3:
      return reg == 3;
    case RegClassTag::RegGeq4:
      return reg >= 4;
  }
  return false;
}

void run_power_sequence(VerificationReport& r, PowerTower& tower, int s_max) {
  const int offset = r.reg_class == RegClassTag::Reg3 ? 1 : 0;
  bool floor_ok = true;
  for (int s = 1; s <= s_max; ++s) {
    const int reg = tower.regularity(s);
    r.regularities.push_back(reg);
    r.expected.push_back(2 * s + offset);
    floor_ok &= reg >= 2 * s && satisfies_degree_floor(tower.table(s), 2 * s);
  }
  r.claims["power_formula"] = r.regularities == r.expected;
  r.claims["degree_floor"] = floor_ok;
}

}  // namespace

VerificationReport verify_power_regularity(const Graph& g, int s_max, const EngineOptions& opts) {
  if (s_max < 1) throw PreconditionError("verify_power_regularity: s_max must be at least 1");
  const RegClass cls = classify_bipartite(g);
  if (cls.tag == RegClassTag::RegGeq4) {
    throw PreconditionError("verify_power_regularity: no power formula is claimed for the regGeq4 class");
  }
  VerificationReport r;
  r.graph6 = encode_graph6(g);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.reg_class = cls.tag;
  PowerTower tower(g, opts);
  const auto start = Clock::now();
  run_power_sequence(r, tower, s_max);
  r.hochster_regularity = r.regularities.front();
  r.timings_ms["powers"] = elapsed_ms(start);
  return r;
}

namespace {

VerificationReport build_report(const Graph& g, std::size_t index, const SweepOptions& so, const EngineOptions& opts) {
  VerificationReport r;
  r.index = index;
  r.graph6 = encode_graph6(g);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.seed = so.seed;

  auto t = Clock::now();
  r.reg_class = classify_bipartite(g).tag;
  r.timings_ms["classify"] = elapsed_ms(t);

  t = Clock::now();
  r.hochster_regularity = hochster_betti(g, opts.field).as_ideal().regularity();
  r.timings_ms["hochster"] = elapsed_ms(t);
  r.claims["classification"] = class_matches(r.reg_class, r.hochster_regularity);

  PowerTower tower(g, opts);
  t = Clock::now();
  r.claims["engines_agree"] = tower.regularity(1) == r.hochster_regularity;
  if (r.reg_class != RegClassTag::RegGeq4) run_power_sequence(r, tower, so.s_max);
  r.timings_ms["powers"] = elapsed_ms(t);

  if (so.check_power_step) {
    t = Clock::now();
    bool ok = true;
    for (int s = 1; s < so.s_max; ++s) {
      r.power_step.push_back(check_power_step_bound(tower, s));
      ok &= r.power_step.back().holds();
    }
    r.claims["power_step_bound"] = ok;
    r.timings_ms["power_step"] = elapsed_ms(t);
  }
  if (so.check_reg3_colons && r.reg_class == RegClassTag::Reg3) {
    t = Clock::now();
    bool ok = true;
    for (int s = 1; s <= so.reg3_colons_s_max; ++s) {
      r.reg3_colons.push_back(check_reg3_colons(tower, s, so.seed, so.reg3_colons_samples));
      ok &= r.reg3_colons.back().holds();
    }
    r.claims["reg3_colon_bound"] = ok;
    r.timings_ms["reg3_colons"] = elapsed_ms(t);
  }
  if (so.check_colon_split) {
    t = Clock::now();
    bool ok = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      r.colon_split.push_back(check_colon_split(tower.power(1), Monomial::variable(v), opts));
      ok &= r.colon_split.back().holds();
    }
    r.claims["colon_split"] = ok;
    r.timings_ms["colon_split"] = elapsed_ms(t);
  }
  if (so.check_linear_presentation) {
    const bool linear = is_k_steps_linear(tower.table(1), 1, 1);
    const bool no_four_cycle = !find_induced_four_cycle(complement(g)).has_value();
    r.linear_presentation = std::make_pair(linear, no_four_cycle);
    r.claims["linear_presentation"] = linear == no_four_cycle;
  }
  return r;
}

bool disagrees(const Graph& g, Field f) {
  if (g.edge_count() == 0 || !is_connected(g) || !is_bipartite(g)) return false;
  return !class_matches(classify_bipartite(g).tag, hochster_betti(g, f).as_ideal().regularity());
}

/// Greedily deletes vertices, then edges, while the disagreement persists.
Graph minimize_counterexample(Graph g, Field f) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = 0; v < g.vertex_count() && !shrunk; ++v) {
      std::vector<int> keep;
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (w != v) keep.push_back(w);
      }
      Graph smaller = induced_subgraph(g, keep).graph;
      if (disagrees(smaller, f)) {
        g = std::move(smaller);
        shrunk = true;
      }
    }
    const std::vector<Edge> edges = g.edges();
    for (std::size_t k = 0; k < edges.size() && !shrunk; ++k) {
      std::vector<Edge> rest(edges);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      Graph smaller(g.vertex_count(), rest);
      if (disagrees(smaller, f)) {
        g = std::move(smaller);
        shrunk = true;
      }
    }
  }
  return g;
}

std::string counterexample_dump(const Graph& g, const EngineOptions& opts) {
  std::ostringstream out;
  out << "graph6: " << encode_graph6(g) << "\n";
  out << "class: " << to_string(classify_bipartite(g).tag) << "\n";
  out << "hochster: " << betti_table_json(hochster_betti(g, opts.field)).dump() << "\n";
  out << "koszul: " << betti_table_json(koszul_betti(edge_ideal(g), opts)).dump() << "\n";
  return out.str();
}

}  // namespace

void sweep(const SweepOptions& so, const EngineOptions& opts,
           const std::function<void(const VerificationReport&)>& sink) {
  const int limit = so.allow_n8 ? kMaxEnumerationVertices : 7;
  if (so.n_max < 2 || so.n_max > limit) throw CapError("n_max", static_cast<std::size_t>(limit));
  if (so.s_max < 1) throw PreconditionError("sweep: s_max must be at least 1");
  std::size_t index = 0;
  for (int n = 2; n <= so.n_max; ++n) {
    const std::vector<Graph> graphs = enumerate_connected_bipartite(n);
    EngineOptions serial = opts;
    serial.workers = 1;
    const auto reports = parallel_map(graphs.size(), opts.workers, [&](std::size_t k) {
      return build_report(graphs[k], index + k, so, serial);
    });
    for (std::size_t k = 0; k < reports.size(); ++k) {
      sink(reports[k]);
      if (!reports[k].claims.at("classification")) {
        const Graph small = minimize_counterexample(graphs[k], opts.field);
        throw SweepAbort("classification disagrees with homological regularity for graph " + reports[k].graph6,
                         counterexample_dump(small, opts));
      }
    }
    index += graphs.size();
  }
}

}  // namespace edgereg
