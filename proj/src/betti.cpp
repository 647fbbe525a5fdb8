#include "edgereg/betti.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "edgereg/error.hpp"
#include "edgereg/parallel.hpp"

namespace edgereg {

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, const Monomial& b, std::uint64_t rank) {
  if (rank == 0) return;
  multigraded[{i, b}] += rank;
  entries[{i, b.degree()}] += rank;
}

void BettiTable::merge(const BettiTable& other) {
  for (const auto& [key, r] : other.entries) entries[key] += r;
  for (const auto& [key, r] : other.multigraded) multigraded[key] += r;
}

int BettiTable::max_homological_index() const {
  int top = -1;
  for (const auto& [key, r] : entries) top = std::max(top, key.first);
  return top;
}

int BettiTable::regularity() const {
  if (entries.empty()) throw PreconditionError("regularity of an empty Betti table");
  int reg = INT_MIN;
  for (const auto& [key, r] : entries) reg = std::max(reg, key.second - key.first);
  return reg;
}

BettiTable BettiTable::as_ideal() const {
  if (convention == Convention::Ideal) return *this;
  BettiTable t;
  t.convention = Convention::Ideal;
  t.field = field;
  for (const auto& [key, r] : entries) {
    if (key.first > 0) t.entries[{key.first - 1, key.second}] = r;
  }
  for (const auto& [key, r] : multigraded) {
    if (key.first > 0) t.multigraded[{key.first - 1, key.second}] = r;
  }
  return t;
}

BettiTable BettiTable::as_quotient() const {
  if (convention == Convention::Quotient) return *this;
  BettiTable t;
  t.convention = Convention::Quotient;
  t.field = field;
  t.add(0, Monomial{}, 1);
  for (const auto& [key, r] : entries) t.entries[{key.first + 1, key.second}] = r;
  for (const auto& [key, r] : multigraded) t.multigraded[{key.first + 1, key.second}] = r;
  return t;
}

std::string to_string(BettiTable::Convention c) {
  return c == BettiTable::Convention::Ideal ? "ideal" : "quotient";
}

namespace {

using Contribution = std::vector<std::pair<int, std::uint64_t>>;

BettiTable assemble(BettiTable::Convention convention, Field f, const std::vector<Monomial>& degrees,
                    const std::vector<Contribution>& parts) {
  BettiTable t;
  t.convention = convention;
  t.field = f;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& [i, r] : parts[k]) t.add(i, degrees[k], r);
  }
  return t;
}

}  // namespace

BettiTable hochster_betti(const Graph& g, Field f, unsigned workers) {
  const int n = g.vertex_count();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Monomial> degrees(subsets);
  for (std::size_t w = 0; w < subsets; ++w) degrees[w] = Monomial::squarefree(static_cast<VertexSet>(w));

  const auto parts = parallel_map(subsets, workers, [&](std::size_t index) {
    const auto w = static_cast<VertexSet>(index);
    Contribution out;
    bool independent = true;
    for (int v : set_members(w)) independent &= (g.neighbors(v) & w) == 0;
    if (w != 0 && independent) return out;
    const std::vector<int> members = set_members(w);
    const InducedSubgraph sub = induced_subgraph(g, members);
    const HomologyRanks h = reduced_homology_ranks(independence_complex(sub.graph), f);
    const int size = static_cast<int>(members.size());
    for (int d = -1; d < static_cast<int>(h.by_dim.size()) - 1; ++d) {
      if (h.at(d) != 0) out.emplace_back(size - 1 - d, h.at(d));
    }
    return out;
  });
  return assemble(BettiTable::Convention::Quotient, f, degrees, parts);
}

BettiTable koszul_betti(const MonomialIdeal& ideal, const EngineOptions& opts) {
  if (ideal.is_zero()) throw PreconditionError("koszul_betti: zero ideal");
  const std::vector<Monomial> lattice = lcm_lattice(ideal, opts.lattice_cap);
  const auto parts = parallel_map(lattice.size(), opts.workers, [&](std::size_t index) {
    const Monomial& b = lattice[index];
    const std::vector<int> vars = set_members(b.support());
    std::vector<VertexSet> facets;
    for (const Monomial& g : ideal.generators()) {
      if (!g.divides(b)) continue;
      VertexSet slack = 0;
      for (std::size_t t = 0; t < vars.size(); ++t) {
        if (g[vars[t]] < b[vars[t]]) slack |= vertex_bit(static_cast<int>(t));
      }
      facets.push_back(slack);
    }
    const auto complex = SimplicialComplex::from_facets(static_cast<int>(vars.size()), facets);
    const HomologyRanks h = reduced_homology_ranks(complex, opts.field);
    Contribution out;
    for (int d = -1; d < static_cast<int>(h.by_dim.size()) - 1; ++d) {
      if (h.at(d) != 0) out.emplace_back(d + 1, h.at(d));
    }
    return out;
  });
  return assemble(BettiTable::Convention::Ideal, opts.field, lattice, parts);
}

BettiTable taylor_betti(const MonomialIdeal& ideal, const EngineOptions& opts) {
  if (ideal.is_zero()) throw PreconditionError("taylor_betti: zero ideal");
  const std::vector<Monomial>& gens = ideal.generators();
  const std::size_t count = gens.size();
  if (count > opts.taylor_generator_cap || count >= 31) {
    throw CapError("taylor_generator_cap", opts.taylor_generator_cap);
  }
  using Mask = std::uint32_t;
  const Mask cells = Mask{1} << count;

  // lcm of every generator subset; lcm_of[0] is the unit monomial.
  std::vector<Monomial> lcm_of(cells);
  for (Mask s = 1; s < cells; ++s) {
    const Mask low = s & (~s + 1);
    lcm_of[s] = lcm(lcm_of[s ^ low], gens[static_cast<std::size_t>(std::countr_zero(low))]);
  }

  // Strand per multidegree b, with the matching generator g0 chosen to
  // minimise the coordinates where g0 already reaches b. If there are none,
  // no cell is critical and the strand is acyclic.
  struct Strand {
    int pivot = -1;
    std::vector<Mask> critical;
  };
  std::unordered_map<Monomial, Strand, MonomialHash> strands;
  for (Mask s = 1; s < cells; ++s) {
    auto [it, inserted] = strands.try_emplace(lcm_of[s]);
    if (!inserted) continue;
    const Monomial& b = it->first;
    int best_tight = INT_MAX;
    for (std::size_t k = 0; k < count; ++k) {
      if (!gens[k].divides(b)) continue;
      int tight = 0;
      for (int v : set_members(b.support())) tight += gens[k][v] == b[v] ? 1 : 0;
      if (tight < best_tight) {
        best_tight = tight;
        it->second.pivot = static_cast<int>(k);
      }
    }
  }
  for (Mask s = 1; s < cells; ++s) {
    Strand& strand = strands.at(lcm_of[s]);
    const Mask pivot_bit = Mask{1} << strand.pivot;
    if ((s & pivot_bit) == 0) continue;
    const Mask rest = s ^ pivot_bit;
    if (rest == 0 || lcm_of[rest] != lcm_of[s]) strand.critical.push_back(s);
  }

  std::vector<Monomial> degrees;
  std::vector<const Strand*> work;
  for (const auto& [b, strand] : strands) {
    degrees.push_back(b);
    work.push_back(&strand);
  }
  const auto parts = parallel_map(work.size(), opts.workers, [&](std::size_t index) {
    const Monomial& b = degrees[index];
    const Strand& strand = *work[index];
    // Critical cells by homological index i = |cell| - 1.
    std::vector<std::vector<Mask>> by_index;
    for (Mask s : strand.critical) {
      const auto i = static_cast<std::size_t>(std::popcount(s) - 1);
      if (by_index.size() <= i) by_index.resize(i + 1);
      by_index[i].push_back(s);
    }
    for (auto& layer : by_index) std::sort(layer.begin(), layer.end());
    // rank_of[i] = rank of the differential from index i to index i-1.
    std::vector<std::size_t> rank_of(by_index.size() + 1, 0);
    for (std::size_t i = 1; i < by_index.size(); ++i) {
      const auto& cols = by_index[i];
      const auto& rows = by_index[i - 1];
      IntMatrix m(rows.size(), cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        int sign = 1;
        for (Mask rest = cols[j]; rest != 0; rest &= rest - 1) {
          const Mask face = cols[j] & ~(rest & (~rest + 1));
          if (lcm_of[face] == b) {
            const auto row = std::lower_bound(rows.begin(), rows.end(), face);
            m.at(static_cast<std::size_t>(row - rows.begin()), j) = sign;
          }
          sign = -sign;
        }
      }
      rank_of[i] = rank(m, opts.field);
    }
    Contribution out;
    for (std::size_t i = 0; i < by_index.size(); ++i) {
      const std::size_t h = by_index[i].size() - rank_of[i] - rank_of[i + 1];
      if (h != 0) out.emplace_back(static_cast<int>(i), h);
    }
    return out;
  });
  return assemble(BettiTable::Convention::Ideal, opts.field, degrees, parts);
}

int regularity(const MonomialIdeal& ideal, const EngineOptions& opts) {
  if (ideal.is_zero()) throw PreconditionError("regularity of the zero ideal is undefined");
  return koszul_betti(ideal, opts).regularity();
}

bool is_k_steps_linear(const BettiTable& ideal_table, int s, int k) {
  const BettiTable t = ideal_table.as_ideal();
  for (const auto& [key, r] : t.entries) {
    const auto [i, j] = key;
    if (i >= 1 && i <= k && r != 0 && j != i + 2 * s) return false;
  }
  return true;
}

bool is_k_steps_linear(const MonomialIdeal& ideal, int s, int k, const EngineOptions& opts) {
  return is_k_steps_linear(koszul_betti(ideal, opts), s, k);
}

bool satisfies_degree_floor(const BettiTable& ideal_table, int min_degree) {
  const BettiTable t = ideal_table.as_ideal();
  return std::all_of(t.entries.begin(), t.entries.end(), [&](const auto& e) {
    return e.second == 0 || e.first.second >= e.first.first + min_degree;
  });
}

}  // namespace edgereg
