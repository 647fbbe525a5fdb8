#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

enum class RegClassTag { Reg2, Reg3, RegGeq4 };

std::string to_string(RegClassTag tag);

/// Combinatorial regularity class of a connected bipartite graph.
struct RegClass {
  RegClassTag tag = RegClassTag::Reg2;
  Bipartition bipartition;
  /// Induced cycle of length >= 4 in the complement (absent for reg2).
  std::optional<CycleWitness> complement_cycle;
  /// Induced cycle of length >= 6 in the bipartite complement (regGeq4 only).
  std::optional<CycleWitness> bipartite_complement_cycle;
};

/// Linear resolution test: the complement is chordal. Throws
/// PreconditionError on an edgeless graph.
bool froberg_is_reg2(const Graph& g);

/// reg2 when the complement is chordal; otherwise reg3 when the bipartite
/// complement has no induced cycle of length >= 6; otherwise regGeq4.
/// Throws PreconditionError for disconnected, non-bipartite or edgeless input.
RegClass classify_bipartite(const Graph& g);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2015u;

/// Caches I(G)^s and reg(I(G)^s) for one graph.
class PowerTower {
 public:
  PowerTower(Graph g, EngineOptions opts);

  const Graph& graph() const { return graph_; }
  const EngineOptions& options() const { return opts_; }
  const MonomialIdeal& power(int s);
  const BettiTable& table(int s);
  int regularity(int s);

 private:
  Graph graph_;
  EngineOptions opts_;
  std::map<int, MonomialIdeal> powers_;
  std::map<int, BettiTable> tables_;
};

/// reg(I) <= max{ reg(I : m) + deg m, reg(I, m) }; for a variable m, reg(I)
/// must equal one of the two terms. reg of the unit ideal is 0.
struct ColonSplitCheck {
  int reg_ideal = 0;
  int reg_colon = 0;
  int reg_sum = 0;
  int degree = 0;
  bool inequality = false;
  /// Meaningful only when degree == 1.
  bool equality = true;

  bool holds() const { return inequality && equality; }
};

ColonSplitCheck check_colon_split(const MonomialIdeal& ideal, const Monomial& m, const EngineOptions& opts = {});

/// reg(I^{s+1}) <= max{ reg(I^{s+1} : m_l) + 2s over generators m_l of I^s,
/// reg(I^s) }.
struct PowerStepCheck {
  int s = 0;
  int reg_next = 0;
  int reg_current = 0;
  int max_colon_reg = 0;
  int bound = 0;

  bool holds() const { return reg_next <= bound; }
};

PowerStepCheck check_power_step_bound(const Graph& g, int s, const EngineOptions& opts = {});
PowerStepCheck check_power_step_bound(PowerTower& tower, int s);

/// Every colon (I^{s+1} : e_1...e_s) of a reg3 bipartite graph has
/// regularity <= 3. Products are exhaustive for s <= 2 and `samples` seeded
/// draws for larger s.
struct Reg3ColonCheck {
  int s = 0;
  std::size_t products = 0;
  int max_colon_reg = 0;
  bool attains_three = false;
  /// Colons whose graph is reg2 by the complement test have regularity 2.
  bool linear_colons_consistent = true;
  std::uint64_t seed = kDefaultSeed;

  bool holds() const { return max_colon_reg <= 3 && linear_colons_consistent; }
};

Reg3ColonCheck check_reg3_colons(const Graph& g, int s, const EngineOptions& opts = {}, std::uint64_t seed = kDefaultSeed,
                        std::size_t samples = 200);
Reg3ColonCheck check_reg3_colons(PowerTower& tower, int s, std::uint64_t seed = kDefaultSeed, std::size_t samples = 200);

struct VerificationReport {
  std::size_t index = 0;
  std::string graph6;
  int vertices = 0;
  int edges = 0;
  RegClassTag reg_class = RegClassTag::Reg2;
  /// reg(I) from Hochster's formula.
  int hochster_regularity = 0;
  /// reg(I^s) for s = 1..s_max from the Koszul engine; empty when not run.
  std::vector<int> regularities;
  std::vector<int> expected;
  std::vector<PowerStepCheck> power_step;
  std::vector<Reg3ColonCheck> reg3_colons;
  std::vector<ColonSplitCheck> colon_split;
  /// Linear presentation of I(G) and absence of an induced 4-cycle in G^c.
  std::optional<std::pair<bool, bool>> linear_presentation;
  std::map<std::string, bool> claims;
  std::map<std::string, double> timings_ms;
  std::uint64_t seed = kDefaultSeed;

  bool passed() const;
};

/// reg(I(G)^s) for s = 1..s_max, asserting 2s+1 for reg3 and 2s for reg2.
/// Throws PreconditionError for regGeq4 graphs or s_max < 1.
VerificationReport verify_power_regularity(const Graph& g, int s_max, const EngineOptions& opts = {});

struct SweepOptions {
  int n_max = 6;
  int s_max = 2;
  bool allow_n8 = false;
  std::uint64_t seed = kDefaultSeed;
  /// Colon products for the regularity-3 colon bound run for s = 1..reg3_colons_s_max.
  int reg3_colons_s_max = 2;
  std::size_t reg3_colons_samples = 200;
  bool check_colon_split = true;
  bool check_power_step = true;
  bool check_reg3_colons = true;
  bool check_linear_presentation = true;
};

/// Raised when the combinatorial class and the homological regularity of a
/// graph disagree. `dump` holds graph6 and Betti tables of a minimized
/// counterexample.
class SweepAbort : public std::runtime_error {
 public:
  SweepAbort(const std::string& what, std::string dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

/// One report per connected bipartite isomorphism class on 2..n_max vertices,
/// delivered to `sink` in canonical order. n_max above 7 needs allow_n8 and
/// never exceeds 8 (CapError("n_max") otherwise).
void sweep(const SweepOptions& sweep_opts, const EngineOptions& opts,
           const std::function<void(const VerificationReport&)>& sink);

}  // namespace edgereg
