#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "edgereg/graph.hpp"
#include "edgereg/linalg.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/simplicial.hpp"

namespace edgereg {

inline constexpr std::size_t kDefaultTaylorGeneratorCap = 22;

struct EngineOptions {
  Field field = Field::F2;
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// The Taylor oracle walks all 2^g generator subsets.
  std::size_t taylor_generator_cap = kDefaultTaylorGeneratorCap;
  unsigned workers = 1;
};

/// Graded Betti numbers beta_{i,j}, with the optional multigraded refinement
/// beta_{i,b}. Only nonzero entries are stored.
struct BettiTable {
  enum class Convention { Ideal, Quotient };

  Convention convention = Convention::Ideal;
  Field field = Field::F2;
  std::map<std::pair<int, int>, std::uint64_t> entries;
  std::map<std::pair<int, Monomial>, std::uint64_t> multigraded;

  std::uint64_t at(int i, int j) const;
  /// Adds `rank` at (i, b) and at (i, deg b).
  void add(int i, const Monomial& b, std::uint64_t rank);
  void merge(const BettiTable& other);
  bool empty() const { return entries.empty(); }
  int max_homological_index() const;
  /// max{ j - i : beta_{i,j} != 0 } of this table as stored. Throws
  /// PreconditionError on an empty table.
  int regularity() const;
  /// Same numbers in the other convention: beta_{i,j}(I) = beta_{i+1,j}(S/I).
  /// beta_{0,0}(S/I) has no counterpart and is dropped.
  BettiTable as_ideal() const;
  BettiTable as_quotient() const;

  /// Graded parts only; the multigraded refinement is not compared.
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.convention == b.convention && a.entries == b.entries;
  }
};

std::string to_string(BettiTable::Convention c);

/// Table of S/I(g) via Hochster's formula:
///   beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(Ind(g[W])).
/// Non-empty independent W are skipped (their complex is a full simplex).
/// The multigraded refinement is indexed by the squarefree monomial x^W.
BettiTable hochster_betti(const Graph& g, Field f, unsigned workers = 1);

/// Multigraded table of I from upper Koszul complexes
///   beta_{i,b}(I) = dim H~_{i-1}(K^b(I)),  K^b(I) = { squarefree t : x^(b-t) in I },
/// for b over the lcm lattice. K^b is the union of the simplices
/// { v : g_v < b_v } over generators g dividing b.
BettiTable koszul_betti(const MonomialIdeal& ideal, const EngineOptions& opts = {});

/// Multigraded table of I from the Taylor complex tensored with the field,
/// one multidegree strand at a time. Each strand is first shrunk by matching
/// every cell avoiding a fixed generator g0 with its union with g0; the
/// unmatched cells form a subcomplex with the same homology. Throws
/// CapError("taylor_generator_cap") above the configured generator count.
BettiTable taylor_betti(const MonomialIdeal& ideal, const EngineOptions& opts = {});

/// reg(I) from the Koszul table in the ideal convention. The unit ideal has
/// regularity 0; the zero ideal throws PreconditionError.
int regularity(const MonomialIdeal& ideal, const EngineOptions& opts = {});

inline constexpr int kAllSteps = INT_MAX;

/// Tor_i(I, K)_j = 0 for 1 <= i <= k and j != i + 2s. The caller asserts I is
/// the s-th power of a quadratic ideal; k = kAllSteps asks for a linear
/// resolution.
bool is_k_steps_linear(const MonomialIdeal& ideal, int s, int k, const EngineOptions& opts = {});
bool is_k_steps_linear(const BettiTable& ideal_table, int s, int k);

/// beta_{i,j} = 0 whenever j < i + min_degree (ideal convention).
bool satisfies_degree_floor(const BettiTable& ideal_table, int min_degree);

}  // namespace edgereg
