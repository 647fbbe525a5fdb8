#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

inline constexpr int kMaxVariables = kMaxVertices;
inline constexpr int kMaxExponent = 255;

/// Exponent vector over variables x0..x15 (variable i is vertex i), one byte
/// per variable.
class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, kMaxVariables>;

  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(int i);
  static Monomial from_edge(const Edge& e);
  /// Product of x_v over v in s.
  static Monomial squarefree(VertexSet s);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const Exponents& exponents() const { return exps_; }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  VertexSet support() const;
  /// One past the highest variable with a nonzero exponent.
  int span() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws PreconditionError unless this is divisible by d.
  Monomial divided_by(const Monomial& d) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors (x0 most significant).
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  Exponents exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Serialization order: ascending total degree, then lexicographically
/// descending (x0 > x1 > ...).
bool grlex_before(const Monomial& a, const Monomial& b);

/// "x0^2*x3"; exponent 1 and factor 1 elided; the unit monomial prints "1".
/// With labels, variable i prints as labels[i].
std::string to_string(const Monomial& m, const std::vector<std::string>& labels = {});
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& labels = {});

/// Minimal generating set of a monomial ideal, kept in serialization order.
/// The empty set is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `generators`.
  explicit MonomialIdeal(std::vector<Monomial> generators);

  static MonomialIdeal unit();

  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  int min_degree() const;
  int max_degree() const;
  /// lcm of all generators.
  Monomial top() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Monomial> gens_;
};

std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& labels = {});

/// Divisibility-minimal elements of `gens`, deduplicated, in serialization order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// One squarefree quadratic generator per edge. Isolated vertices contribute
/// nothing.
MonomialIdeal edge_ideal(const Graph& g);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// s-th power by iterated products; throws PreconditionError for s < 1.
MonomialIdeal power(const MonomialIdeal& ideal, int s);

/// (I : m) = ( g / gcd(g, m) : g a generator of I ).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// (I, m).
MonomialIdeal add_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// Minimal generating sets are unique, so ideal equality is set equality.
bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);

inline constexpr std::size_t kDefaultLatticeCap = 200'000;

/// All lcms of nonempty generator subsets, in serialization order. Built by
/// joining each new element with every generator until closed. Throws
/// CapError("lattice_cap") past `cap` elements.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = kDefaultLatticeCap);

/// e_1 ... e_s, repetition allowed.
struct SFoldProduct {
  std::vector<Edge> factors;

  int size() const { return static_cast<int>(factors.size()); }
  Monomial monomial() const;
  /// Number of factors equal to e.
  int multiplicity(const Edge& e) const;
  /// Distinct factor values, sorted.
  std::vector<Edge> distinct() const;
  /// Multiset containment of factors.
  bool is_submultiset_of(const SFoldProduct& other) const;
};

/// Throws PreconditionError if some factor is not an edge of g.
SFoldProduct make_product(const Graph& g, std::vector<Edge> factors);

/// Every s-fold product of edges of g as a sorted multiset, in lexicographic
/// order of the factor lists.
std::vector<SFoldProduct> all_products(const Graph& g, int s);

/// `count` products drawn uniformly (factor by factor) from a 64-bit Mersenne
/// twister seeded with `seed`; factors of each product are sorted.
std::vector<SFoldProduct> sample_products(const Graph& g, int s, std::size_t count,
                                          std::uint64_t seed);

}  // namespace edgereg
