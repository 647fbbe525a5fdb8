#include <doctest.h>

#include <random>
#include <set>

#include "edgereg/error.hpp"
#include "edgereg/monomial.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace edgereg;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial(std::vector<int>(e)); }

Monomial random_monomial(std::mt19937_64& rng, int vars, int max_exp) {
  std::vector<int> e(vars);
  for (int& x : e) x = static_cast<int>(rng() % (max_exp + 1));
  return Monomial(e);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int vars, int gens, int max_exp) {
  std::vector<Monomial> g;
  for (int k = 0; k < gens; ++k) g.push_back(random_monomial(rng, vars, max_exp));
  return MonomialIdeal(g);
}

/// Every monomial with exponents <= bound in `vars` variables.
std::vector<Monomial> box(int vars, int bound) {
  std::vector<Monomial> out;
  std::vector<int> e(vars, 0);
  while (true) {
    out.emplace_back(e);
    int i = 0;
    while (i < vars && e[i] == bound) e[i++] = 0;
    if (i == vars) return out;
    ++e[i];
  }
}

bool oracle_contains(const MonomialIdeal& I, const Monomial& m) {
  for (const Monomial& g : I.generators()) {
    if (oracle::monomial_divides(g, m)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a = mono({2, 0, 1});
  const Monomial b = mono({1, 3, 0});
  CHECK((a * b) == mono({3, 3, 1}));
  CHECK(lcm(a, b) == mono({2, 3, 1}));
  CHECK(gcd(a, b) == mono({1, 0, 0}));
  CHECK(a.degree() == 3);
  CHECK(a.support() == 0b101u);
  CHECK(a.span() == 3);
  CHECK(mono({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(a.divided_by(mono({1, 0, 1})) == mono({1}));
  CHECK_THROWS_AS(a.divided_by(b), PreconditionError);
  CHECK(Monomial::from_edge(Edge(3, 1)) == mono({0, 1, 0, 1}));
  CHECK(Monomial::squarefree(0b110u) == mono({0, 1, 1}));
  CHECK(Monomial().is_one());
  CHECK_FALSE(a.is_squarefree());
  std::vector<int> big(1, 200);
  CHECK_THROWS_AS(Monomial(big) * Monomial(big), CapError);
  CHECK_THROWS_AS(Monomial(std::vector<int>(17, 0)), PreconditionError);
  CHECK_THROWS_AS(Monomial(std::vector<int>{-1}), PreconditionError);
}

TEST_CASE("text forms") {
  CHECK(to_string(mono({2, 0, 0, 1})) == "x0^2*x3");
  CHECK(to_string(Monomial()) == "1");
  CHECK(to_string(mono({1, 1}), {"a", "b"}) == "a*b");
  CHECK(parse_monomial("x0^2*x3") == mono({2, 0, 0, 1}));
  CHECK(parse_monomial("1").is_one());
  CHECK(parse_monomial("b*a^3", {"a", "b"}) == mono({3, 1}));
  CHECK_THROWS(parse_monomial("x0^"));
  CHECK_THROWS(parse_monomial("z", {"a"}));
  const MonomialIdeal c4 = edge_ideal(oracle::cycle(4));
  CHECK(to_string(c4) == "{x0*x1, x0*x3, x1*x2, x2*x3}");
  CHECK(to_string(MonomialIdeal()) == "{}");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Monomial m = random_monomial(rng, 6, 4);
    CHECK(parse_monomial(to_string(m)) == m);
  }
}

TEST_CASE("serialization order") {
  CHECK(grlex_before(mono({0, 1}), mono({1, 1})));
  CHECK(grlex_before(mono({1, 0}), mono({0, 1})));
  CHECK_FALSE(grlex_before(mono({0, 1}), mono({0, 1})));
}

TEST_CASE("ideal construction minimalizes") {
  const MonomialIdeal I({mono({1, 1}), mono({2, 1}), mono({1, 1}), mono({0, 0, 3})});
  CHECK(I.size() == 2);
  CHECK(I.contains(mono({3, 5})));
  CHECK_FALSE(I.contains(mono({0, 5, 2})));
  CHECK(I.min_degree() == 2);
  CHECK(I.max_degree() == 3);
  CHECK(I.top() == mono({1, 1, 3}));
  CHECK(MonomialIdeal::unit().is_unit());
  CHECK(MonomialIdeal({Monomial(), mono({1})}).is_unit());
  CHECK(MonomialIdeal().is_zero());
}

TEST_CASE("edge ideal products and powers") {
  const Graph p4 = oracle::path(4);
  const MonomialIdeal I = edge_ideal(p4);
  CHECK(I.size() == 3);
  CHECK(I.is_squarefree());
  CHECK(power(I, 1) == I);
  CHECK(power(I, 2).size() == 6);
  CHECK(power(edge_ideal(oracle::cycle(6)), 2).size() == 21);
  CHECK(power(I, 3) == product(power(I, 2), I));
  CHECK(product(I, MonomialIdeal::unit()) == I);
  CHECK(product(I, MonomialIdeal()).is_zero());
  CHECK_THROWS_AS(power(I, 0), PreconditionError);
  CHECK(edge_ideal(Graph(3)).is_zero());
}

TEST_CASE("powers agree with product search") {
  for (const Graph& g : {oracle::cycle(5), oracle::complete_bipartite(2, 3), oracle::path(5)}) {
    for (int s = 1; s <= 3; ++s) {
      const MonomialIdeal P = power(edge_ideal(g), s);
      for (const Monomial& m : P.generators()) {
        CHECK(m.degree() == 2 * s);
        CHECK(oracle::in_edge_power(g, m, s));
      }
      for (const Monomial& m : box(g.vertex_count(), 2)) {
        if (m.degree() <= 2 * s + 1) CHECK(P.contains(m) == oracle::in_edge_power(g, m, s));
      }
    }
  }
}

TEST_CASE("colon by a monomial") {
  // P4 = a-b-c-d with a=x0, b=x1, c=x2, d=x3
  const MonomialIdeal I2 = power(edge_ideal(oracle::path(4)), 2);
  const MonomialIdeal colon = colon_by_monomial(I2, mono({0, 1, 1}));
  CHECK(colon == MonomialIdeal({mono({1, 1}), mono({0, 1, 1}), mono({0, 0, 1, 1}), mono({1, 0, 0, 1})}));
  const MonomialIdeal I = edge_ideal(oracle::cycle(4));
  CHECK(colon_by_monomial(I, Monomial()) == I);
  CHECK(colon_by_monomial(I, mono({1, 1})).is_unit());
  CHECK(colon_by_monomial(MonomialIdeal(), mono({1})).is_zero());
  CHECK(add_monomial(I, mono({1})) == MonomialIdeal({mono({1}), mono({0, 1, 1}), mono({0, 0, 1, 1})}));
  CHECK(ideal_equals(I, edge_ideal(oracle::cycle(4))));
}

TEST_CASE("colon properties on random ideals") {
  std::mt19937_64 rng(17);
  const std::vector<Monomial> small = box(3, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 3, 1 + static_cast<int>(rng() % 5), 3);
    const Monomial m = random_monomial(rng, 3, 2);
    const Monomial n = random_monomial(rng, 3, 2);
    const MonomialIdeal Im = colon_by_monomial(I, m);
    // membership: x in (I : m) iff x m in I
    for (const Monomial& x : small) CHECK(Im.contains(x) == oracle_contains(I, x * m));
    CHECK(colon_by_monomial(Im, n) == colon_by_monomial(I, m * n));
    CHECK(MonomialIdeal(I.generators()) == I);
    CHECK(minimalize(I.generators()) == I.generators());
    if (I.contains(m)) CHECK(Im.is_unit());
    const MonomialIdeal J = add_monomial(I, m);
    for (const Monomial& x : small) CHECK(J.contains(x) == (oracle_contains(I, x) || m.divides(x)));
  }
}

TEST_CASE("lcm lattice") {
  CHECK(lcm_lattice(edge_ideal(oracle::cycle(4))).size() == 9);
  CHECK_THROWS_AS(lcm_lattice(MonomialIdeal()), PreconditionError);
  CHECK_THROWS_AS(lcm_lattice(power(edge_ideal(oracle::cycle(6)), 2), 10), CapError);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 4, 1 + static_cast<int>(rng() % 7), 2);
    const auto& g = I.generators();
    std::set<Monomial> expected;
    for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
      Monomial l;
      for (std::size_t k = 0; k < g.size(); ++k)
        if ((mask >> k) & 1u) l = lcm(l, g[k]);
      expected.insert(l);
    }
    const auto lattice = lcm_lattice(I);
    CHECK(std::set<Monomial>(lattice.begin(), lattice.end()) == expected);
    CHECK(lattice.size() == expected.size());
  }
}

TEST_CASE("s-fold products") {
  const Graph c6 = oracle::cycle(6);
  CHECK(all_products(c6, 1).size() == 6);
  CHECK(all_products(c6, 2).size() == 21);
  CHECK(all_products(c6, 3).size() == 56);
  const SFoldProduct p = make_product(c6, {Edge(1, 2), Edge(0, 1), Edge(1, 2)});
  CHECK(p.factors == std::vector<Edge>{{1, 2}, {0, 1}, {1, 2}});
  CHECK(p.monomial() == mono({1, 3, 2}));
  CHECK(p.multiplicity(Edge(1, 2)) == 2);
  CHECK(p.distinct().size() == 2);
  CHECK(make_product(c6, {Edge(1, 2)}).is_submultiset_of(p));
  CHECK_FALSE(make_product(c6, {Edge(2, 3)}).is_submultiset_of(p));
  CHECK_THROWS_AS(make_product(c6, {Edge(0, 2)}), PreconditionError);
  const auto a = sample_products(c6, 3, 50, 42);
  const auto b = sample_products(c6, 3, 50, 42);
  REQUIRE(a.size() == 50);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].factors == b[k].factors);
    CHECK(std::is_sorted(a[k].factors.begin(), a[k].factors.end()));
  }
}
