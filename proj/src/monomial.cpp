#include "edgereg/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstring>
#include <random>
#include <unordered_set>

#include "edgereg/error.hpp"

namespace edgereg {

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw PreconditionError("monomial has more than " + std::to_string(kMaxVariables) + " variables");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) {
      throw PreconditionError("exponent out of range: " + std::to_string(exponents[i]));
    }
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
}

Monomial Monomial::variable(int i) {
  if (i < 0 || i >= kMaxVariables) throw PreconditionError("variable index out of range");
  Monomial m;
  m.exps_[static_cast<std::size_t>(i)] = 1;
  return m;
}

Monomial Monomial::from_edge(const Edge& e) { return variable(e.u) * variable(e.v); }

Monomial Monomial::squarefree(VertexSet s) {
  Monomial m;
  for (int v : set_members(s)) m.exps_.at(static_cast<std::size_t>(v)) = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (exps_[static_cast<std::size_t>(i)] != 0) s |= vertex_bit(i);
  }
  return s;
}

int Monomial::span() const { return 32 - std::countl_zero(support()); }

bool Monomial::divides(const Monomial& other) const {
  bool ok = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) ok &= exps_[i] <= other.exps_[i];
  return ok;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > kMaxExponent) throw CapError("exponent", kMaxExponent);
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  if (!d.divides(*this)) throw PreconditionError("divided_by: monomial does not divide");
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - d.exps_[i]);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t w[2];
  std::memcpy(w, m.exponents().data(), sizeof(w));
  std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull;
  h ^= (w[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
  return static_cast<std::size_t>(h ^ (h >> 31));
}

bool grlex_before(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& labels) {
  std::string out;
  for (int i = 0; i < kMaxVariables; ++i) {
    const int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += i < static_cast<int>(labels.size()) ? labels[static_cast<std::size_t>(i)]
                                              : "x" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& labels) {
  std::vector<int> exps(kMaxVariables, 0);
  if (text == "1") return Monomial{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('*', pos), text.size());
    std::string_view factor = text.substr(pos, end - pos);
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      const std::string digits(factor.substr(caret + 1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad exponent in monomial", pos + caret + 1);
      }
      power = std::stoi(digits);
      factor = factor.substr(0, caret);
    }
    int var = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == factor) var = static_cast<int>(i);
    }
    if (var < 0 && factor.size() > 1 && factor[0] == 'x') {
      const std::string digits(factor.substr(1));
      if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        var = std::stoi(digits);
      }
    }
    if (var < 0 || var >= kMaxVariables) throw ParseError("unknown variable in monomial", pos);
    exps[static_cast<std::size_t>(var)] += power;
    if (end == text.size()) break;
    pos = end + 1;
  }
  return Monomial(exps);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grlex_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty() || gens.front().degree() == gens.back().degree()) return gens;
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    const int d = g.degree();
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.degree() >= d) break;
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) : gens_(minimalize(std::move(generators))) {}

MonomialIdeal MonomialIdeal::unit() { return MonomialIdeal({Monomial{}}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

int MonomialIdeal::min_degree() const {
  if (gens_.empty()) throw PreconditionError("zero ideal has no generator degree");
  return gens_.front().degree();
}

int MonomialIdeal::max_degree() const {
  if (gens_.empty()) throw PreconditionError("zero ideal has no generator degree");
  return gens_.back().degree();
}

Monomial MonomialIdeal::top() const {
  Monomial t;
  for (const Monomial& g : gens_) t = lcm(t, g);
  return t;
}

std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(ideal.generators()[i], labels);
  }
  return out + "}";
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) gens.push_back(Monomial::from_edge(e));
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const Monomial& x : a.generators()) {
    for (const Monomial& y : b.generators()) seen.insert(x * y);
  }
  return MonomialIdeal(std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal power(const MonomialIdeal& ideal, int s) {
  if (s < 1) throw PreconditionError("power: exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (int k = 1; k < s; ++k) result = product(result, ideal);
  return result;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.divided_by(gcd(g, m)));
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal add_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens(ideal.generators());
  gens.push_back(m);
  return MonomialIdeal(std::move(gens));
}

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) throw PreconditionError("lcm_lattice: zero ideal");
  std::unordered_set<Monomial, MonomialHash> lattice;
  std::vector<Monomial> worklist;
  auto admit = [&](const Monomial& m) {
    if (lattice.insert(m).second) {
      if (lattice.size() > cap) throw CapError("lattice_cap", cap);
      worklist.push_back(m);
    }
  };
  for (const Monomial& g : ideal.generators()) admit(g);
  while (!worklist.empty()) {
    const Monomial m = worklist.back();
    worklist.pop_back();
    for (const Monomial& g : ideal.generators()) admit(lcm(m, g));
  }
  std::vector<Monomial> out(lattice.begin(), lattice.end());
  std::sort(out.begin(), out.end(), grlex_before);
  return out;
}

Monomial SFoldProduct::monomial() const {
  Monomial m;
  for (const Edge& e : factors) m = m * Monomial::from_edge(e);
  return m;
}

int SFoldProduct::multiplicity(const Edge& e) const {
  return static_cast<int>(std::count(factors.begin(), factors.end(), e));
}

std::vector<Edge> SFoldProduct::distinct() const {
  std::vector<Edge> d(factors);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

bool SFoldProduct::is_submultiset_of(const SFoldProduct& other) const {
  for (const Edge& e : distinct()) {
    if (multiplicity(e) > other.multiplicity(e)) return false;
  }
  return true;
}

SFoldProduct make_product(const Graph& g, std::vector<Edge> factors) {
  for (const Edge& e : factors) {
    if (!g.has_edge(e.u, e.v)) {
      throw PreconditionError("product factor " + g.label(e.u) + g.label(e.v) + " is not an edge");
    }
  }
  return SFoldProduct{std::move(factors)};
}

std::vector<SFoldProduct> all_products(const Graph& g, int s) {
  if (s < 1) throw PreconditionError("all_products: s must be at least 1");
  const std::vector<Edge> edges = g.edges();
  std::vector<SFoldProduct> out;
  if (edges.empty()) return out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  while (true) {
    SFoldProduct p;
    for (std::size_t i : idx) p.factors.push_back(edges[i]);
    out.push_back(std::move(p));
    // Next non-decreasing index tuple.
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == edges.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[k - 1];
  }
  return out;
}

std::vector<SFoldProduct> sample_products(const Graph& g, int s, std::size_t count,
                                          std::uint64_t seed) {
  if (s < 1) throw PreconditionError("sample_products: s must be at least 1");
  const std::vector<Edge> edges = g.edges();
  std::vector<SFoldProduct> out;
  if (edges.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (std::size_t n = 0; n < count; ++n) {
    SFoldProduct p;
    for (int i = 0; i < s; ++i) p.factors.push_back(edges[pick(rng)]);
    std::sort(p.factors.begin(), p.factors.end());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace edgereg
