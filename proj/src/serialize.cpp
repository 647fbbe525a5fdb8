#include "edgereg/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace edgereg {

Json monomial_json(const Monomial& m, int vars) {
  Json a = Json::array();
  for (int v = 0; v < vars; ++v) a.push_back(static_cast<int>(m[v]));
  return a;
}

Json ideal_json(const MonomialIdeal& ideal, int vars) {
  Json a = Json::array();
  for (const Monomial& m : ideal.generators()) a.push_back(monomial_json(m, vars));
  return a;
}

Json betti_table_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [ij, beta] : t.entries) {
    if (beta == 0) continue;
    entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
  }
  return Json{{"convention", to_string(t.convention)}, {"field", to_string(t.field)}, {"entries", entries}};
}

namespace {

struct Extent {
  int max_i = 0;
  int min_j = 0;
  int max_j = 0;
  int min_shift = 0;
  int max_shift = 0;
};

Extent extent(const BettiTable& t) {
  Extent e;
  bool first = true;
  for (const auto& [ij, beta] : t.entries) {
    if (beta == 0) continue;
    const auto [i, j] = ij;
    if (first) {
      e = {i, j, j, j - i, j - i};
      first = false;
      continue;
    }
    e.max_i = std::max(e.max_i, i);
    e.min_j = std::min(e.min_j, j);
    e.max_j = std::max(e.max_j, j);
    e.min_shift = std::min(e.min_shift, j - i);
    e.max_shift = std::max(e.max_shift, j - i);
  }
  return e;
}

}  // namespace

std::string betti_table_csv(const BettiTable& t) {
  const Extent e = extent(t);
  std::ostringstream out;
  out << "i\\j";
  for (int j = e.min_j; j <= e.max_j; ++j) out << ',' << j;
  out << '\n';
  if (t.empty()) return out.str();
  for (int i = 0; i <= e.max_i; ++i) {
    out << i;
    for (int j = e.min_j; j <= e.max_j; ++j) out << ',' << t.at(i, j);
    out << '\n';
  }
  return out.str();
}

std::string betti_table_text(const BettiTable& t) {
  std::ostringstream out;
  if (t.empty()) return "(zero table)\n";
  const Extent e = extent(t);
  constexpr int kWidth = 6;
  auto cell = [&](const std::string& s) {
    out << std::string(kWidth - std::min<int>(kWidth - 1, static_cast<int>(s.size())), ' ') << s;
  };
  cell("");
  for (int i = 0; i <= e.max_i; ++i) cell(std::to_string(i));
  out << '\n';
  for (int d = e.min_shift; d <= e.max_shift; ++d) {
    cell(std::to_string(d) + ":");
    for (int i = 0; i <= e.max_i; ++i) {
      const std::uint64_t b = t.at(i, i + d);
      cell(b == 0 ? "-" : std::to_string(b));
    }
    out << '\n';
  }
  return out.str();
}

Json witness_json(const EvenConnectionWitness& w) {
  return Json{{"path", w.path}, {"factors", w.factor_assignment}};
}

Json discrepancy_json(const ColonGeneratorCheck& c, int vars) {
  Json left = Json::array();
  Json right = Json::array();
  for (const Monomial& m : c.only_left) left.push_back(monomial_json(m, vars));
  for (const Monomial& m : c.only_right) right.push_back(monomial_json(m, vars));
  return Json{{"equal", c.equal}, {"only_left", left}, {"only_right", right}};
}

Json cycle_json(const CycleWitness& c) { return Json{{"vertices", c.vertices}, {"induced", c.induced}}; }

Json reg_class_json(const RegClass& c) {
  Json j{{"class", to_string(c.tag)},
         {"bipartition", Json{{"left", set_members(c.bipartition.left)}, {"right", set_members(c.bipartition.right)}}}};
  j["complement_cycle"] = c.complement_cycle ? cycle_json(*c.complement_cycle) : Json(nullptr);
  j["bipartite_complement_cycle"] =
      c.bipartite_complement_cycle ? cycle_json(*c.bipartite_complement_cycle) : Json(nullptr);
  return j;
}

Json report_json(const VerificationReport& r, bool with_timings) {
  Json j{{"index", r.index},
         {"graph6", r.graph6},
         {"n", r.vertices},
         {"edges", r.edges},
         {"class", to_string(r.reg_class)},
         {"hochster_reg", r.hochster_regularity},
         {"reg", r.regularities},
         {"expected", r.expected},
         {"seed", r.seed}};
  Json steps = Json::array();
  for (const PowerStepCheck& c : r.power_step) {
    steps.push_back(Json{{"s", c.s},
                         {"reg_next", c.reg_next},
                         {"reg_current", c.reg_current},
                         {"max_colon_reg", c.max_colon_reg},
                         {"bound", c.bound},
                         {"holds", c.holds()}});
  }
  j["power_step"] = steps;
  Json colons = Json::array();
  for (const Reg3ColonCheck& c : r.reg3_colons) {
    colons.push_back(Json{{"s", c.s},
                          {"products", c.products},
                          {"max_colon_reg", c.max_colon_reg},
                          {"attains_three", c.attains_three},
                          {"linear_colons_consistent", c.linear_colons_consistent},
                          {"holds", c.holds()}});
  }
  j["reg3_colons"] = colons;
  // Flags graphs where no colon reaches regularity 3.
  j["reg3_colons_flagged"] =
      !r.reg3_colons.empty() &&
      std::none_of(r.reg3_colons.begin(), r.reg3_colons.end(), [](const Reg3ColonCheck& c) { return c.attains_three; });
  Json splits = Json::array();
  for (const ColonSplitCheck& c : r.colon_split) {
    splits.push_back(Json{{"reg_ideal", c.reg_ideal},
                          {"reg_colon", c.reg_colon},
                          {"reg_sum", c.reg_sum},
                          {"degree", c.degree},
                          {"holds", c.holds()}});
  }
  j["colon_split"] = splits;
  if (r.linear_presentation) {
    j["linear_presentation"] =
        Json{{"linear", r.linear_presentation->first}, {"no_complement_c4", r.linear_presentation->second}};
  }
  Json claims = Json::object();
  for (const auto& [k, v] : r.claims) claims[k] = v;
  j["claims"] = claims;
  j["pass"] = r.passed();
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j;
}

std::string summary_csv_header() { return "graph6,n,class,reg,pass"; }

std::string summary_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  // graph6 may contain commas, so it is quoted.
  out << '"';
  for (char c : r.graph6) {
    if (c == '"') out << '"';
    out << c;
  }
  out << "\"," << r.vertices << ',' << to_string(r.reg_class) << ',';
  for (std::size_t k = 0; k < r.regularities.size(); ++k) out << (k ? ";" : "") << r.regularities[k];
  out << ',' << (r.passed() ? "true" : "false");
  return out.str();
}

}  // namespace edgereg
