#include "edgereg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "edgereg/characterizations.hpp"
#include "edgereg/error.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/serialize.hpp"

namespace edgereg::cli {

std::optional<std::string> system_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

namespace {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw PreconditionError("unknown format '" + s + "' (expected json, csv or text)");
}

struct Settings {
  Field field = Field::F2;
  int s_max = 2;
  int n_max = 6;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  Format format = Format::Json;

  EngineOptions engine() const {
    EngineOptions o;
    o.field = field;
    o.lattice_cap = lattice_cap;
    o.workers = workers;
    return o;
  }
};

long long parse_positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v <= 0) throw PreconditionError(key + " must be a positive integer, got '" + value + "'");
  return v;
}

void apply(Settings& s, const std::string& key, const std::string& value) {
  if (key == "field") {
    s.field = parse_field(value);
  } else if (key == "s_max") {
    s.s_max = static_cast<int>(parse_positive(key, value));
  } else if (key == "n_max") {
    s.n_max = static_cast<int>(parse_positive(key, value));
  } else if (key == "lattice_cap") {
    s.lattice_cap = static_cast<std::size_t>(parse_positive(key, value));
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      s.seed = std::stoull(value, &used, 0);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw PreconditionError("seed must be an unsigned integer, got '" + value + "'");
    }
  } else if (key == "workers") {
    s.workers = static_cast<unsigned>(parse_positive(key, value));
  } else if (key == "format") {
    s.format = parse_format(value);
  } else {
    throw PreconditionError("unknown configuration key '" + key + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot read config file '" + path + "'");
  std::string line;
  std::size_t number = 0;
  while (std::getline(f, line)) {
    ++number;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config: expected key = value", number, "line");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    apply(s, key, value);
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& input, bool graph6, std::istream& in) {
  std::string text;
  if (input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) throw PreconditionError("cannot read input '" + input + "'");
    text = read_all(f);
  }
  const bool g6 = graph6 || (input.size() > 3 && input.ends_with(".g6"));
  if (!g6) return parse_edge_list(text);
  const std::vector<Graph> graphs = decode_graph6_lines(text);
  if (graphs.size() != 1) throw ParseError("expected exactly one graph6 record", 0);
  return graphs.front();
}

std::string vertex_name(const Graph& g, int v) { return g.label(v); }

std::string edge_name(const Graph& g, const Edge& e) { return vertex_name(g, e.u) + "-" + vertex_name(g, e.v); }

std::vector<std::string> names(const Graph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(vertex_name(g, v));
  return out;
}

std::vector<std::string> split_tokens(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  for (const std::string& t : out) {
    if (t.empty()) throw PreconditionError("empty edge token in '" + list + "'");
  }
  return out;
}

int cmd_reg(const Settings& s, const Graph& g, int power_s, std::ostream& out) {
  const MonomialIdeal ideal = power(edge_ideal(g), power_s);
  const BettiTable table = koszul_betti(ideal, s.engine());
  const int reg = table.regularity();
  switch (s.format) {
    case Format::Json:
      out << Json{{"power", power_s}, {"regularity", reg}, {"betti", betti_table_json(table)}}.dump() << '\n';
      break;
    case Format::Csv:
      out << "regularity," << reg << '\n' << betti_table_csv(table);
      break;
    case Format::Text:
      out << "reg(I^" << power_s << ") = " << reg << '\n' << betti_table_text(table);
      break;
  }
  return kPass;
}

std::string cycle_text(const Graph& g, const CycleWitness& c) {
  std::string s;
  for (int v : c.vertices) s += (s.empty() ? "" : " ") + vertex_name(g, v);
  return s;
}

int cmd_classify(const Settings& s, const Graph& g, std::ostream& out) {
  const RegClass c = classify_bipartite(g);
  switch (s.format) {
    case Format::Json: {
      Json j = reg_class_json(c);
      j["labels"] = g.labels();
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "class,complement_cycle,bipartite_complement_cycle\n"
          << to_string(c.tag) << ',' << (c.complement_cycle ? cycle_text(g, *c.complement_cycle) : "") << ','
          << (c.bipartite_complement_cycle ? cycle_text(g, *c.bipartite_complement_cycle) : "") << '\n';
      break;
    case Format::Text:
      out << to_string(c.tag) << '\n';
      if (c.complement_cycle) out << "induced cycle in complement: " << cycle_text(g, *c.complement_cycle) << '\n';
      if (c.bipartite_complement_cycle) {
        out << "induced cycle in bipartite complement: " << cycle_text(g, *c.bipartite_complement_cycle) << '\n';
      }
      break;
  }
  return kPass;
}

int cmd_colon(const Settings& s, const Graph& g, const std::string& edge_list, bool witnesses, std::ostream& out) {
  std::vector<Edge> factors;
  for (const std::string& t : split_tokens(edge_list)) factors.push_back(parse_edge_token(g, t));
  const SFoldProduct p = make_product(g, factors);
  const ColonGraphResult r = colon_graph(g, p);
  const std::vector<int> squares = set_members(r.extra_squares);
  switch (s.format) {
    case Format::Json: {
      Json j{{"labels", g.labels()}};
      Json prod = Json::array();
      for (const Edge& e : p.factors) prod.push_back({e.u, e.v});
      j["product"] = prod;
      Json edges = Json::array();
      for (const Edge& e : r.new_edges) edges.push_back({e.u, e.v});
      j["new_edges"] = edges;
      j["squares"] = squares;
      j["generators"] = ideal_json(r.ideal(), g.vertex_count());
      if (witnesses) {
        Json ws = Json::array();
        for (const ColonPair& cp : r.new_pairs) {
          Json w = witness_json(cp.witness);
          w["pair"] = {cp.u, cp.v};
          ws.push_back(w);
        }
        j["witnesses"] = ws;
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "kind,u,v\n";
      for (const Edge& e : r.new_edges) out << "edge," << vertex_name(g, e.u) << ',' << vertex_name(g, e.v) << '\n';
      for (int v : squares) out << "square," << vertex_name(g, v) << ',' << vertex_name(g, v) << '\n';
      break;
    case Format::Text: {
      out << "colon ideal: " << to_string(r.ideal(), g.labels()) << '\n';
      out << "new edges:";
      for (const Edge& e : r.new_edges) out << ' ' << edge_name(g, e);
      out << "\nsquares:";
      for (int v : squares) out << ' ' << vertex_name(g, v) << "^2";
      out << '\n';
      if (witnesses) {
        for (const ColonPair& cp : r.new_pairs) {
          out << "witness " << vertex_name(g, cp.u) << '-' << vertex_name(g, cp.v) << ':';
          for (const std::string& n : names(g, cp.witness.path)) out << ' ' << n;
          out << " (factors";
          for (int f : cp.witness.factor_assignment) out << ' ' << f;
          out << ")\n";
        }
      }
      break;
    }
  }
  return kPass;
}

int cmd_sweep(const Settings& s, bool allow_n8, const std::string& summary_path, bool timings, std::ostream& out,
              std::ostream& err) {
  SweepOptions so;
  so.n_max = s.n_max;
  so.s_max = s.s_max;
  so.allow_n8 = allow_n8;
  so.seed = s.seed;
  std::map<std::string, std::size_t> by_class;
  std::size_t failures = 0;
  std::ostringstream summary;
  summary << summary_csv_header() << '\n';
  if (s.format == Format::Csv) out << summary_csv_header() << '\n';
  auto sink = [&](const VerificationReport& r) {
    ++by_class[to_string(r.reg_class)];
    failures += r.passed() ? 0 : 1;
    summary << summary_csv_row(r) << '\n';
    switch (s.format) {
      case Format::Json:
        out << report_json(r, timings).dump() << '\n';
        break;
      case Format::Csv:
        out << summary_csv_row(r) << '\n';
        break;
      case Format::Text: {
        out << r.graph6 << " n=" << r.vertices << ' ' << to_string(r.reg_class) << " reg=";
        for (std::size_t k = 0; k < r.regularities.size(); ++k) out << (k ? "," : "") << r.regularities[k];
        out << (r.passed() ? " pass" : " FAIL") << '\n';
        break;
      }
    }
    out.flush();
  };
  auto write_summary = [&] {
    if (summary_path.empty()) return;
    std::ofstream f(summary_path, std::ios::binary);
    if (!f) throw PreconditionError("cannot write summary file '" + summary_path + "'");
    f << summary.str();
  };
  try {
    sweep(so, s.engine(), sink);
  } catch (const SweepAbort& e) {
    write_summary();
    err << "sweep aborted: " << e.what() << '\n' << e.dump();
    return kVerificationFailure;
  }
  write_summary();
  std::size_t total = 0;
  err << "summary:";
  for (const auto& [cls, count] : by_class) {
    err << ' ' << cls << '=' << count;
    total += count;
  }
  err << " graphs=" << total << " failures=" << failures << '\n';
  return failures == 0 ? kPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  CLI::App app{"Regularity of edge ideals and their powers", "edgereg"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string field_flag;
  std::string format_flag;
  long long workers_flag = 0;
  long long lattice_cap_flag = 0;
  std::uint64_t seed_flag = 0;
  bool graph6_flag = false;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--field", field_flag, "Coefficient field: f2 or q");
  app.add_option("--format", format_flag, "Output format: json, csv or text");
  app.add_option("--workers", workers_flag, "Worker threads");
  app.add_option("--lattice-cap", lattice_cap_flag, "Maximum lcm-lattice size");
  app.add_option("--seed", seed_flag, "Sampling seed");
  app.add_flag("--g6", graph6_flag, "Read the input as graph6");

  std::string input;
  int power_s = 1;
  auto* reg = app.add_subcommand("reg", "Regularity and Betti table of I(G)^s");
  reg->add_option("input", input, "Edge-list file, .g6 file or - for stdin")->required();
  reg->add_option("--power", power_s, "Power s")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Regularity class of a connected bipartite graph");
  classify->add_option("input", input, "Edge-list file, .g6 file or - for stdin")->required();

  std::string edge_list;
  bool witnesses = false;
  auto* colon = app.add_subcommand("colon", "Colon graph of (I^{s+1} : e_1...e_s)");
  colon->add_option("input", input, "Edge-list file, .g6 file or - for stdin")->required();
  colon->add_option("--edges", edge_list, "Comma-separated product edges, e.g. bc or x1-y1,x1-y1")->required();
  colon->add_flag("--witnesses", witnesses, "Print one witness per new pair");

  long long n_flag = 0;
  long long smax_flag = 0;
  bool allow_n8 = false;
  std::string summary_path;
  bool timings = false;
  auto* sw = app.add_subcommand("sweep", "Verify every connected bipartite graph up to n vertices");
  sw->add_option("--n", n_flag, "Largest vertex count");
  sw->add_option("--smax", smax_flag, "Largest power");
  sw->add_flag("--allow-n8", allow_n8, "Permit n = 8");
  sw->add_option("--summary", summary_path, "Write the summary CSV to this file");
  sw->add_flag("--timings", timings, "Include timings in reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    Settings s;
    if (!config_path.empty()) apply_config_file(s, config_path);
    for (const auto& [var, key] : {std::pair{"EDGEREG_WORKERS", "workers"}, std::pair{"EDGEREG_FIELD", "field"}}) {
      if (auto v = env(var)) apply(s, key, *v);
    }
    if (app.count("--field")) apply(s, "field", field_flag);
    if (app.count("--format")) apply(s, "format", format_flag);
    if (app.count("--workers")) apply(s, "workers", std::to_string(workers_flag));
    if (app.count("--lattice-cap")) apply(s, "lattice_cap", std::to_string(lattice_cap_flag));
    if (app.count("--seed")) s.seed = seed_flag;
    if (sw->count("--n")) apply(s, "n_max", std::to_string(n_flag));
    if (sw->count("--smax")) apply(s, "s_max", std::to_string(smax_flag));

    if (*sw) return cmd_sweep(s, allow_n8, summary_path, timings, out, err);
    const Graph g = read_graph(input, graph6_flag, in);
    if (*reg) return cmd_reg(s, g, power_s, out);
    if (*classify) return cmd_classify(s, g, out);
    return cmd_colon(s, g, edge_list, witnesses, out);
  } catch (const CapError& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace edgereg::cli
