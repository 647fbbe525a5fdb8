#include "edgereg/graph_io.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "edgereg/error.hpp"

namespace edgereg {

Graph parse_edge_list(std::string_view text) {
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto intern = [&](const std::string& token, std::size_t line) {
    auto [it, inserted] = index.emplace(token, static_cast<int>(labels.size()));
    if (inserted) {
      if (static_cast<int>(labels.size()) >= kMaxVertices) {
        throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices", line, "line");
      }
      labels.push_back(token);
    }
    return it->second;
  };
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex tokens, got " + std::to_string(tokens.size()), line_no,
                       "line");
    }
    if (tokens[0] == tokens[1]) throw ParseError("self-loop on '" + tokens[0] + "'", line_no, "line");
    const int u = intern(tokens[0], line_no);
    const int v = intern(tokens[1], line_no);
    edges.emplace_back(u, v);
    if (end == text.size()) break;
  }
  if (edges.empty()) throw ParseError("no edges in input", line_no, "line");
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 record", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", i);
  }
  std::size_t offset = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    offset = 1;
  } else if (text.size() >= 4 && text[1] != '~') {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    offset = 4;
  } else {
    throw ParseError("graph6 header too large or truncated", 0);
  }
  if (n > static_cast<std::size_t>(kMaxVertices)) {
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices),
                     0);
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != offset + bytes) {
    throw ParseError("graph6 body length " + std::to_string(text.size() - offset) + ", expected " +
                         std::to_string(bytes),
                     std::min(text.size(), offset + bytes));
  }
  auto bit = [&](std::size_t k) {
    const auto word = static_cast<unsigned>(text[offset + k / 6] - 63);
    return ((word >> (5 - k % 6)) & 1u) != 0;
  };
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    if (bit(k)) throw ParseError("nonzero graph6 padding bit", offset + k / 6);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(63 + n));
  unsigned word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

std::vector<Graph> decode_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(decode_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos + e.position());
      }
    }
    pos = end + 1;
  }
  if (out.empty()) throw ParseError("no graph6 records in input", 0);
  return out;
}

Edge parse_edge_token(const Graph& g, std::string_view token) {
  auto find_label = [&](std::string_view name) -> std::optional<int> {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.label(v) == name) return v;
    }
    return std::nullopt;
  };
  auto make = [&](int u, int v) {
    if (u == v || !g.has_edge(u, v)) {
      throw PreconditionError("'" + std::string(token) + "' is not an edge of the graph");
    }
    return Edge(u, v);
  };
  for (char sep : {'-', ' '}) {
    if (auto cut = token.find(sep); cut != std::string_view::npos) {
      auto u = find_label(token.substr(0, cut));
      auto v = find_label(token.substr(cut + 1));
      if (!u || !v) throw PreconditionError("unknown vertex in edge token '" + std::string(token) + "'");
      return make(*u, *v);
    }
  }
  std::optional<Edge> match;
  for (std::size_t cut = 1; cut < token.size(); ++cut) {
    auto u = find_label(token.substr(0, cut));
    auto v = find_label(token.substr(cut));
    if (!u || !v) continue;
    if (match) throw PreconditionError("ambiguous edge token '" + std::string(token) + "'");
    match = Edge(*u, *v);
    if (*u == *v) throw PreconditionError("'" + std::string(token) + "' is not an edge of the graph");
  }
  if (!match) throw PreconditionError("unknown edge token '" + std::string(token) + "'");
  return make(match->u, match->v);
}

}  // namespace edgereg
