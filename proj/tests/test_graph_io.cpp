#include <doctest.h>

#include <random>

#include "edgereg/error.hpp"
#include "edgereg/graph_io.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace edgereg;

TEST_CASE("edge list with labels and comments") {
  const Graph g = parse_edge_list("# path\nb c\n\na b  # trailing\nc d\nb c\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.labels() == std::vector<std::string>{"b", "c", "a", "d"});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("edge list errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("a b\nc\n") == 2);
  CHECK(line_of("a b\nc d e\n") == 2);
  CHECK(line_of("a b\n\nc c\n") == 3);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
  std::string big;
  for (int i = 0; i < 17; ++i) big += "v" + std::to_string(i) + " hub\n";
  CHECK(line_of(big) == 16);
}

TEST_CASE("graph6 known strings") {
  CHECK(decode_graph6("C~") == oracle::complete(4));
  const Graph one = decode_graph6("A_");
  CHECK(one.vertex_count() == 2);
  CHECK(one.edge_count() == 1);
  CHECK(decode_graph6("@").vertex_count() == 1);
  CHECK(encode_graph6(oracle::complete(4)) == "C~");
  CHECK(encode_graph6(oracle::cycle(5)) == "Dhc");
  CHECK(decode_graph6("Dhc") == oracle::cycle(5));
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      decode_graph6(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(offset_of("C~~") == 2);
  CHECK(offset_of("C") == 1);
  CHECK(offset_of("C\x01") == 1);
  CHECK(offset_of("Q") == 0);
  CHECK_THROWS_AS(decode_graph6(""), ParseError);
  CHECK_THROWS_AS(decode_graph6("B~"), ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 17);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) e.emplace_back(i, j);
    const Graph g(n, e);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 lines") {
  const auto gs = decode_graph6_lines("C~\n\nA_\n");
  REQUIRE(gs.size() == 2);
  CHECK(gs[1].edge_count() == 1);
}

TEST_CASE("edge tokens") {
  const Graph p4 = parse_edge_list("a b\nb c\nc d\n");
  CHECK(parse_edge_token(p4, "bc") == Edge(1, 2));
  CHECK(parse_edge_token(p4, "c-b") == Edge(1, 2));
  CHECK(parse_edge_token(p4, "a b") == Edge(0, 1));
  CHECK_THROWS_AS(parse_edge_token(p4, "ac"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_token(p4, "bz"), PreconditionError);
  const Graph c6 = parse_edge_list("x1 y1\ny1 x2\nx2 y2\ny2 x3\nx3 y3\ny3 x1\n");
  CHECK(parse_edge_token(c6, "x1y1") == Edge(0, 1));
  const Graph amb = parse_edge_list("a bc\nab c\n");
  CHECK_THROWS_AS(parse_edge_token(amb, "abc"), PreconditionError);
}
