#include <doctest.h>

#include <random>

#include "sel/graph6.hpp"
#include "test_helpers.hpp"

using namespace sel;
using namespace sel::testing;

TEST_CASE("known strings") {
  // "D?{" is the 5-vertex star centered at the last vertex.
  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edge_count() == 4);
  CHECK(star.degree(4) == 4);
  CHECK(write_graph6(star) == "D?{");

  CHECK(write_graph6(Graph::complete(3)) == "Bw");
  Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
}

TEST_CASE("round trip on a random corpus") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 20);
    Graph g = random_graph(rng, n, 0.3);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
  // Extended header for n > 62.
  Graph big = random_graph(rng, 70, 0.05);
  std::string text = write_graph6(big);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == big);
  CHECK(parse_graph6(write_graph6(Graph(63))).order() == 63);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), Graph6ParseError);   // truncated
  CHECK_THROWS_AS(parse_graph6("D?{?"), Graph6ParseError); // trailing bytes
  CHECK_THROWS_AS(parse_graph6("B\x07"), Graph6ParseError); // bad byte

  try {
    parse_graph6("D?");
    CHECK(false);
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 2);
  }

  // Padding bits must be zero: K3 body with a stray low bit.
  std::string bad = "B";
  bad.push_back(static_cast<char>(63 + 0b111001));
  CHECK_THROWS_AS(parse_graph6(bad), Graph6ParseError);
}

TEST_CASE("trailing newline tolerated") {
  CHECK(parse_graph6("Bw\n").edge_count() == 3);
}
