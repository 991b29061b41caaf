#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domdyn/graph.hpp"
#include "domdyn/io.hpp"

#include <sstream>

using namespace domdyn;

TEST_CASE("edge insertion and removal maintain both adjacency directions") {
  FlowGraph g(5, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.out(1).size() == 2);
  CHECK(g.in(4).size() == 1);

  g.remove_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(!g.has_edge(1, 2));
  CHECK(g.in(2).empty());
}

TEST_CASE("parallel edges are kept as a multiset") {
  FlowGraph g(3, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 2);  // self loop
  CHECK(g.count_edge(1, 2) == 2);
  g.remove_edge(1, 2);
  CHECK(g.count_edge(1, 2) == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 2));
}

TEST_CASE("removing an absent edge throws") {
  FlowGraph g(3, 1);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(g.remove_edge(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 4), std::invalid_argument);
}

TEST_CASE("graph files round-trip and preserve edge order") {
  GraphInstance inst;
  inst.n = 4;
  inst.start = 2;
  inst.edges = {{2, 1}, {1, 3}, {3, 4}, {1, 3}};

  std::stringstream buf;
  write_graph(buf, inst);
  GraphInstance back = read_graph(buf);
  CHECK(back.n == 4);
  CHECK(back.start == 2);
  CHECK(back.edges == inst.edges);
}

TEST_CASE("graph parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::stringstream in(text);
    return read_graph(in);
  };
  CHECK_THROWS_AS(parse("q 3 1 1\n"), std::runtime_error);            // bad header tag
  CHECK_THROWS_AS(parse("p 3 2 1\na 1 2\n"), std::runtime_error);     // edge count short
  CHECK_THROWS_AS(parse("p 3 1 1\na 1 9\n"), std::runtime_error);     // vertex out of range
  CHECK_THROWS_AS(parse("p 3 1 5\na 1 2\n"), std::runtime_error);     // start out of range
}

TEST_CASE("sequence files round-trip") {
  UpdateSequence seq;
  seq.initial_edge_count = 7;
  seq.seed = 42;
  seq.i_frac = 30;
  seq.d_frac = 10;
  seq.ops = {
      {UpdateOp::Kind::Insert, 1, 2},
      {UpdateOp::Kind::Delete, 2, 3},
      {UpdateOp::Kind::Query, 1, 3},
  };

  std::stringstream buf;
  write_sequence(buf, seq);
  UpdateSequence back = read_sequence(buf);
  CHECK(back.initial_edge_count == 7);
  CHECK(back.seed == 42);
  CHECK(back.i_frac == 30);
  CHECK(back.d_frac == 10);
  REQUIRE(back.ops.size() == 3);
  CHECK(back.ops[0].kind == UpdateOp::Kind::Insert);
  CHECK(back.ops[1].kind == UpdateOp::Kind::Delete);
  CHECK(back.ops[2].kind == UpdateOp::Kind::Query);
  CHECK(back.ops[1].u == 2);
  CHECK(back.ops[1].v == 3);
}
