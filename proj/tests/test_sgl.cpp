#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "domdyn/dbs.hpp"
#include "domdyn/generator.hpp"
#include "domdyn/rng.hpp"
#include "domdyn/sgl.hpp"
#include "domdyn/static_algos.hpp"

using namespace domdyn;

static FlowGraph diamond() {
  FlowGraph g(5, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  return g;
}

static std::vector<VertexId> truth(const FlowGraph& g) {
  return oracle_dominators(g, g.start()).parents();
}

TEST_CASE("every graph edge is classified as exactly one d- or j-edge") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng.below(14));
    FlowGraph g(n, 1);
    int m0 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(3 * n)));
    for (int i = 0; i < m0; ++i)
      g.add_edge(1 + static_cast<VertexId>(rng.below(n)), 1 + static_cast<VertexId>(rng.below(n)));
    SglEngine eng(g);

    int j_edges = 0;
    long long edges_from_reachable = 0;
    for (VertexId w = 1; w <= n; ++w) {
      if (!eng.tree().reachable(w)) continue;
      edges_from_reachable += static_cast<long long>(g.out(w).size());
      eng.for_each_j_edge(w, [&](VertexId, VertexId) { ++j_edges; });
    }
    CHECK(eng.d_edge_count() + j_edges == edges_from_reachable);

    // j-edges never coincide with the tree edge of their target
    for (VertexId w = 1; w <= n; ++w) {
      if (!eng.tree().reachable(w)) continue;
      int tree_hits = 0;
      eng.for_each_j_edge(w, [&](VertexId from, VertexId u) {
        if (eng.tree().reachable(u) && eng.tree().parent(u) == from && g.count_edge(from, u) == 1)
          ++tree_hits;
      });
      CHECK(tree_hits == 0);
    }
  }
}

TEST_CASE("insertion lifts exactly the iterated-frontier vertices") {
  SglEngine eng(diamond());
  std::vector<VertexId> before = eng.tree().parents();
  eng.insert(2, 5);
  std::vector<VertexId> after = truth(eng.graph());
  CHECK(eng.tree().parents() == after);
  std::set<VertexId> expect;
  for (VertexId v = 1; v <= 5; ++v)
    if (before[v] != after[v]) expect.insert(v);
  std::set<VertexId> got(eng.last_affected().begin(), eng.last_affected().end());
  CHECK(got == expect);
}

TEST_CASE("insertion affected sets agree with the depth-based search") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng.below(16));
    FlowGraph g(n, 1);
    int m0 = n + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    for (int i = 0; i < m0; ++i)
      g.add_edge(1 + static_cast<VertexId>(rng.below(n)), 1 + static_cast<VertexId>(rng.below(n)));
    SglEngine sgl(g);
    DbsEngine dbs(g);
    REQUIRE(sgl.tree().parents() == dbs.tree().parents());
    for (int step = 0; step < 20; ++step) {
      VertexId u = 1 + static_cast<VertexId>(rng.below(n));
      VertexId v = 1 + static_cast<VertexId>(rng.below(n));
      bool y_was_reachable = sgl.tree().reachable(v);
      sgl.insert(u, v);
      dbs.insert(u, v);
      REQUIRE(sgl.tree().parents() == dbs.tree().parents());
      if (y_was_reachable) {
        // both searches must find the same affected set, not just the
        // same final tree
        std::set<VertexId> a(sgl.last_affected().begin(), sgl.last_affected().end());
        std::set<VertexId> b(dbs.last_insert_trace().affected.begin(),
                             dbs.last_insert_trace().affected.end());
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("insertion reaching a new region splices it and replays its exits") {
  // 1 -> 2; island 3 -> 4 -> 5 with an exit 5 -> 2. Inserting (2,3) makes
  // the island reachable and the crossing edge (5,2) must lift idom(2).
  FlowGraph g(5, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 2);
  SglEngine eng(g);
  CHECK(!eng.tree().reachable(3));
  eng.insert(2, 3);
  CHECK(eng.tree().parent(3) == 2);
  CHECK(eng.tree().parent(4) == 3);
  CHECK(eng.tree().parent(5) == 4);
  CHECK(eng.tree().parents() == truth(eng.graph()));
}

TEST_CASE("deletion keeping y reachable refines the possibly-affected set") {
  FlowGraph g = diamond();
  g.add_edge(2, 5);
  SglEngine eng(g);
  REQUIRE(eng.tree().parent(5) == 1);
  eng.remove(2, 5);
  CHECK(eng.tree().parent(5) == 4);
  CHECK(eng.tree().parents() == truth(eng.graph()));
}

TEST_CASE("deletion cascade: an unreachable subtree is cut and its exits replayed") {
  // 1 -> 2 -> 3 -> 4 with 3 -> 5 and 1 -> 5: cutting (2,3) kills {3,4} and
  // must replay the lost crossing edge (3,5) as a deletion for 5.
  FlowGraph g(5, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(1, 5);
  SglEngine eng(g);
  REQUIRE(eng.tree().parent(5) == 1);
  eng.remove(2, 3);
  CHECK(!eng.tree().reachable(3));
  CHECK(!eng.tree().reachable(4));
  CHECK(eng.tree().parent(5) == 1);
  CHECK(eng.tree().parents() == truth(eng.graph()));

  // Chained unreachability: the replayed deletion itself kills a vertex.
  FlowGraph h(5, 1);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_edge(3, 4);
  h.add_edge(4, 5);
  SglEngine eng2(h);
  eng2.remove(2, 3);
  for (VertexId v : {3, 4, 5}) CHECK(!eng2.tree().reachable(v));
  CHECK(eng2.tree().parents() == truth(eng2.graph()));
}

TEST_CASE("differential run against the oracle on random update streams") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng.below(18));
    FlowGraph g(n, 1);
    int m0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    for (int i = 0; i < m0; ++i)
      g.add_edge(1 + static_cast<VertexId>(rng.below(n)), 1 + static_cast<VertexId>(rng.below(n)));

    SglEngine eng(g);
    REQUIRE(eng.tree().parents() == truth(eng.graph()));
    for (int step = 0; step < 40; ++step) {
      VertexId u = 1 + static_cast<VertexId>(rng.below(n));
      VertexId v = 1 + static_cast<VertexId>(rng.below(n));
      bool del = rng.below(2) == 0 && eng.graph().has_edge(u, v);
      if (del)
        eng.remove(u, v);
      else
        eng.insert(u, v);
      CAPTURE(trial);
      CAPTURE(step);
      REQUIRE(eng.tree().parents() == truth(eng.graph()));
    }
  }
}
