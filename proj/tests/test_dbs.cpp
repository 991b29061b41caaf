#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "domdyn/dbs.hpp"
#include "domdyn/generator.hpp"
#include "domdyn/rng.hpp"
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

TEST_CASE("insertion reattaches exactly the vertices whose idom moves") {
  // Adding (2,5) gives 5 a second entry that avoids 4; its idom climbs to
  // the common ancestor 1, nothing else moves.
  DbsEngine eng(diamond());
  std::vector<VertexId> before = eng.tree().parents();
  eng.insert(2, 5);
  std::vector<VertexId> after = truth(eng.graph());
  CHECK(eng.tree().parents() == after);

  std::set<VertexId> expect_affected;
  for (VertexId v = 1; v <= 5; ++v)
    if (before[v] != after[v]) expect_affected.insert(v);
  const DbsInsertTrace& tr = eng.last_insert_trace();
  std::set<VertexId> got(tr.affected.begin(), tr.affected.end());
  CHECK(got == expect_affected);
  CHECK(tr.nca == 1);
  CHECK(eng.state_clean());
}

TEST_CASE("path-with-back-edges family: one insertion moves most of the tree") {
  // Path 1..8 with back edges (j+1, j) down to 3. Adding (1,7) makes 3..7
  // reachable straight from the root through the back edges.
  GraphInstance inst = gen_family(FamilyKind::Fig1, 8);
  DbsEngine eng(inst.build_all());
  std::vector<VertexId> before = eng.tree().parents();
  eng.insert(1, 7);
  std::vector<VertexId> after = truth(eng.graph());
  CHECK(eng.tree().parents() == after);

  const DbsInsertTrace& tr = eng.last_insert_trace();
  std::set<VertexId> got(tr.affected.begin(), tr.affected.end());
  std::set<VertexId> expect;
  for (VertexId v = 1; v <= 8; ++v)
    if (before[v] != after[v]) expect.insert(v);
  CHECK(got == expect);
  CHECK(expect.size() >= 5);  // a constant-size update rewires most parents
}

TEST_CASE("search invariants: levels only descend, affected hang below nca+1") {
  SplitMix64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng.below(16));
    FlowGraph g(n, 1);
    int m0 = n + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    for (int i = 0; i < m0; ++i)
      g.add_edge(1 + static_cast<VertexId>(rng.below(n)), 1 + static_cast<VertexId>(rng.below(n)));
    DbsEngine eng(g);
    for (int step = 0; step < 15; ++step) {
      VertexId u = 1 + static_cast<VertexId>(rng.below(n));
      VertexId v = 1 + static_cast<VertexId>(rng.below(n));
      std::vector<VertexId> before = eng.tree().parents();
      std::vector<int> before_depth(n + 1, -1);
      for (VertexId w = 1; w <= n; ++w)
        if (eng.tree().reachable(w)) before_depth[w] = eng.tree().depth(w);
      eng.insert(u, v);
      const DbsInsertTrace& tr = eng.last_insert_trace();
      // cursor never climbs back up
      CHECK(std::is_sorted(tr.levels.rbegin(), tr.levels.rend()));
      if (tr.nca != kNoVertex) {
        for (VertexId w : tr.affected) {
          CHECK(before_depth[w] > tr.nca_depth + 1);   // strictly below z+1
          CHECK(eng.tree().parent(w) == tr.nca);       // all land on z
          CHECK(before[w] != tr.nca);                  // and actually moved
        }
        // every affected vertex was also scanned, never the other way below z
        for (auto& [w, d] : tr.scanned) CHECK(d > tr.nca_depth);
      }
      CHECK(eng.state_clean());
      CHECK(eng.tree().parents() == truth(eng.graph()));
    }
  }
}

TEST_CASE("deletion keeping y reachable repairs under the old idom") {
  FlowGraph g = diamond();
  g.add_edge(2, 5);  // now in(5) = {4,2}
  DbsEngine eng(g);
  REQUIRE(eng.tree().parent(5) == 1);
  eng.remove(2, 5);
  CHECK(eng.tree().parent(5) == 4);
  CHECK(eng.tree().parents() == truth(eng.graph()));
}

TEST_CASE("the t/g test dismisses deletions that cannot move the tree") {
  FlowGraph g = diamond();
  g.add_edge(2, 5);
  g.add_edge(3, 5);
  DbsEngine eng(g);
  eng.remove(2, 5);
  CHECK(eng.counters().unchanged_shortcuts == 1);
  CHECK(eng.tree().parents() == truth(eng.graph()));
}

TEST_CASE("deletion making y unreachable detaches its subtree") {
  // 1 -> 2 -> 3 -> 4, no other entries: deleting (2,3) drops {3,4}.
  FlowGraph g(4, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  DbsEngine eng(g);
  eng.remove(2, 3);
  CHECK(!eng.tree().reachable(3));
  CHECK(!eng.tree().reachable(4));
  CHECK(eng.tree().parents() == truth(eng.graph()));
}

TEST_CASE("deletion making y unreachable can still free escaping vertices") {
  // 1 -> 2 -> 3 -> 4 and 1 -> 4: cutting (2,3) kills 3, but 4 survives via
  // the direct edge and its idom must climb from 3 to 1.
  FlowGraph g(4, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(1, 4);
  DbsEngine eng(g);
  REQUIRE(eng.tree().parent(4) == 1);  // already 1: two disjoint paths
  eng.remove(2, 3);
  CHECK(!eng.tree().reachable(3));
  CHECK(eng.tree().reachable(4));
  CHECK(eng.tree().parents() == truth(eng.graph()));

  // Same shape but with the shortcut entering deeper, so the old idom of the
  // survivor really was inside the dying subtree.
  FlowGraph h(5, 1);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_edge(3, 4);
  h.add_edge(4, 5);
  h.add_edge(2, 5);
  DbsEngine eng2(h);
  REQUIRE(eng2.tree().parent(5) == 2);
  eng2.remove(2, 3);
  CHECK(!eng2.tree().reachable(3));
  CHECK(!eng2.tree().reachable(4));
  CHECK(eng2.tree().parent(5) == 2);
  CHECK(eng2.tree().parents() == truth(eng2.graph()));
}

TEST_CASE("differential run against the oracle on random update streams") {
  SplitMix64 rng(424242);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng.below(18));
    FlowGraph g(n, 1);
    int m0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    for (int i = 0; i < m0; ++i)
      g.add_edge(1 + static_cast<VertexId>(rng.below(n)), 1 + static_cast<VertexId>(rng.below(n)));

    DbsEngine eng(g);
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
    CHECK(eng.state_clean());
  }
}
