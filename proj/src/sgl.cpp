#include "domdyn/sgl.hpp"

#include <algorithm>

namespace domdyn {

SglEngine::SglEngine(FlowGraph g) : Engine(std::move(g)) {
  int n = graph_.vertex_count();
  affected_.assign(n + 1, 0);
  buckets_.assign(n + 1, {});
  tree_.assign(chk_iterative(graph_, graph_.start()));
}

int SglEngine::d_edge_count() const {
  int count = 0;
  for (VertexId v = 1; v <= graph_.vertex_count(); ++v) {
    if (v != tree_.root() && tree_.reachable(v) && graph_.has_edge(tree_.parent(v), v)) ++count;
  }
  return count;
}

void SglEngine::insert_reachable(VertexId x, VertexId y) {
  VertexId z = tree_.nca(x, y);
  if (z == y || z == tree_.parent(y)) return;  // (x,y) is just a new j-edge

  int z_depth = tree_.depth(z);
  std::vector<VertexId> found;
  affected_[y] = 1;
  buckets_[tree_.depth(y)].push_back(y);
  found.push_back(y);
  std::size_t pending = 1;
  int cursor = tree_.depth(y);
  while (pending > 0) {
    while (buckets_[cursor].empty()) --cursor;
    VertexId v = buckets_[cursor].back();
    buckets_[cursor].pop_back();
    --pending;
    int dv = tree_.depth(v);
    // Walk v's subtree along d-edges; every leaving j-edge is a candidate.
    for (VertexId w : tree_.subtree_vertices(v)) {
      for_each_j_edge(w, [&](VertexId, VertexId u) {
        if (u == w || !tree_.reachable(u)) return;
        int du = tree_.depth(u);
        if (dv >= du && du > z_depth + 1 && !affected_[u]) {
          affected_[u] = 1;
          buckets_[du].push_back(u);
          found.push_back(u);
          ++pending;
        }
      });
    }
  }

  for (VertexId v : found) {
    tree_.reattach(v, z);
    affected_[v] = 0;
  }
  tree_.rebuild_order();
  counters_.affected_total += static_cast<long long>(found.size());
  for (VertexId v : found) last_affected_.push_back(v);
}

void SglEngine::on_insert(VertexId x, VertexId y) {
  last_affected_.clear();
  if (x == y) return;
  if (!tree_.reachable(x)) return;
  if (tree_.reachable(y)) {
    insert_reachable(x, y);
    return;
  }

  // y was unreachable: build the dominator tree of the newly reachable part
  // rooted at y, hang it under x, then replay each escaping edge.
  int n = graph_.vertex_count();
  VertexMask in_r(n + 1, 0);
  std::vector<VertexId> r_verts = {y};
  std::vector<std::pair<VertexId, VertexId>> crossing;
  in_r[y] = 1;
  std::vector<VertexId> stack = {y};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : graph_.out(u)) {
      if (in_r[v]) continue;
      if (tree_.reachable(v)) {
        crossing.emplace_back(u, v);
        continue;
      }
      in_r[v] = 1;
      r_verts.push_back(v);
      stack.push_back(v);
    }
  }
  std::vector<VertexId> sub = chk_iterative(graph_, y, &in_r);
  for (VertexId v : r_verts) tree_.set_parent_raw(v, v == y ? x : sub[v]);
  tree_.refresh();
  for (auto& [u, v] : crossing) insert_reachable(u, v);
}

void SglEngine::delete_reachable(VertexId y) {
  VertexId dpy = tree_.parent(y);
  int limit = tree_.depth(dpy);
  int n = graph_.vertex_count();
  // Possibly affected: siblings of y reachable from y via vertices deeper
  // than d(y), plus y itself.
  std::vector<char> visited(n + 1, 0);
  std::vector<VertexId> possibly;
  std::vector<VertexId> stack = {y};
  visited[y] = 1;
  possibly.push_back(y);
  while (!stack.empty()) {
    VertexId w = stack.back();
    stack.pop_back();
    for (VertexId v : graph_.out(w)) {
      if (v == w || visited[v] || !tree_.reachable(v)) continue;
      if (tree_.depth(v) <= limit) continue;
      visited[v] = 1;
      stack.push_back(v);
      if (tree_.parent(v) == dpy) possibly.push_back(v);
    }
  }
  // Only the possibly-affected set is recomputed; each one's subtree rides
  // along with the reattachment.
  chk_refine(graph_, tree_, possibly);
}

void SglEngine::delete_unreachable_cascade(VertexId y) {
  std::vector<VertexId> lost = tree_.subtree_vertices(y);
  std::vector<char> in_lost(graph_.vertex_count() + 1, 0);
  for (VertexId v : lost) in_lost[v] = 1;
  std::vector<std::pair<VertexId, VertexId>> crossing;
  for (VertexId u : lost) {
    for (VertexId v : graph_.out(u)) {
      if (!in_lost[v]) crossing.emplace_back(u, v);
    }
  }
  tree_.detach_subtree(y);
  tree_.rebuild_order();
  // Each escaping edge now acts like a deletion on its target; shallow
  // targets first.
  std::sort(crossing.begin(), crossing.end(), [&](const auto& a, const auto& b) {
    return tree_.depth(a.second) < tree_.depth(b.second);
  });
  for (auto& [u, v] : crossing) {
    if (v == tree_.root() || !tree_.reachable(v)) continue;
    if (still_reachable(v)) {
      delete_reachable(v);
    } else {
      delete_unreachable_cascade(v);
    }
  }
}

void SglEngine::on_delete(VertexId x, VertexId y) {
  last_affected_.clear();
  if (x == y || y == tree_.root() || !tree_.reachable(y)) return;
  if (still_reachable(y)) {
    delete_reachable(y);
  } else {
    delete_unreachable_cascade(y);
  }
}

}  // namespace domdyn
