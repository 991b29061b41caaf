#include "domdyn/domtree.hpp"

#include <algorithm>
#include <sstream>

namespace domdyn {

DominatorTree::DominatorTree(int n, VertexId root) : n_(n), root_(root) {
  if (root < 1 || root > n) throw std::invalid_argument("DominatorTree: root out of range");
  parent_.assign(n + 1, kNoVertex);
  depth_.assign(n + 1, 0);
  children_.assign(n + 1, {});
  pre_.assign(n + 1, 0);
  size_.assign(n + 1, 0);
  pre_[root] = 1;
  size_[root] = 1;
}

void DominatorTree::assign(std::span<const VertexId> parents) {
  if (static_cast<int>(parents.size()) != n_ + 1)
    throw std::invalid_argument("DominatorTree: parent array size mismatch");
  if (parents[root_] != kNoVertex)
    throw std::invalid_argument("DominatorTree: root must have no parent");
  std::copy(parents.begin(), parents.end(), parent_.begin());
  refresh();
}

void DominatorTree::refresh() {
  for (auto& c : children_) c.clear();
  for (VertexId v = 1; v <= n_; ++v) {
    if (v != root_ && parent_[v] != kNoVertex) children_[parent_[v]].push_back(v);
  }
  // Depths by preorder walk; also validates that parent pointers form a tree.
  std::fill(depth_.begin(), depth_.end(), 0);
  int seen = 1;
  std::vector<VertexId> stack = {root_};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      ++seen;
      stack.push_back(c);
    }
  }
  int expected = 0;
  for (VertexId v = 1; v <= n_; ++v)
    if (reachable(v)) ++expected;
  if (seen != expected) throw std::invalid_argument("DominatorTree: parent array is not a tree");
  rebuild_order();
}

VertexId DominatorTree::nca(VertexId u, VertexId v) const {
  if (!reachable(u) || !reachable(v))
    throw std::invalid_argument("nca: unreachable argument");
  while (u != v) {
    if (depth_[u] >= depth_[v])
      u = (u == root_) ? v : parent_[u];
    else
      v = parent_[v];
  }
  return u;
}

bool DominatorTree::dominates(VertexId u, VertexId v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  if (pre_[u] == 0 || pre_[v] == 0) return false;
  return pre_[u] <= pre_[v] && pre_[v] < pre_[u] + size_[u];
}

bool DominatorTree::is_ancestor_by_walk(VertexId u, VertexId v) const {
  if (!reachable(u) || !reachable(v)) return false;
  while (depth_[v] > depth_[u]) v = parent_[v];
  return u == v;
}

VertexId DominatorTree::support(VertexId v, VertexId w) const {
  if (!reachable(v) || !reachable(w) || w == root_)
    throw std::invalid_argument("support: precondition violated");
  VertexId p = parent_[w];
  if (v == p) return p;
  VertexId c = v;
  while (depth_[c] > depth_[p] + 1) c = parent_[c];
  if (depth_[c] != depth_[p] + 1 || parent_[c] != p)
    throw std::invalid_argument("support: v is not a descendant of parent(w)");
  return c;
}

void DominatorTree::reattach(VertexId v, VertexId new_parent) {
  if (v == root_) throw std::invalid_argument("reattach: cannot move the root");
  if (!reachable(new_parent)) throw std::invalid_argument("reattach: unreachable parent");
  if (!reachable(v)) throw std::invalid_argument("reattach: unreachable vertex");
  if (v == new_parent || is_ancestor_by_walk(v, new_parent))
    throw std::invalid_argument("reattach: would create an ancestry cycle");
  VertexId old = parent_[v];
  if (old != kNoVertex) {
    auto& sib = children_[old];
    sib.erase(std::find(sib.begin(), sib.end(), v));
  }
  parent_[v] = new_parent;
  children_[new_parent].push_back(v);
  // Depths of the whole subtree shift by the same delta.
  depth_[v] = depth_[new_parent] + 1;
  std::vector<VertexId> stack = {v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId c : children_[u]) {
      depth_[c] = depth_[u] + 1;
      stack.push_back(c);
    }
  }
}

void DominatorTree::detach_subtree(VertexId v) {
  if (v == root_) throw std::invalid_argument("detach_subtree: cannot detach the root");
  if (!reachable(v)) return;
  VertexId old = parent_[v];
  auto& sib = children_[old];
  sib.erase(std::find(sib.begin(), sib.end(), v));
  std::vector<VertexId> stack = {v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId c : children_[u]) stack.push_back(c);
    parent_[u] = kNoVertex;
    children_[u].clear();
    depth_[u] = 0;
  }
}

void DominatorTree::rebuild_order() {
  std::fill(pre_.begin(), pre_.end(), 0);
  std::fill(size_.begin(), size_.end(), 0);
  int next = 0;
  // Post-order accumulation of sizes with an explicit stack.
  std::vector<std::pair<VertexId, size_t>> stack;
  pre_[root_] = ++next;
  stack.emplace_back(root_, 0);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < children_[v].size()) {
      VertexId c = children_[v][idx++];
      pre_[c] = ++next;
      stack.emplace_back(c, 0);
    } else {
      size_[v] = 1;
      for (VertexId c : children_[v]) size_[v] += size_[c];
      stack.pop_back();
    }
  }
}

std::vector<VertexId> DominatorTree::subtree_vertices(VertexId v) const {
  std::vector<VertexId> out;
  if (!reachable(v)) return out;
  std::vector<VertexId> stack = {v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (VertexId c : children_[u]) stack.push_back(c);
  }
  return out;
}

std::string DominatorTree::dump() const {
  std::ostringstream os;
  for (VertexId v = 1; v <= n_; ++v) os << v << ' ' << parent_[v] << '\n';
  return os.str();
}

namespace {

// Reachability in g from s, optionally with one vertex removed.
std::vector<char> reach_without(const FlowGraph& g, VertexId removed) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  VertexId s = g.start();
  if (s == removed) return seen;
  seen[s] = 1;
  std::vector<VertexId> stack = {s};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.out(u)) {
      if (w == removed || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

bool verify_parent_property(const FlowGraph& g, const DominatorTree& t) {
  std::vector<char> reach = reach_without(g, kNoVertex);
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (static_cast<bool>(reach[v]) != t.reachable(v)) return false;
  }
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (!reach[v]) continue;
    for (VertexId w : g.out(v)) {
      if (w == t.root() || w == v) continue;
      if (!t.dominates(t.parent(w), v)) return false;
    }
  }
  return true;
}

bool verify_sibling_property(const FlowGraph& g, const DominatorTree& t) {
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (!t.reachable(v) || v == t.root()) continue;
    std::vector<char> reach = reach_without(g, v);
    for (VertexId w : t.children(t.parent(v))) {
      if (w != v && !reach[w]) return false;
    }
  }
  return true;
}

}  // namespace domdyn
