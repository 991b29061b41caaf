#ifndef DOMDYN_DOMTREE_HPP
#define DOMDYN_DOMTREE_HPP

#include <span>
#include <string>
#include <vector>

#include "domdyn/graph.hpp"

namespace domdyn {

// Dominator tree with depths and a preorder numbering of the tree that
// supports constant-time dominance (ancestry) queries.
//
// parent(v) == kNoVertex means v is unreachable, unless v is the root.
class DominatorTree {
 public:
  DominatorTree() = default;
  DominatorTree(int n, VertexId root);

  int vertex_count() const { return n_; }
  VertexId root() const { return root_; }

  VertexId parent(VertexId v) const { return parent_[v]; }
  int depth(VertexId v) const { return depth_[v]; }
  bool reachable(VertexId v) const { return v == root_ || parent_[v] != kNoVertex; }
  const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
  const std::vector<VertexId>& parents() const { return parent_; }

  int pre(VertexId v) const { return pre_[v]; }
  int subtree_size(VertexId v) const { return size_[v]; }

  // Replaces the whole tree with the given parent array (parents[root] must
  // be kNoVertex) and rebuilds children, depths and the order numbering.
  void assign(std::span<const VertexId> parents);

  // Writes parent(v) for v; children/depth/pre/size stay stale until
  // refresh() is called. Used by engines that splice in a block of parents.
  void set_parent_raw(VertexId v, VertexId p) { parent_[v] = p; }
  // Rebuilds children, depths and pre/size from the parent array.
  void refresh();

  // Nearest common ancestor by parent-pointer walking from the deeper vertex.
  // Throws if either argument is unreachable.
  VertexId nca(VertexId u, VertexId v) const;

  // True iff u is an ancestor of v in the tree (reflexive); false when either
  // vertex is unreachable. Constant time via the pre/size numbering.
  bool dominates(VertexId u, VertexId v) const;

  // Ancestry test that walks parent pointers; valid even while pre/size are
  // stale. False when either vertex is unreachable.
  bool is_ancestor_by_walk(VertexId u, VertexId v) const;

  // Support of edge (v,w): parent(w) itself if v == parent(w), otherwise the
  // child of parent(w) that is an ancestor of v. Throws when the parent
  // property does not hold for (v,w), which signals a corrupted tree.
  VertexId support(VertexId v, VertexId w) const;

  // Moves v under new_parent and recomputes the depths of v's subtree.
  // pre/size stay stale until rebuild_order().
  void reattach(VertexId v, VertexId new_parent);

  // Marks v and its whole subtree unreachable.
  void detach_subtree(VertexId v);

  // Recomputes pre/size by one preorder traversal.
  void rebuild_order();

  // Collects v and all its tree descendants.
  std::vector<VertexId> subtree_vertices(VertexId v) const;

  // Text dump: one line "<v> <parent(v)>" per vertex, 0 for none.
  std::string dump() const;

  bool operator==(const DominatorTree& other) const {
    return root_ == other.root_ && parent_ == other.parent_;
  }

 private:
  int n_ = 0;
  VertexId root_ = kNoVertex;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<int> pre_;
  std::vector<int> size_;
};

// Parent property: for every edge (v,w) of g with v reachable, parent(w)
// dominates v; additionally the tree's reachable set must match reachability
// in g.
bool verify_parent_property(const FlowGraph& g, const DominatorTree& t);

// Sibling property, checked by removal-reachability: for every pair of
// siblings v,w, w stays reachable from s in g with v removed. O(n*m); test
// utility for desk-scale graphs.
bool verify_sibling_property(const FlowGraph& g, const DominatorTree& t);

}  // namespace domdyn

#endif  // DOMDYN_DOMTREE_HPP
