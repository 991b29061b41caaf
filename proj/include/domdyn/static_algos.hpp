#ifndef DOMDYN_STATIC_ALGOS_HPP
#define DOMDYN_STATIC_ALGOS_HPP

#include <optional>
#include <vector>

#include "domdyn/domtree.hpp"
#include "domdyn/graph.hpp"

namespace domdyn {

// Optional vertex restriction: a run is confined to vertices v with
// mask[v] != 0. The root must satisfy the mask.
using VertexMask = std::vector<char>;

// DFS tree data. pre/post are 1-based; 0 means "not reached".
struct DfsInfo {
  std::vector<int> pre;
  std::vector<int> post;
  std::vector<VertexId> tree_parent;     // t(v); kNoVertex for root/unreached
  std::vector<VertexId> order;           // order[i-1] = vertex with pre == i
  VertexId root = kNoVertex;
  int reached() const { return static_cast<int>(order.size()); }
};

// Semidominator data: sd(v) and a witness predecessor g(v) lying on a
// semidominator path from sd(v) to v.
struct SemiInfo {
  std::vector<VertexId> sd;       // kNoVertex when undefined
  std::vector<VertexId> witness;  // g(v)
};

struct SncaResult {
  std::vector<VertexId> parent;  // idom array, kNoVertex for unreached
  DfsInfo dfs;
  SemiInfo semi;
};

// Depth-first search from root, out-edges scanned in adjacency order.
DfsInfo dfs(const FlowGraph& g, VertexId root, const VertexMask* restrict = nullptr);

// Semidominators with witnesses, by reverse-preorder path-minima computations
// with path compression (the simple link-eval scheme).
SemiInfo semidominators(const FlowGraph& g, const DfsInfo& info);

// Simple Lengauer-Tarjan. Returns the idom array (kNoVertex for unreached).
std::vector<VertexId> slt(const FlowGraph& g, VertexId root,
                          const VertexMask* restrict = nullptr);

// SNCA: semidominator phase plus the preorder NCA phase; returns the DFS and
// semidominator data for incremental reuse.
SncaResult snca(const FlowGraph& g, VertexId root, const VertexMask* restrict = nullptr);

// Re-runs SNCA's phases assuming info is still a valid DFS tree of g.
// Semidominators are recomputed for vertices with pre(v) <= upto_pre, reusing
// stored values above; the NCA phase runs for every reached vertex. Updates
// semi in place and returns the new idom array.
std::vector<VertexId> snca_repair(const FlowGraph& g, const DfsInfo& info, int upto_pre,
                                  SemiInfo& semi, const VertexMask* restrict = nullptr);

// Iterative Cooper-Harvey-Kennedy from scratch (data-flow iteration to
// fixpoint over reverse postorder).
std::vector<VertexId> chk_iterative(const FlowGraph& g, VertexId root,
                                    const VertexMask* restrict = nullptr);

// Seeded CHK refinement: iterates the idom equation over the active vertices
// only, on top of a valid seed tree, using tree depths as the meet ordering.
// Mutates the tree in place; pre/size are rebuilt before returning.
void chk_refine(const FlowGraph& g, DominatorTree& tree,
                const std::vector<VertexId>& active);

// Purdom-Moore style brute-force oracle: dominators by removal-reachability.
// Independent of every other routine in this library; test oracle.
DominatorTree oracle_dominators(const FlowGraph& g, VertexId root);

// Tarjan's characterization: reducible iff deleting every edge (v,w) with w
// dominating v leaves an acyclic (reachable) subgraph.
bool is_reducible(const FlowGraph& g, VertexId root);

}  // namespace domdyn

#endif  // DOMDYN_STATIC_ALGOS_HPP
