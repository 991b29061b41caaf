#ifndef DOMDYN_DBS_HPP
#define DOMDYN_DBS_HPP

#include "domdyn/engine.hpp"
#include "domdyn/static_algos.hpp"

namespace domdyn {

// Trace of one insertion's affected-vertex search, for instrumentation.
struct DbsInsertTrace {
  std::vector<int> levels;                          // successive affected levels
  std::vector<std::pair<VertexId, int>> scanned;    // (vertex, depth at scan)
  std::vector<VertexId> affected;
  VertexId nca = kNoVertex;
  int nca_depth = -1;
};

// Depth-based search: bucket-driven search for the vertices affected by an
// insertion; deletions rerun SNCA on the subgraph under d(y), guarded by the
// t/g test, with V+(y) handling when y becomes unreachable.
class DbsEngine final : public Engine {
 public:
  explicit DbsEngine(FlowGraph g);
  std::string_view name() const override { return "dbs"; }

  const DbsInsertTrace& last_insert_trace() const { return trace_; }
  bool tg_valid(VertexId v) const { return tg_valid_[v] != 0; }
  // Debug sweep: all scanned/affected bits clear and buckets empty.
  bool state_clean() const;

 private:
  void on_insert(VertexId x, VertexId y) override;
  void on_delete(VertexId x, VertexId y) override;

  void rebuild_full();
  void scan(VertexId v, int level, VertexId z);
  // Runs SNCA rooted at sub_root over the current descendants of sub_root and
  // splices the result into the tree. Vertices of extra_detach that the pass
  // does not reach become unreachable.
  void snca_splice(VertexId sub_root, const std::vector<VertexId>& region,
                   const std::vector<VertexId>& extra_detach);

  std::vector<char> scanned_;
  std::vector<char> affected_;
  std::vector<std::vector<VertexId>> buckets_;
  std::vector<char> tg_valid_;
  std::vector<VertexId> tg_parent_;   // t(v) from the last SNCA pass touching v
  std::vector<VertexId> tg_witness_;  // g(v) likewise
  DbsInsertTrace trace_;
};

}  // namespace domdyn

#endif  // DOMDYN_DBS_HPP
