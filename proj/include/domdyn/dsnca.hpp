#ifndef DOMDYN_DSNCA_HPP
#define DOMDYN_DSNCA_HPP

#include "domdyn/engine.hpp"
#include "domdyn/static_algos.hpp"

namespace domdyn {

// Dynamic SNCA: answers edge updates by partial recomputation of the
// semidominator and NCA phases over the stored DFS tree. Insertions fall back
// to a full rebuild when the stored DFS tree stops being valid; deletions use
// the t/g test (the tree can change only if the deleted edge left the DFS
// parent or the semidominator-path witness of its target).
class DsncaEngine final : public Engine {
 public:
  explicit DsncaEngine(FlowGraph g);
  std::string_view name() const override { return "dsnca"; }

  // Exposed for tests: stored DFS numbering and t/g side data.
  const DfsInfo& dfs_info() const { return dfs_; }
  const SemiInfo& semi_info() const { return semi_; }
  bool tg_valid(VertexId v) const { return tg_valid_[v] != 0; }

 private:
  void on_insert(VertexId x, VertexId y) override;
  void on_delete(VertexId x, VertexId y) override;

  void rebuild_full();
  void repair(int upto_pre);

  DfsInfo dfs_;
  SemiInfo semi_;
  std::vector<char> tg_valid_;
};

}  // namespace domdyn

#endif  // DOMDYN_DSNCA_HPP
