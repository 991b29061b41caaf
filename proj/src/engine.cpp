#include "domdyn/engine.hpp"

#include "domdyn/dbs.hpp"
#include "domdyn/dsnca.hpp"
#include "domdyn/sgl.hpp"
#include "domdyn/static_algos.hpp"

namespace domdyn {

std::string_view algo_name(Algo a) {
  switch (a) {
    case Algo::Slt: return "slt";
    case Algo::Dsnca: return "dsnca";
    case Algo::Dbs: return "dbs";
    case Algo::Sgl: return "sgl";
  }
  return "?";
}

Algo algo_from_name(std::string_view name) {
  if (name == "slt") return Algo::Slt;
  if (name == "dsnca") return Algo::Dsnca;
  if (name == "dbs") return Algo::Dbs;
  if (name == "sgl") return Algo::Sgl;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::unique_ptr<Engine> make_engine(Algo a, FlowGraph g) {
  switch (a) {
    case Algo::Slt: return std::make_unique<SltEngine>(std::move(g));
    case Algo::Dsnca: return std::make_unique<DsncaEngine>(std::move(g));
    case Algo::Dbs: return std::make_unique<DbsEngine>(std::move(g));
    case Algo::Sgl: return std::make_unique<SglEngine>(std::move(g));
  }
  throw std::invalid_argument("unknown algorithm id");
}

SltEngine::SltEngine(FlowGraph g) : Engine(std::move(g)) {
  rebuild();
  counters_.full_rebuilds = 0;
}

void SltEngine::rebuild() {
  tree_.assign(slt(graph_, graph_.start()));
  ++counters_.full_rebuilds;
}

void SltEngine::on_insert(VertexId x, VertexId y) {
  (void)y;
  if (tree_.reachable(x)) rebuild();
}

void SltEngine::on_delete(VertexId, VertexId) { rebuild(); }

}  // namespace domdyn
