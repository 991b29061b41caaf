#include "domdyn/domdyn.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "domdyn/engine.hpp"
#include "domdyn/generator.hpp"
#include "domdyn/io.hpp"
#include "domdyn/runner.hpp"

using namespace domdyn;

// The C-level graph is the on-disk form: edge order significant, so a graph
// built through this API can be split into prefix + insertions later.
struct domdyn_graph {
  GraphInstance inst;
};

struct domdyn_engine {
  std::unique_ptr<Engine> impl;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

int ok() {
  g_last_error.clear();
  return DOMDYN_OK;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const VerificationError& e) {
    return fail(DOMDYN_EVERIFY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DOMDYN_EINVAL, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(DOMDYN_EIO, e.what());
  } catch (const std::runtime_error& e) {
    return fail(DOMDYN_EIO, e.what());
  } catch (const std::exception& e) {
    return fail(DOMDYN_EINVAL, e.what());
  }
}

}  // namespace

const char* domdyn_last_error(void) { return g_last_error.c_str(); }

int domdyn_graph_new(int n, int start, domdyn_graph** out) {
  if (out == nullptr) return fail(DOMDYN_EINVAL, "out is null");
  return guarded([&] {
    if (n < 1 || start < 1 || start > n)
      throw std::invalid_argument("graph_new: need n >= 1 and 1 <= start <= n");
    auto* g = new domdyn_graph;
    g->inst.n = n;
    g->inst.start = start;
    *out = g;
    return ok();
  });
}

int domdyn_graph_load(const char* path, domdyn_graph** out) {
  if (path == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    auto* g = new domdyn_graph;
    try {
      g->inst = read_graph_file(path);
    } catch (...) {
      delete g;
      throw;
    }
    *out = g;
    return ok();
  });
}

int domdyn_graph_save(const domdyn_graph* g, const char* path) {
  if (g == nullptr || path == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    write_graph_file(path, g->inst);
    return ok();
  });
}

void domdyn_graph_free(domdyn_graph* g) { delete g; }

int domdyn_graph_add_edge(domdyn_graph* g, int u, int v) {
  if (g == nullptr) return fail(DOMDYN_EINVAL, "graph is null");
  return guarded([&] {
    if (u < 1 || u > g->inst.n || v < 1 || v > g->inst.n)
      throw std::invalid_argument("add_edge: vertex out of range");
    g->inst.edges.emplace_back(u, v);
    return ok();
  });
}

int domdyn_graph_remove_edge(domdyn_graph* g, int u, int v) {
  if (g == nullptr) return fail(DOMDYN_EINVAL, "graph is null");
  return guarded([&] {
    auto& edges = g->inst.edges;
    auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end()) throw std::invalid_argument("remove_edge: edge not present");
    edges.erase(it);
    return ok();
  });
}

int domdyn_graph_vertex_count(const domdyn_graph* g, int* out) {
  if (g == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  *out = g->inst.n;
  return ok();
}

int domdyn_graph_edge_count(const domdyn_graph* g, int* out) {
  if (g == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  *out = static_cast<int>(g->inst.edges.size());
  return ok();
}

int domdyn_graph_start(const domdyn_graph* g, int* out) {
  if (g == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  *out = g->inst.start;
  return ok();
}

int domdyn_gen_family(const char* kind, int n, int m, uint64_t seed, const char* path) {
  if (kind == nullptr || path == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    GraphInstance inst = gen_family(family_from_name(kind), n, m, seed);
    write_graph_file(path, inst);
    return ok();
  });
}

int domdyn_gen_sequence(const char* graph_path, int ifrac, int dfrac, uint64_t seed,
                        const char* seq_path) {
  if (graph_path == nullptr || seq_path == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    GraphInstance inst = read_graph_file(graph_path);
    GeneratorConfig cfg;
    cfg.i_frac = ifrac;
    cfg.d_frac = dfrac;
    cfg.seed = seed;
    write_sequence_file(seq_path, generate_sequence(inst, cfg));
    return ok();
  });
}

int domdyn_engine_new(int algo, const domdyn_graph* g, domdyn_engine** out) {
  if (g == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    Algo a;
    switch (algo) {
      case DOMDYN_ALGO_SLT: a = Algo::Slt; break;
      case DOMDYN_ALGO_DSNCA: a = Algo::Dsnca; break;
      case DOMDYN_ALGO_DBS: a = Algo::Dbs; break;
      case DOMDYN_ALGO_SGL: a = Algo::Sgl; break;
      default: throw std::invalid_argument("engine_new: unknown algorithm id");
    }
    auto* e = new domdyn_engine;
    try {
      e->impl = make_engine(a, g->inst.build_all());
    } catch (...) {
      delete e;
      throw;
    }
    *out = e;
    return ok();
  });
}

void domdyn_engine_free(domdyn_engine* e) { delete e; }

int domdyn_engine_insert(domdyn_engine* e, int u, int v) {
  if (e == nullptr) return fail(DOMDYN_EINVAL, "engine is null");
  return guarded([&] {
    e->impl->insert(u, v);
    return ok();
  });
}

int domdyn_engine_delete(domdyn_engine* e, int u, int v) {
  if (e == nullptr) return fail(DOMDYN_EINVAL, "engine is null");
  return guarded([&] {
    e->impl->remove(u, v);
    return ok();
  });
}

int domdyn_engine_idom(const domdyn_engine* e, int v, int* out) {
  if (e == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    if (!e->impl->graph().valid_vertex(v))
      throw std::invalid_argument("idom: vertex out of range");
    *out = e->impl->tree().parent(v);
    return ok();
  });
}

int domdyn_engine_dominates(const domdyn_engine* e, int u, int v, int* out) {
  if (e == nullptr || out == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    const FlowGraph& g = e->impl->graph();
    if (!g.valid_vertex(u) || !g.valid_vertex(v))
      throw std::invalid_argument("dominates: vertex out of range");
    *out = e->impl->tree().dominates(u, v) ? 1 : 0;
    return ok();
  });
}

int domdyn_engine_parents(const domdyn_engine* e, int* parents, int capacity) {
  if (e == nullptr || parents == nullptr) return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    const std::vector<VertexId>& p = e->impl->tree().parents();
    if (capacity < static_cast<int>(p.size()))
      throw std::invalid_argument("parents: buffer too small");
    std::copy(p.begin(), p.end(), parents);
    return ok();
  });
}

int domdyn_run(const char* graph_path, const char* seq_path, const char* algo,
               int verify_every, const char* csv_path) {
  if (graph_path == nullptr || seq_path == nullptr || algo == nullptr)
    return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    GraphInstance inst = read_graph_file(graph_path);
    UpdateSequence seq = read_sequence_file(seq_path);

    // Strip directories from the graph path for the report label.
    std::string name = graph_path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);

    RunReport report =
        run_benchmark(inst, seq, algo_from_name(algo), verify_every, name);
    std::string row = to_csv_row(report);
    std::printf("%s\n%s\n", csv_header().c_str(), row.c_str());

    if (csv_path != nullptr) {
      bool fresh = true;
      {
        std::ifstream probe(csv_path);
        fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
      }
      std::ofstream out(csv_path, std::ios::app);
      if (!out) throw std::runtime_error(std::string("cannot open csv file: ") + csv_path);
      if (fresh) out << csv_header() << '\n';
      out << row << '\n';
    }
    return ok();
  });
}

int domdyn_verify(const char* graph_path, const char* seq_path, const char* algos) {
  if (graph_path == nullptr || seq_path == nullptr || algos == nullptr)
    return fail(DOMDYN_EINVAL, "null argument");
  return guarded([&] {
    GraphInstance inst = read_graph_file(graph_path);
    UpdateSequence seq = read_sequence_file(seq_path);

    std::vector<Algo> list;
    std::stringstream ss(algos);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) list.push_back(algo_from_name(token));
    }
    verify_lockstep(inst, seq, list);
    return ok();
  });
}
