#include "domdyn/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "domdyn/rng.hpp"

namespace domdyn {

FlowGraph GraphInstance::build(std::size_t edge_limit) const {
  FlowGraph g(n, start);
  edge_limit = std::min(edge_limit, edges.size());
  for (std::size_t i = 0; i < edge_limit; ++i) g.add_edge(edges[i].first, edges[i].second);
  return g;
}

UpdateSequence generate_sequence(const GraphInstance& inst, const GeneratorConfig& cfg) {
  if (cfg.i_frac < 0 || cfg.i_frac > 100 || cfg.d_frac < 0 || cfg.d_frac > 100 ||
      cfg.q_frac < 0 || cfg.q_frac > 100)
    throw std::invalid_argument("generate_sequence: fractions must be in [0,100]");

  long long m = static_cast<long long>(inst.edges.size());
  long long m_i = cfg.i_frac * m / 100;
  long long m_d = cfg.d_frac * m / 100;
  long long m_q = cfg.q_frac * m / 100;
  long long m_prime = m - m_i;

  UpdateSequence seq;
  seq.initial_edge_count = static_cast<int>(m_prime);
  seq.seed = cfg.seed;
  seq.i_frac = cfg.i_frac;
  seq.d_frac = cfg.d_frac;

  SplitMix64 rng(cfg.seed);
  // Simulated current edge multiset, array-backed with swap-remove so
  // deletion draws are uniform and O(1).
  std::vector<std::pair<VertexId, VertexId>> current(inst.edges.begin(),
                                                     inst.edges.begin() + m_prime);
  std::size_t next_insert = static_cast<std::size_t>(m_prime);

  long long rem_i = m_i, rem_d = m_d, rem_q = m_q;
  while (rem_i + rem_d + rem_q > 0) {
    std::uint64_t pick = rng.below(static_cast<std::uint64_t>(rem_i + rem_d + rem_q));
    if (pick < static_cast<std::uint64_t>(rem_i)) {
      auto [u, v] = inst.edges[next_insert++];
      seq.ops.push_back({UpdateOp::Kind::Insert, u, v});
      current.emplace_back(u, v);
      --rem_i;
    } else if (pick < static_cast<std::uint64_t>(rem_i + rem_d)) {
      --rem_d;
      if (current.empty()) {
        ++seq.dropped_deletes;  // nothing to delete; token consumed
        continue;
      }
      std::size_t idx = rng.below(current.size());
      auto [u, v] = current[idx];
      seq.ops.push_back({UpdateOp::Kind::Delete, u, v});
      current[idx] = current.back();
      current.pop_back();
    } else {
      --rem_q;
      VertexId u = static_cast<VertexId>(rng.below(inst.n) + 1);
      VertexId v = static_cast<VertexId>(rng.below(inst.n) + 1);
      seq.ops.push_back({UpdateOp::Kind::Query, u, v});
    }
  }
  return seq;
}

FamilyKind family_from_name(const std::string& name) {
  if (name == "fig1") return FamilyKind::Fig1;
  if (name == "fig2") return FamilyKind::Fig2;
  if (name == "random") return FamilyKind::Random;
  if (name == "randdag") return FamilyKind::RandDag;
  throw std::invalid_argument("unknown family kind: " + name);
}

GraphInstance gen_family(FamilyKind kind, int n, int m, std::uint64_t seed) {
  GraphInstance inst;
  inst.n = n;
  inst.start = 1;
  switch (kind) {
    case FamilyKind::Fig1: {
      if (n < 3) throw std::invalid_argument("fig1: n must be >= 3");
      // Path v0..v_{n-1} (vertex i+1) plus the reverse subpath down to v2.
      for (int i = 1; i < n; ++i) inst.edges.emplace_back(i, i + 1);
      for (int j = n - 1; j >= 3; --j) inst.edges.emplace_back(j + 1, j);
      break;
    }
    case FamilyKind::Fig2: {
      if (n < 3) throw std::invalid_argument("fig2: n must be >= 3");
      int half = n / 2;
      for (int i = 1; i < half; ++i) inst.edges.emplace_back(i, i + 1);
      for (int i = half; i < n; ++i) inst.edges.emplace_back(half, i + 1);
      // Reverse chain through the fan targets (still acyclic): it is what
      // makes one insertion at the last target cascade through all of them.
      for (int k = n - 1; k > half; --k) inst.edges.emplace_back(k + 1, k);
      break;
    }
    case FamilyKind::Random: {
      if (n < 1 || m < 0) throw std::invalid_argument("random: need n >= 1, m >= 0");
      SplitMix64 rng(seed);
      for (int i = 0; i < m; ++i) {
        VertexId u = static_cast<VertexId>(rng.below(n) + 1);
        VertexId v = static_cast<VertexId>(rng.below(n) + 1);
        inst.edges.emplace_back(u, v);
      }
      break;
    }
    case FamilyKind::RandDag: {
      if (n < 2 || m < 0) throw std::invalid_argument("randdag: need n >= 2, m >= 0");
      SplitMix64 rng(seed);
      // Random permutation rank; edges oriented from lower to higher rank.
      std::vector<int> rank(n + 1);
      for (int i = 1; i <= n; ++i) rank[i] = i;
      for (int i = n; i >= 2; --i)
        std::swap(rank[i], rank[rng.below(static_cast<std::uint64_t>(i)) + 1]);
      for (int i = 0; i < m; ++i) {
        VertexId u = static_cast<VertexId>(rng.below(n) + 1);
        VertexId v = static_cast<VertexId>(rng.below(n) + 1);
        if (u == v) {
          --i;
          continue;
        }
        if (rank[u] > rank[v]) std::swap(u, v);
        inst.edges.emplace_back(u, v);
      }
      break;
    }
  }
  return inst;
}

}  // namespace domdyn
