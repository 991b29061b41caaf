#ifndef DOMDYN_GENERATOR_HPP
#define DOMDYN_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domdyn/graph.hpp"

namespace domdyn {

// A graph instance as stored on disk: edge order is significant (the
// sequence generator splits the file into initial edges and insertions).
struct GraphInstance {
  int n = 0;
  VertexId start = 1;
  std::vector<std::pair<VertexId, VertexId>> edges;

  FlowGraph build(std::size_t edge_limit) const;
  FlowGraph build_all() const { return build(edges.size()); }
};

struct GeneratorConfig {
  int i_frac = 0;      // percent of edges to insert
  int d_frac = 0;      // percent of edges to delete
  int q_frac = 0;      // percent of dominance queries (extension; default off)
  std::uint64_t seed = 0;
};

// Splits the instance into an initial graph (the first m - floor(i*m/100)
// edges) and a uniformly interleaved update sequence: the remaining edges as
// insertions in file order, floor(d*m/100) deletions drawn uniformly from the
// simulated current edge multiset.
UpdateSequence generate_sequence(const GraphInstance& inst, const GeneratorConfig& cfg);

enum class FamilyKind { Fig1, Fig2, Random, RandDag };

FamilyKind family_from_name(const std::string& name);

// Pathological and random instance families. fig1: a path with a reverse
// subpath, where one edge update moves n-2 parents. fig2: the acyclic
// variant, a half-length path fanning out to the other half. random: m
// uniform edges. randdag: m forward edges under a random permutation.
GraphInstance gen_family(FamilyKind kind, int n, int m = -1, std::uint64_t seed = 0);

}  // namespace domdyn

#endif  // DOMDYN_GENERATOR_HPP
