#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulermerge/dual_graph.hpp"

namespace eulermerge {

// Combinatorial embedding: for each vertex, its neighbours in cyclic order.
struct RotationSystem {
  std::vector<std::vector<std::size_t>> order;

  // Faces traced as closed vertex walks. The dart following u->v is
  // v->w where w comes after u in the rotation at v. Isolated vertices
  // contribute no face.
  std::vector<std::vector<std::size_t>> faces() const;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;  // set iff planar
};

// Boyer-Myrvold planarity test on a simple graph given as an edge list.
PlanarityResult test_planarity(std::size_t vertex_count, const std::vector<ZonePair>& edges);
PlanarityResult is_planar(const DualGraph& graph);

// A subdivision of K5 or K3,3 inside a nonplanar dual graph.
struct KuratowskiSubgraph {
  std::vector<std::size_t> vertices;  // zone indices, ascending
  std::vector<std::size_t> edges;     // indices into graph.edges(), ascending
};

// Edge-minimal nonplanar subgraph obtained by deleting edges in edge-list
// order whenever the remainder stays nonplanar. Returns indices into
// `edges`. Throws ContractViolation on planar input.
std::vector<std::size_t> minimal_nonplanar_edges(std::size_t vertex_count,
                                                 const std::vector<ZonePair>& edges);

// Throws ContractViolation if the graph is planar.
KuratowskiSubgraph kuratowski_subdivision(const DualGraph& graph);

}  // namespace eulermerge
