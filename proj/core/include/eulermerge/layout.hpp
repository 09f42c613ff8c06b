#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "eulermerge/dual_graph.hpp"
#include "eulermerge/geometry.hpp"
#include "eulermerge/planarity.hpp"

namespace eulermerge {

// Straight-line drawing of a planar dual graph.
//
// Besides the dual graph's own faces the layout carries a triangulated
// scaffold over the zones plus three frame vertices (indices zone_count()
// .. zone_count()+2) that lie outside every set and form the outer
// triangle. Scaffold edges are the dual edges plus dummy edges. Every
// bounded scaffold face is a counter-clockwise triangle; refinement keeps
// them that way, which is what keeps the drawing crossing-free, and curve
// routing walks through them.
struct Layout {
  std::vector<Point> positions;  // indexed by zone
  std::array<Point, 3> frame{};  // counter-clockwise

  RotationSystem rotation;                      // dual graph, counter-clockwise
  std::vector<std::vector<std::size_t>> faces;  // dual graph faces (vertex walks)
  // Unbounded face of z0's component (of the leftmost component when z0 has
  // no edges); faces.size() when the graph has no edges at all.
  std::size_t outer_face = 0;

  std::vector<ZonePair> scaffold_edges;               // sorted, includes every dual edge
  std::vector<bool> scaffold_is_dual;                 // parallel to scaffold_edges
  std::vector<std::array<std::size_t, 3>> triangles;  // bounded scaffold faces, CCW

  std::size_t zone_count() const noexcept { return positions.size(); }
  bool is_frame(std::size_t v) const noexcept { return v >= positions.size(); }
  // Position of a zone or frame vertex.
  Point point(std::size_t v) const { return is_frame(v) ? frame.at(v - positions.size()) : positions[v]; }
  std::size_t scaffold_edge_index(std::size_t a, std::size_t b) const;
};

// Planar straight-line layout with the outer zone on the outer face of the
// dual graph. Positions are scaled so the mean dual edge length is 1.
// Throws ContractViolation on nonplanar input.
Layout planar_layout(const DualGraph& graph);

struct RefineOptions {
  int iterations = 500;
  double ideal_edge_length = 1.0;
  // Vertex pairs closer than this are only ever moved apart.
  double min_spacing = 0.35;
  double min_step = 1e-4;
  double gravity = 0.02;
  // Magnitude of the seeded initial perturbation, in ideal edge lengths.
  double jitter = 0.05;
  std::uint64_t seed = 1;
};

using LayoutObserver = std::function<void(int iteration, const Layout&)>;

// Force-directed refinement: node repulsion, dual edge attraction and
// vertex-edge repulsion. A vertex move is accepted only if every scaffold
// triangle stays positively oriented along the whole move, so no crossing
// can appear, and only if the minimum pairwise zone distance does not drop.
// Rejected moves are retried with halved steps down to `min_step`. Dummy
// scaffold edges are flipped towards a Delaunay triangulation as vertices
// move.
Layout refine_layout(const DualGraph& graph, Layout layout, const RefineOptions& options = {},
                     const LayoutObserver& observer = {});

// Recomputes rotation, faces and outer face of the dual graph from the
// current positions.
void update_faces(const DualGraph& graph, Layout& layout);

// Every scaffold triangle is strictly counter-clockwise.
bool scaffold_valid(const Layout& layout);
// Pairs of dual edges without a shared endpoint whose segments intersect.
std::size_t count_edge_crossings(const DualGraph& graph, const Layout& layout);
std::size_t count_scaffold_crossings(const Layout& layout);
double min_vertex_distance(const Layout& layout);
double min_dual_edge_length(const DualGraph& graph, const Layout& layout);

}  // namespace eulermerge
