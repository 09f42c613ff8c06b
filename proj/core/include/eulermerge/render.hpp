#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eulermerge/dual_graph.hpp"
#include "eulermerge/geometry.hpp"
#include "eulermerge/layout.hpp"

namespace eulermerge {

// What a curve point is attached to; smoothing keeps every point on or in
// its anchor so curves never cross a dual edge or vertex they must not.
enum class Anchor {
  kFree,      // unconstrained
  kFixed,     // never moves
  kEdge,      // on scaffold edge `index`, at parameter t from its lower endpoint
  kTriangle,  // inside scaffold triangle `index`
};

struct CurvePoint {
  Point p;
  Anchor anchor = Anchor::kFree;
  std::size_t index = 0;
  double t = 0.0;
};

// The closed boundary of one set label. Several rings appear when the
// enclosed area has holes or several pieces; containment is even-odd over
// all rings. Outer rings run counter-clockwise, holes clockwise; rings are
// ordered by decreasing area.
struct Curve {
  std::string label;
  std::vector<std::vector<CurvePoint>> rings;

  std::vector<std::vector<Point>> polygons() const;
  std::size_t point_count() const;
};

struct Diagram {
  DualGraph graph;
  Layout layout;
  std::vector<Curve> curves;  // in label order
};

struct RouteOptions {
  // Permits routing duals with nonzero concurrency (intermediate stages):
  // curves crossing the same edge do so side by side.
  bool allow_concurrency = false;
  // Extra points inserted on every routed segment, giving smoothing room.
  int subdivisions = 3;
};

// One curve per active label enclosing exactly the zone vertices whose
// label contains it. Each curve crosses a scaffold edge once if the edge
// separates an inside from an outside zone and never otherwise; single
// crossings of dual edges sit at the edge midpoint. Throws ContractViolation
// for nonzero concurrency (unless allowed) or a layout that does not belong
// to the graph.
Diagram route_curves(const DualGraph& graph, const Layout& layout, const RouteOptions& options = {});

struct SmoothOptions {
  int iterations = 100;
  double rate = 0.5;
  // Obstacle clearance as a fraction of the shortest scaffold edge.
  double clearance = 0.25;
};

// Discrete curve-shortening: every point moves toward the midpoint of its
// neighbours, subject to its anchor constraint, a per-step displacement
// limit and a ban on self-intersections. Zone classification is unchanged.
Diagram smooth_curves(Diagram diagram, const SmoothOptions& options = {});

// inside[c][z]: zone vertex z lies inside curve c.
std::vector<std::vector<bool>> classification_matrix(const Diagram& diagram);

// Every ring is simple and no two rings of the same curve touch.
bool curve_is_simple(const Curve& curve);
double curve_length(const Curve& curve);

}  // namespace eulermerge
