#include "eulermerge/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "eulermerge/error.hpp"

namespace eulermerge {
namespace {

// A boundary piece between two scaffold-edge crossings inside one triangle.
struct Link {
  std::size_t from = 0;  // scaffold edge indices
  std::size_t to = 0;
  std::vector<Point> interior;
  std::size_t triangle = 0;
};

double spread(std::size_t k, std::size_t m, double gap) {
  return (static_cast<double>(k) - (static_cast<double>(m) - 1.0) / 2.0) * gap;
}

std::optional<std::size_t> position_of(const std::vector<std::string>& v, const std::string& s) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

// Fraction of a scaffold edge, measured from its lower (zone) endpoint, in
// which curves may cross it. Edges to frame vertices can be very long, so
// crossings stay within about one unit of the zone.
double usable_fraction(const Layout& layout, std::size_t edge) {
  auto [a, b] = layout.scaffold_edges[edge];
  if (!layout.is_frame(b)) return 1.0;
  return std::min(1.0, 1.2 / distance(layout.point(a), layout.point(b)));
}

struct Router {
  const DualGraph& graph;
  const Layout& layout;
  const RouteOptions& options;
  std::vector<std::string> labels;

  // Labels crossing each scaffold edge / triangle, in label order.
  std::vector<std::vector<std::string>> edge_labels;
  std::vector<std::vector<std::string>> triangle_labels;

  // Frame vertices lie outside every set.
  bool inside(std::size_t v, const std::string& s) const {
    return !layout.is_frame(v) && graph.zone_label(v).contains(s);
  }

  void index() {
    const auto& edges = layout.scaffold_edges;
    edge_labels.assign(edges.size(), {});
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (const auto& s : labels)
        if (inside(edges[i].first, s) != inside(edges[i].second, s)) edge_labels[i].push_back(s);
    triangle_labels.assign(layout.triangles.size(), {});
    for (std::size_t t = 0; t < layout.triangles.size(); ++t) {
      const auto& tri = layout.triangles[t];
      for (const auto& s : labels) {
        int count = inside(tri[0], s) + inside(tri[1], s) + inside(tri[2], s);
        if (count == 1 || count == 2) triangle_labels[t].push_back(s);
      }
    }
  }

  double crossing_t(std::size_t edge, const std::string& s) const {
    const auto& ls = edge_labels[edge];
    auto k = *position_of(ls, s);
    double f = usable_fraction(layout, edge);
    return f * (0.5 + spread(k, ls.size(), std::min(0.15, 0.5 / static_cast<double>(ls.size()))));
  }

  CurvePoint crossing(std::size_t edge, const std::string& s) const {
    auto [a, b] = layout.scaffold_edges[edge];
    double t = crossing_t(edge, s);
    return {lerp(layout.point(a), layout.point(b), t), Anchor::kEdge, edge, t};
  }

  // Waypoint between the two crossings of s in triangle t; several labels
  // crossing the same triangle are spread towards the vertex s separates
  // off and towards the opposite side.
  Point triangle_point(std::size_t t, const std::string& s, Point x1, Point x2) const {
    const auto& tri = layout.triangles[t];
    std::size_t alone = 0;
    for (int i = 0; i < 3; ++i) {
      bool in = inside(tri[i], s);
      if (in != inside(tri[(i + 1) % 3], s) && in != inside(tri[(i + 2) % 3], s)) alone = i;
    }
    Point apex = layout.point(tri[alone]);
    Point opposite = lerp(layout.point(tri[(alone + 1) % 3]), layout.point(tri[(alone + 2) % 3]), 0.5);
    Point mid = lerp(x1, x2, 0.5);
    const auto& ls = triangle_labels[t];
    double phi = spread(*position_of(ls, s), ls.size(),
                        std::min(0.2, 0.6 / static_cast<double>(ls.size())));
    return phi >= 0.0 ? lerp(mid, apex, phi) : lerp(mid, opposite, -phi);
  }

  std::vector<Link> links(const std::string& s) const {
    std::vector<Link> out;
    for (std::size_t t = 0; t < layout.triangles.size(); ++t) {
      if (!position_of(triangle_labels[t], s)) continue;
      const auto& tri = layout.triangles[t];
      std::vector<std::size_t> mixed;
      for (int i = 0; i < 3; ++i) {
        auto a = tri[i];
        auto b = tri[(i + 1) % 3];
        if (inside(a, s) != inside(b, s)) mixed.push_back(layout.scaffold_edge_index(a, b));
      }
      Point x1 = crossing(mixed[0], s).p;
      Point x2 = crossing(mixed[1], s).p;
      out.push_back({mixed[0], mixed[1], {triangle_point(t, s, x1, x2)}, t});
    }
    return out;
  }

  void append_segment(std::vector<CurvePoint>& ring, Point a, Point b, std::size_t t) const {
    for (int i = 1; i <= options.subdivisions; ++i)
      ring.push_back({lerp(a, b, static_cast<double>(i) / (options.subdivisions + 1)),
                      Anchor::kTriangle, t, 0.0});
  }

  Curve route(const std::string& s) const {
    auto all = links(s);
    std::map<std::size_t, std::vector<std::size_t>> at_edge;
    for (std::size_t i = 0; i < all.size(); ++i) {
      at_edge[all[i].from].push_back(i);
      at_edge[all[i].to].push_back(i);
    }
    for (const auto& [e, ls] : at_edge)
      if (ls.size() != 2) throw Error("curve '" + s + "' has a dangling crossing");

    Curve curve;
    curve.label = s;
    std::vector<bool> used(all.size(), false);
    for (std::size_t start = 0; start < all.size(); ++start) {
      if (used[start]) continue;
      std::vector<CurvePoint> ring;
      std::size_t current = start;
      std::size_t edge = all[start].from;
      while (!used[current]) {
        used[current] = true;
        const auto& link = all[current];
        bool forward = link.from == edge;
        std::size_t next_edge = forward ? link.to : link.from;
        std::vector<Point> pts;
        pts.push_back(crossing(edge, s).p);
        if (forward)
          pts.insert(pts.end(), link.interior.begin(), link.interior.end());
        else
          pts.insert(pts.end(), link.interior.rbegin(), link.interior.rend());
        pts.push_back(crossing(next_edge, s).p);

        ring.push_back(crossing(edge, s));
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
          if (i > 0) ring.push_back({pts[i], Anchor::kTriangle, link.triangle, 0.0});
          append_segment(ring, pts[i], pts[i + 1], link.triangle);
        }
        const auto& pair = at_edge.at(next_edge);
        current = pair[0] == current ? pair[1] : pair[0];
        edge = next_edge;
      }
      curve.rings.push_back(std::move(ring));
    }
    return curve;
  }
};

std::vector<Point> points_of(const std::vector<CurvePoint>& ring) {
  std::vector<Point> out;
  out.reserve(ring.size());
  for (const auto& cp : ring) out.push_back(cp.p);
  return out;
}

// Orients rings (outer counter-clockwise, holes clockwise) and sorts them by
// decreasing area.
void normalize_rings(Curve& curve) {
  auto polys = curve.polygons();
  const auto n = polys.size();
  std::vector<double> area(n);
  for (std::size_t i = 0; i < n; ++i) area[i] = signed_area(polys[i]);
  for (std::size_t i = 0; i < n; ++i) {
    int depth = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && point_in_polygon(polys[i][0], polys[j])) ++depth;
    bool hole = depth % 2 == 1;
    if ((area[i] > 0.0) == hole) std::reverse(curve.rings[i].begin(), curve.rings[i].end());
    area[i] = std::abs(area[i]);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return area[a] > area[b]; });
  std::vector<std::vector<CurvePoint>> rings;
  for (auto i : order) rings.push_back(std::move(curve.rings[i]));
  curve.rings = std::move(rings);
}

}  // namespace

std::vector<std::vector<Point>> Curve::polygons() const {
  std::vector<std::vector<Point>> out;
  for (const auto& r : rings) out.push_back(points_of(r));
  return out;
}

std::size_t Curve::point_count() const {
  std::size_t n = 0;
  for (const auto& r : rings) n += r.size();
  return n;
}

Diagram route_curves(const DualGraph& graph, const Layout& layout, const RouteOptions& options) {
  if (layout.positions.size() != graph.zone_count())
    throw ContractViolation("layout does not match the dual graph");
  if (!options.allow_concurrency && concurrency(graph) > 0)
    throw ContractViolation("curves can only be routed for a dual graph without concurrency");
  if (options.subdivisions < 0) throw ContractViolation("subdivisions must be nonnegative");

  Diagram diagram{graph, layout, {}};
  auto labels = graph.active_labels().items();

  Router router{graph, layout, options, labels, {}, {}};
  router.index();
  for (const auto& s : labels) {
    auto curve = router.route(s);
    normalize_rings(curve);
    diagram.curves.push_back(std::move(curve));
  }
  return diagram;
}

namespace {

struct Smoother {
  Diagram& d;
  const SmoothOptions& options;
  double delta = 0.0;
  std::vector<double> inset;  // per triangle

  Point vertex(std::size_t v) const { return d.layout.point(v); }

  void prepare() {
    const auto& L = d.layout;
    double shortest = std::numeric_limits<double>::infinity();
    for (const auto& e : d.graph.edges())
      shortest = std::min(shortest, distance(vertex(e.a), vertex(e.b)));
    if (!std::isfinite(shortest))
      for (auto [a, b] : L.scaffold_edges) shortest = std::min(shortest, distance(vertex(a), vertex(b)));
    if (!std::isfinite(shortest)) shortest = 1.0;
    delta = options.clearance * shortest;
    for (const auto& tri : L.triangles) {
      Point a = vertex(tri[0]), b = vertex(tri[1]), c = vertex(tri[2]);
      double area = orient(a, b, c) / 2.0;
      double r = 2.0 * area / (distance(a, b) + distance(b, c) + distance(c, a));
      inset.push_back(std::min(delta, 0.25 * r));
    }
  }

  // Distances to the three (inward-facing) triangle sides.
  std::array<double, 3> side_distances(std::size_t t, Point p) const {
    const auto& tri = d.layout.triangles[t];
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
      Point a = vertex(tri[i]);
      Point b = vertex(tri[(i + 1) % 3]);
      out[i] = orient(a, b, p) / distance(a, b);
    }
    return out;
  }

  // A triangle point must keep at least min(inset, current distance) from
  // every side, so it stays strictly inside and drifts away from sides it
  // started on.
  bool anchor_ok(const CurvePoint& old, const CurvePoint& cand) const {
    if (cand.anchor != Anchor::kTriangle) return true;
    auto before = side_distances(cand.index, old.p);
    auto after = side_distances(cand.index, cand.p);
    for (int i = 0; i < 3; ++i)
      if (after[i] < std::min(inset[cand.index], before[i])) return false;
    return true;
  }

  // The two segments around ring point i of `ring` must not touch any
  // non-adjacent segment of the curve.
  bool keeps_simple(const Curve& curve, std::size_t r, std::size_t i) const {
    const auto& ring = curve.rings[r];
    const auto n = ring.size();
    std::size_t ip = (i + n - 1) % n;
    std::size_t in = (i + 1) % n;
    for (std::size_t rr = 0; rr < curve.rings.size(); ++rr) {
      const auto& other = curve.rings[rr];
      const auto m = other.size();
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t jn = (j + 1) % m;
        Point c = other[j].p, e = other[jn].p;
        for (auto [a, b] : {std::pair{ip, i}, std::pair{i, in}}) {
          if (rr == r && (j == a || j == b || jn == a || jn == b)) continue;
          if (segments_intersect(ring[a].p, ring[b].p, c, e)) return false;
        }
      }
    }
    return true;
  }

  void step(Curve& curve) {
    for (std::size_t r = 0; r < curve.rings.size(); ++r) {
      auto& ring = curve.rings[r];
      const auto n = ring.size();
      if (n < 4) continue;
      for (std::size_t i = 0; i < n; ++i) {
        CurvePoint old = ring[i];
        if (old.anchor == Anchor::kFixed) continue;
        Point prev = ring[(i + n - 1) % n].p;
        Point next = ring[(i + 1) % n].p;
        Point move = ((prev + next) * 0.5 - old.p) * options.rate;
        double limit = 0.5 * delta;
        if (norm(move) > limit) move = move * (limit / norm(move));

        for (int attempt = 0; attempt < 4; ++attempt, move = move * 0.5) {
          CurvePoint cand = old;
          if (old.anchor == Anchor::kEdge) {
            auto [a, b] = d.layout.scaffold_edges[old.index];
            Point pa = vertex(a), pb = vertex(b);
            Point ab = pb - pa;
            double t = dot(old.p + move - pa, ab) / dot(ab, ab);
            double f = usable_fraction(d.layout, old.index);
            cand.t = std::clamp(t, 0.2 * f, 0.8 * f);
            cand.p = lerp(pa, pb, cand.t);
          } else {
            cand.p = old.p + move;
          }
          if (!anchor_ok(old, cand)) continue;
          ring[i] = cand;
          if (keeps_simple(curve, r, i)) break;
          ring[i] = old;
        }
      }
    }
  }
};

}  // namespace

Diagram smooth_curves(Diagram diagram, const SmoothOptions& options) {
  auto before = classification_matrix(diagram);
  Smoother smoother{diagram, options, 0.0, {}};
  smoother.prepare();
  for (int it = 0; it < options.iterations; ++it)
    for (auto& curve : diagram.curves) smoother.step(curve);
  if (classification_matrix(diagram) != before)
    throw Error("smoothing changed the zone classification");
  return diagram;
}

std::vector<std::vector<bool>> classification_matrix(const Diagram& diagram) {
  std::vector<std::vector<bool>> out;
  for (const auto& curve : diagram.curves) {
    auto polys = curve.polygons();
    std::vector<bool> row;
    for (const auto& p : diagram.layout.positions) row.push_back(point_in_rings(p, polys));
    out.push_back(std::move(row));
  }
  return out;
}

bool curve_is_simple(const Curve& curve) {
  auto polys = curve.polygons();
  for (const auto& p : polys)
    if (!ring_is_simple(p)) return false;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      for (std::size_t a = 0; a < polys[i].size(); ++a)
        for (std::size_t b = 0; b < polys[j].size(); ++b)
          if (segments_intersect(polys[i][a], polys[i][(a + 1) % polys[i].size()], polys[j][b],
                                 polys[j][(b + 1) % polys[j].size()]))
            return false;
  return true;
}

double curve_length(const Curve& curve) {
  double total = 0.0;
  for (const auto& p : curve.polygons()) total += perimeter(p);
  return total;
}

}  // namespace eulermerge
