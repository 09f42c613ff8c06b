#include "eulermerge/layout.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <random>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "eulermerge/error.hpp"

namespace eulermerge {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
using Triangle = std::array<std::size_t, 3>;

ZonePair ordered(std::size_t a, std::size_t b) { return a < b ? ZonePair{a, b} : ZonePair{b, a}; }

void reindex_edges(BoostGraph& g) {
  int index = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it)
    boost::put(boost::edge_index, g, *it, index++);
}

// Re-runs Boyer-Myrvold so the embedding matches the current edge set.
void embed(BoostGraph& g, EmbeddingStorage& storage) {
  reindex_edges(g);
  storage.assign(boost::num_vertices(g), {});
  auto map = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = map))
    throw Error("planar augmentation produced a nonplanar graph");
}

// Neighbours of every vertex sorted counter-clockwise by angle.
template <typename Pos>
std::vector<std::vector<std::size_t>> geometric_rotation(std::size_t n,
                                                         const std::vector<ZonePair>& edges,
                                                         Pos pos) {
  std::vector<std::vector<std::size_t>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto angle = [&](std::size_t w) {
      Point d = pos(w) - pos(v);
      return std::atan2(d.y, d.x);
    };
    std::sort(rot[v].begin(), rot[v].end(),
              [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
  }
  return rot;
}

// Bounded faces of a straight-line triangulation, counter-clockwise, plus
// the outer face (also counter-clockwise).
struct Faces {
  std::vector<Triangle> inner;
  Triangle outer{};
};

template <typename Pos>
Faces triangle_faces(std::size_t n, const std::vector<ZonePair>& edges, Pos pos) {
  RotationSystem rs{geometric_rotation(n, edges, pos)};
  Faces out;
  bool found_outer = false;
  for (auto& face : rs.faces()) {
    if (face.size() != 3) throw Error("scaffold face is not a triangle");
    Triangle t{face[0], face[1], face[2]};
    // Walks keep their face on the right: bounded faces come out clockwise.
    if (orient(pos(t[0]), pos(t[1]), pos(t[2])) < 0.0) {
      out.inner.push_back({t[0], t[2], t[1]});
    } else {
      if (found_outer) throw Error("scaffold drawing has more than one outer face");
      found_outer = true;
      out.outer = t;
    }
  }
  if (!found_outer) throw Error("scaffold drawing has no outer face");
  std::sort(out.inner.begin(), out.inner.end());
  return out;
}

// Maximal planar supergraph of the dual graph (n >= 3) drawn on a grid.
// Returns the grid coordinates; fills `edges`.
std::vector<Point> grid_triangulation(const DualGraph& graph, std::vector<ZonePair>& edges) {
  const auto n = graph.zone_count();
  BoostGraph g(n);
  for (const auto& e : graph.edges()) boost::add_edge(e.a, e.b, g);
  EmbeddingStorage storage;
  auto map = [&] {
    return boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
  };
  reindex_edges(g);
  boost::make_connected(g);
  embed(g, storage);
  boost::make_biconnected_planar(g, map());
  embed(g, storage);
  boost::make_maximal_planar(g, map());
  embed(g, storage);

  std::vector<std::size_t> ordering;
  boost::planar_canonical_ordering(g, map(), std::back_inserter(ordering));
  struct Coord {
    std::size_t x = 0;
    std::size_t y = 0;
  };
  std::vector<Coord> coords(n);
  auto drawing =
      boost::make_iterator_property_map(coords.begin(), boost::get(boost::vertex_index, g));
  boost::chrobak_payne_straight_line_drawing(g, map(), ordering.begin(), ordering.end(), drawing);

  std::set<ZonePair> unique;
  for (auto [it, end] = boost::edges(g); it != end; ++it) {
    std::size_t a = boost::source(*it, g);
    std::size_t b = boost::target(*it, g);
    if (a != b) unique.insert(ordered(a, b));
  }
  if (unique.size() != 3 * n - 6) throw Error("planar augmentation did not produce a triangulation");
  edges.assign(unique.begin(), unique.end());

  std::vector<Point> pos(n);
  for (std::size_t v = 0; v < n; ++v)
    pos[v] = {static_cast<double>(coords[v].x), static_cast<double>(coords[v].y)};
  return pos;
}

// Frame on an equilateral triangle, every zone at the average of its
// scaffold neighbours (Gauss-Seidel until the largest update is negligible).
void tutte_embedding(Layout& layout) {
  const auto n = layout.zone_count();
  std::vector<std::vector<std::size_t>> adj(n + 3);
  for (auto [a, b] : layout.scaffold_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const double radius = 2.0 * std::sqrt(static_cast<double>(n + 3));
  for (int i = 0; i < 3; ++i) {
    double angle = M_PI / 2.0 + 2.0 * M_PI * i / 3.0;
    layout.frame[i] = Point{std::cos(angle), std::sin(angle)} * radius;
  }
  for (auto& p : layout.positions) p = {};
  for (int sweep = 0; sweep < 100000; ++sweep) {
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      Point sum{};
      for (auto w : adj[v]) sum = sum + layout.point(w);
      Point next = sum * (1.0 / static_cast<double>(adj[v].size()));
      change = std::max(change, distance(next, layout.positions[v]));
      layout.positions[v] = next;
    }
    if (change < 1e-13 * radius) break;
  }
}

// Positive if d lies inside the circumcircle of the counter-clockwise
// triangle abc.
double in_circle(Point a, Point b, Point c, Point d) {
  Point ad = a - d, bd = b - d, cd = c - d;
  return dot(ad, ad) * cross(bd, cd) - dot(bd, bd) * cross(ad, cd) + dot(cd, cd) * cross(ad, bd);
}

// Flips dummy scaffold edges towards a Delaunay triangulation. A flip only
// happens inside a strictly convex quadrilateral, so every triangle stays
// positively oriented; dual edges are never touched. Returns the number of
// flips.
std::size_t delaunay_flips(Layout& layout) {
  std::size_t flips = 0;
  const std::size_t limit = 4 * layout.scaffold_edges.size() + 16;
  std::vector<ZonePair> dual;
  for (std::size_t i = 0; i < layout.scaffold_edges.size(); ++i)
    if (layout.scaffold_is_dual[i]) dual.push_back(layout.scaffold_edges[i]);

  bool changed = true;
  while (changed && flips < limit) {
    changed = false;
    std::map<ZonePair, std::vector<Triangle>> sides;
    for (const auto& t : layout.triangles)
      for (int i = 0; i < 3; ++i)
        sides[ordered(t[i], t[(i + 1) % 3])].push_back({t[i], t[(i + 1) % 3], t[(i + 2) % 3]});
    for (std::size_t e = 0; e < layout.scaffold_edges.size(); ++e) {
      if (layout.scaffold_is_dual[e]) continue;
      const auto& tris = sides[layout.scaffold_edges[e]];
      if (tris.size() != 2) continue;
      auto [a, b, c] = tris[0];  // abc counter-clockwise
      std::size_t d = tris[1][2];
      Point pa = layout.point(a), pb = layout.point(b), pc = layout.point(c), pd = layout.point(d);
      if (orient(pc, pd, pa) * orient(pc, pd, pb) >= 0.0) continue;
      if (orient(pa, pb, pc) * orient(pa, pb, pd) >= 0.0) continue;
      double scale = dot(pa - pb, pa - pb);
      if (in_circle(pa, pb, pc, pd) <= 1e-9 * scale * scale) continue;
      ZonePair flipped = ordered(c, d);
      if (std::binary_search(layout.scaffold_edges.begin(), layout.scaffold_edges.end(), flipped))
        continue;

      layout.scaffold_edges[e] = flipped;
      std::sort(layout.scaffold_edges.begin(), layout.scaffold_edges.end());
      for (std::size_t i = 0; i < layout.scaffold_edges.size(); ++i)
        layout.scaffold_is_dual[i] =
            std::binary_search(dual.begin(), dual.end(), layout.scaffold_edges[i]);
      std::erase_if(layout.triangles, [&](const Triangle& t) {
        auto has = [&](std::size_t v) { return t[0] == v || t[1] == v || t[2] == v; };
        return has(a) && has(b) && (has(c) || has(d));
      });
      layout.triangles.push_back({c, a, d});
      layout.triangles.push_back({d, b, c});
      ++flips;
      changed = true;
      break;
    }
  }
  std::sort(layout.triangles.begin(), layout.triangles.end());
  return flips;
}

double mean_length(const std::vector<ZonePair>& edges, const Layout& layout) {
  if (edges.empty()) return 0.0;
  double total = 0.0;
  for (auto [a, b] : edges) total += distance(layout.point(a), layout.point(b));
  return total / static_cast<double>(edges.size());
}

// Triangles incident to every zone.
std::vector<std::vector<std::size_t>> incidence(const Layout& layout) {
  std::vector<std::vector<std::size_t>> inc(layout.zone_count());
  for (std::size_t t = 0; t < layout.triangles.size(); ++t)
    for (auto v : layout.triangles[t])
      if (!layout.is_frame(v)) inc[v].push_back(t);
  return inc;
}

}  // namespace

std::size_t Layout::scaffold_edge_index(std::size_t a, std::size_t b) const {
  ZonePair key = ordered(a, b);
  auto it = std::lower_bound(scaffold_edges.begin(), scaffold_edges.end(), key);
  if (it == scaffold_edges.end() || *it != key)
    throw ContractViolation("no scaffold edge between vertices " + std::to_string(a) + " and " +
                            std::to_string(b));
  return static_cast<std::size_t>(it - scaffold_edges.begin());
}

void update_faces(const DualGraph& graph, Layout& layout) {
  const auto n = graph.zone_count();
  layout.rotation.order =
      geometric_rotation(n, graph.edge_pairs(), [&](std::size_t v) { return layout.positions[v]; });
  layout.faces = layout.rotation.faces();
  layout.outer_face = layout.faces.size();
  if (layout.faces.empty()) return;

  // Restrict to the component of z0 when it has edges.
  const auto& order = layout.rotation.order;
  std::vector<bool> pick(n, false);
  if (!order[0].empty()) {
    std::vector<std::size_t> stack{0};
    pick[0] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : order[v])
        if (!pick[w]) pick[w] = true, stack.push_back(w);
    }
  } else {
    for (std::size_t v = 0; v < n; ++v) pick[v] = !order[v].empty();
  }

  // The leftmost picked vertex borders the unbounded region of its
  // component: it is the angular gap from the largest-angle neighbour round
  // to the smallest, i.e. to the right of the dart towards the
  // smallest-angle neighbour.
  std::size_t left = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!pick[v]) continue;
    const auto& p = layout.positions[v];
    if (left == n || p.x < layout.positions[left].x ||
        (p.x == layout.positions[left].x && p.y < layout.positions[left].y))
      left = v;
  }
  std::size_t w = layout.rotation.order[left].front();
  for (std::size_t f = 0; f < layout.faces.size(); ++f) {
    const auto& face = layout.faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (face[i] == left && face[(i + 1) % face.size()] == w) {
        layout.outer_face = f;
        return;
      }
    }
  }
}

Layout planar_layout(const DualGraph& graph) {
  if (!is_planar(graph).planar) throw ContractViolation("layout requires a planar dual graph");
  const auto n = graph.zone_count();
  if (n == 0) throw ContractViolation("layout requires at least the outer zone");
  Layout layout;
  layout.positions.resize(n);
  const std::size_t f0 = n, f1 = n + 1, f2 = n + 2;

  std::vector<ZonePair> edges;
  if (n >= 3) {
    // Triangulate and draw on a grid; the canonical ordering starts from the
    // outer zone, so it lands on the outer triangle of the grid drawing.
    // Then surround that triangle by the frame, each frame vertex pushed out
    // from one hull vertex.
    layout.positions = grid_triangulation(graph, edges);
    auto hull = triangle_faces(n, edges, [&](std::size_t v) { return layout.positions[v]; }).outer;
    Point c = (layout.positions[hull[0]] + layout.positions[hull[1]] + layout.positions[hull[2]]) *
              (1.0 / 3.0);
    for (std::size_t i = 0; i < 3; ++i) {
      layout.frame[i] = c + (layout.positions[hull[i]] - c) * 3.0;
      edges.push_back(ordered(n + i, n + (i + 1) % 3));
      edges.push_back(ordered(hull[i], n + i));
      edges.push_back(ordered(hull[i], n + (i + 1) % 3));
    }
  } else {
    layout.positions[0] = {-0.5, 0.0};
    layout.frame = {Point{0.0, 2.0}, Point{-2.0, -1.5}, Point{2.0, -1.5}};
    edges = {{0, f0}, {0, f1}, {0, f2}, {f0, f1}, {f1, f2}, {f0, f2}};
    if (n == 2) {
      layout.positions[1] = {0.5, 0.0};
      edges.insert(edges.end(), {{0, 1}, {1, f0}, {1, f2}});
    }
  }
  std::sort(edges.begin(), edges.end());
  layout.scaffold_edges = edges;
  layout.scaffold_is_dual.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    layout.scaffold_is_dual[i] =
        edges[i].second < n && graph.has_edge(edges[i].first, edges[i].second);

  auto faces = triangle_faces(n + 3, edges, [&](std::size_t v) { return layout.point(v); });
  std::set<std::size_t> outer(faces.outer.begin(), faces.outer.end());
  if (outer != std::set<std::size_t>{f0, f1, f2}) throw Error("frame is not the outer face");
  layout.triangles = std::move(faces.inner);

  // The grid drawing fixes the triangulation and its orientation; the
  // barycentric placement spreads the vertices far more evenly.
  auto grid = layout.positions;
  auto grid_frame = layout.frame;
  tutte_embedding(layout);
  if (!scaffold_valid(layout)) {
    layout.positions = grid;
    layout.frame = grid_frame;
  }

  double mean = graph.edge_count() > 0 ? mean_length(graph.edge_pairs(), layout)
                                       : mean_length(layout.scaffold_edges, layout);
  double scale = mean > 0.0 ? 1.0 / mean : 1.0;
  for (auto& p : layout.positions) p = p * scale;
  for (auto& p : layout.frame) p = p * scale;
  update_faces(graph, layout);
  return layout;
}

Layout refine_layout(const DualGraph& graph, Layout layout, const RefineOptions& options,
                     const LayoutObserver& observer) {
  const auto n = layout.zone_count();
  if (n != graph.zone_count()) throw ContractViolation("layout does not match the dual graph");
  if (options.iterations <= 0) return layout;
  auto& pos = layout.positions;
  const double k = options.ideal_edge_length;
  auto inc = incidence(layout);

  auto area2 = [&](std::size_t t) {
    const auto& tri = layout.triangles[t];
    return orient(layout.point(tri[0]), layout.point(tri[1]), layout.point(tri[2]));
  };
  const double min_area = 1e-6 * k * k;
  auto nearest = [&](std::size_t v) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < n; ++w)
      if (w != v) best = std::min(best, distance(pos[v], pos[w]));
    return best;
  };

  // Moves v by `step` if every incident triangle keeps a positive area (area
  // is affine in the moving vertex, so checking the endpoint covers the
  // whole segment) and v stays at least the current global minimum distance
  // from every other zone, so that minimum never decreases. Retries with
  // halved steps.
  double spacing = min_vertex_distance(layout);
  std::vector<double> before;
  auto try_move = [&](std::size_t v, Point step) {
    Point origin = pos[v];
    before.clear();
    for (auto t : inc[v]) before.push_back(area2(t));
    while (norm(step) >= options.min_step) {
      pos[v] = origin + step;
      bool ok = nearest(v) >= spacing;
      for (std::size_t i = 0; i < before.size() && ok; ++i)
        ok = area2(inc[v][i]) > std::min(min_area, 0.5 * before[i]);
      if (ok) {
        spacing = min_vertex_distance(layout);
        return true;
      }
      step = step * 0.5;
    }
    pos[v] = origin;
    return false;
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  if (options.jitter > 0.0)
    for (std::size_t v = 0; v < n; ++v)
      try_move(v, Point{unit(rng), unit(rng)} * (options.jitter * k));

  const auto adj = graph.adjacency();
  const auto& dual_edges = graph.edges();
  const double t0 = 0.2 * k;
  const double t1 = 0.01 * k;
  const double reach = 0.5 * k;
  for (int it = 0; it < options.iterations; ++it) {
    if (delaunay_flips(layout) > 0) inc = incidence(layout);
    double temperature =
        t0 + (t1 - t0) * static_cast<double>(it) / std::max(1, options.iterations - 1);
    Point center{};
    for (const auto& p : pos) center = center + p;
    center = center * (1.0 / static_cast<double>(n));

    for (std::size_t v = 0; v < n; ++v) {
      Point force{};
      for (std::size_t w = 0; w < n; ++w) {
        if (w == v) continue;
        Point d = pos[v] - pos[w];
        double dist = std::max(norm(d), 1e-9);
        force = force + d * (k * k / (dist * dist));
      }
      for (auto w : adj[v]) {
        Point d = pos[w] - pos[v];
        force = force + d * (norm(d) / k);
      }
      // Vertex-edge repulsion keeps vertices off nearby dual edges.
      for (const auto& e : dual_edges) {
        if (e.a == v || e.b == v) continue;
        Point ab = pos[e.b] - pos[e.a];
        double t = std::clamp(dot(pos[v] - pos[e.a], ab) / dot(ab, ab), 0.0, 1.0);
        Point d = pos[v] - (pos[e.a] + ab * t);
        double dist = std::max(norm(d), 1e-9);
        if (dist < reach) force = force + d * ((reach - dist) * (reach - dist) / (dist * dist));
      }
      force = force + (center - pos[v]) * (options.gravity * static_cast<double>(n));
      double mag = norm(force);
      if (mag < 1e-12) continue;
      try_move(v, force * (std::min(mag, temperature) / mag));
    }
    if (observer) observer(it, layout);
  }
  update_faces(graph, layout);
  return layout;
}

bool scaffold_valid(const Layout& layout) {
  return std::all_of(layout.triangles.begin(), layout.triangles.end(), [&](const Triangle& t) {
    return orient(layout.point(t[0]), layout.point(t[1]), layout.point(t[2])) > 0.0;
  });
}

std::size_t count_edge_crossings(const DualGraph& graph, const Layout& layout) {
  const auto& pos = layout.positions;
  const auto& edges = graph.edges();
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
      if (segments_intersect(pos[e.a], pos[e.b], pos[f.a], pos[f.b])) ++count;
    }
  return count;
}

std::size_t count_scaffold_crossings(const Layout& layout) {
  const auto& edges = layout.scaffold_edges;
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_intersect(layout.point(a), layout.point(b), layout.point(c), layout.point(d)))
        ++count;
    }
  return count;
}

double min_vertex_distance(const Layout& layout) {
  double best = std::numeric_limits<double>::infinity();
  const auto& pos = layout.positions;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) best = std::min(best, distance(pos[i], pos[j]));
  return best;
}

double min_dual_edge_length(const DualGraph& graph, const Layout& layout) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : graph.edges())
    best = std::min(best, distance(layout.positions[e.a], layout.positions[e.b]));
  return best;
}

}  // namespace eulermerge
