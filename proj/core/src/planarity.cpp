#include "eulermerge/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "eulermerge/error.hpp"

namespace eulermerge {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph make_boost_graph(std::size_t n, const std::vector<ZonePair>& edges) {
  BoostGraph g(n);
  int index = 0;
  for (auto [a, b] : edges) {
    auto [e, added] = boost::add_edge(a, b, g);
    (void)added;
    boost::put(boost::edge_index, g, e, index++);
  }
  return g;
}

}  // namespace

std::vector<std::vector<std::size_t>> RotationSystem::faces() const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;
  for (std::size_t v = 0; v < order.size(); ++v)
    for (std::size_t i = 0; i < order[v].size(); ++i) position[{v, order[v][i]}] = i;

  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t u = 0; u < order.size(); ++u) {
    for (auto v : order[u]) {
      if (used.contains({u, v})) continue;
      std::vector<std::size_t> face;
      std::size_t a = u;
      std::size_t b = v;
      while (used.emplace(a, b).second) {
        face.push_back(a);
        const auto& rot = order[b];
        auto next = rot[(position.at({b, a}) + 1) % rot.size()];
        a = b;
        b = next;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

PlanarityResult test_planarity(std::size_t vertex_count, const std::vector<ZonePair>& edges) {
  auto g = make_boost_graph(vertex_count, edges);
  using Embedding = std::vector<std::vector<BoostEdge>>;
  Embedding embedding(vertex_count);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, g)));

  PlanarityResult result;
  result.planar = planar;
  if (planar) {
    RotationSystem rot;
    rot.order.resize(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      for (const auto& e : embedding[v]) {
        auto s = boost::source(e, g);
        auto t = boost::target(e, g);
        rot.order[v].push_back(s == v ? t : s);
      }
    }
    result.embedding = std::move(rot);
  }
  return result;
}

PlanarityResult is_planar(const DualGraph& graph) {
  return test_planarity(graph.zone_count(), graph.edge_pairs());
}

std::vector<std::size_t> minimal_nonplanar_edges(std::size_t vertex_count,
                                                 const std::vector<ZonePair>& edges) {
  if (test_planarity(vertex_count, edges).planar)
    throw ContractViolation("Kuratowski subgraph requested for a planar graph");

  std::vector<bool> kept(edges.size(), true);
  auto current = [&] {
    std::vector<ZonePair> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (kept[i]) out.push_back(edges[i]);
    return out;
  };
  // One pass suffices: an edge that was needed while its superset was still
  // present stays needed in every nonplanar subgraph of that superset.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    kept[i] = false;
    if (test_planarity(vertex_count, current()).planar) kept[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (kept[i]) out.push_back(i);
  return out;
}

KuratowskiSubgraph kuratowski_subdivision(const DualGraph& graph) {
  KuratowskiSubgraph k;
  k.edges = minimal_nonplanar_edges(graph.zone_count(), graph.edge_pairs());
  std::set<std::size_t> vertices;
  for (auto ei : k.edges) {
    vertices.insert(graph.edges()[ei].a);
    vertices.insert(graph.edges()[ei].b);
  }
  k.vertices.assign(vertices.begin(), vertices.end());
  return k;
}

}  // namespace eulermerge
