#include "eulermerge/dual_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "eulermerge/error.hpp"
#include "json.hpp"

namespace eulermerge {
namespace {

// Union-find over zone indices.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DualGraph::DualGraph(std::vector<Zone> zones, const std::vector<ZonePair>& edges,
                     Provenance provenance)
    : provenance_(std::move(provenance)) {
  std::vector<std::size_t> order(zones.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys;
  keys.reserve(zones.size());
  for (const auto& z : zones) keys.push_back(z.label.key());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });

  std::vector<std::size_t> new_index(zones.size());
  zones_.reserve(zones.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    zones_.push_back(std::move(zones[order[i]]));
  }

  std::set<ZonePair> pairs;
  for (auto [a, b] : edges) {
    if (a >= new_index.size() || b >= new_index.size())
      throw ContractViolation("edge endpoint out of range");
    auto na = new_index[a];
    auto nb = new_index[b];
    if (na == nb) continue;
    pairs.emplace(std::min(na, nb), std::max(na, nb));
  }
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs)
    edges_.push_back(DualEdge{a, b, symmetric_difference(zones_[a].label, zones_[b].label)});
}

std::size_t DualGraph::nonempty_zone_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      zones_.begin(), zones_.end(), [](const Zone& z) { return !z.label.empty(); }));
}

std::optional<std::size_t> DualGraph::find_zone(const LabelSet& label) const {
  for (std::size_t i = 0; i < zones_.size(); ++i)
    if (zones_[i].label == label) return i;
  return std::nullopt;
}

bool DualGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), ZonePair{a, b},
                             [](const DualEdge& e, const ZonePair& p) {
                               return std::tie(e.a, e.b) < std::tie(p.first, p.second);
                             });
  return it != edges_.end() && it->a == a && it->b == b;
}

LabelSet DualGraph::active_labels() const {
  std::vector<std::string> labels;
  for (const auto& [label, _] : provenance_) labels.push_back(label);
  return LabelSet(std::move(labels));
}

bool DualGraph::is_active(std::string_view label) const {
  return provenance_.find(label) != provenance_.end();
}

std::vector<std::vector<std::size_t>> DualGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(zones_.size());
  for (const auto& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& n : adj) std::sort(n.begin(), n.end());
  return adj;
}

std::vector<ZonePair> DualGraph::edge_pairs() const {
  std::vector<ZonePair> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.a, e.b);
  return out;
}

DualGraph DualGraph::with_edge(std::size_t a, std::size_t b) const {
  if (a == b) throw ContractViolation("dual graph edges cannot be self-loops");
  if (a >= zones_.size() || b >= zones_.size()) throw ContractViolation("zone index out of range");
  auto pairs = edge_pairs();
  pairs.emplace_back(a, b);
  return DualGraph(zones_, pairs, provenance_);
}

DualGraph DualGraph::without_edge(std::size_t edge_index) const {
  if (edge_index >= edges_.size()) throw ContractViolation("edge index out of range");
  auto pairs = edge_pairs();
  pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return DualGraph(zones_, pairs, provenance_);
}

DualGraph DualGraph::with_label_replaced(std::string_view absorbed, const std::string& kept) const {
  auto zones = zones_;
  for (auto& z : zones) z.label = z.label.replaced(absorbed, kept);
  Provenance prov = provenance_;
  if (auto it = prov.find(absorbed); it != prov.end()) {
    LabelSet group = it->second;
    prov.erase(it);
    prov[kept] = set_union(prov[kept], group);
  }
  return DualGraph(std::move(zones), edge_pairs(), std::move(prov));
}

std::vector<std::vector<std::size_t>> InducedView::components(const DualGraph& graph) const {
  Components uf(graph.zone_count());
  for (auto ei : edge_indices) uf.unite(graph.edges()[ei].a, graph.edges()[ei].b);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (auto v : vertices) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

InducedView induced_subgraph(const DualGraph& graph, std::string_view label) {
  if (!graph.is_active(label)) throw UnknownLabel(std::string(label));
  InducedView view;
  view.label = std::string(label);
  std::vector<bool> inside(graph.zone_count(), false);
  for (std::size_t i = 0; i < graph.zone_count(); ++i) {
    if (graph.zones()[i].label.contains(label)) {
      inside[i] = true;
      view.vertices.push_back(i);
    }
  }
  for (std::size_t ei = 0; ei < graph.edge_count(); ++ei) {
    const auto& e = graph.edges()[ei];
    if (inside[e.a] && inside[e.b]) view.edge_indices.push_back(ei);
  }
  return view;
}

DualGraph connect(const DualGraph& graph, const InducedView& view) {
  auto comps = view.components(graph);
  if (comps.size() < 2)
    throw ContractViolation("connect needs a view with at least two components (label '" +
                            view.label + "')");
  std::vector<std::size_t> comp_of(graph.zone_count(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;

  const auto& zones = graph.zones();
  std::optional<std::tuple<std::size_t, std::string, std::string>> best;
  ZonePair best_pair{};
  for (std::size_t i = 0; i < view.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < view.vertices.size(); ++j) {
      auto u = view.vertices[i];
      auto v = view.vertices[j];
      if (comp_of[u] == comp_of[v]) continue;
      auto ku = zones[u].label.key();
      auto kv = zones[v].label.key();
      if (kv < ku) std::swap(ku, kv);
      std::tuple<std::size_t, std::string, std::string> score{
          symmetric_difference_size(zones[u].label, zones[v].label), std::move(ku), std::move(kv)};
      if (!best || score < *best) {
        best = std::move(score);
        best_pair = {u, v};
      }
    }
  }
  return graph.with_edge(best_pair.first, best_pair.second);
}

DualGraph initial_dual_graph(const SetSystem& system) {
  auto desc = abstract_description(system);
  std::vector<ZonePair> edges;
  for (std::size_t i = 0; i < desc.zones.size(); ++i)
    for (std::size_t j = i + 1; j < desc.zones.size(); ++j)
      if (symmetric_difference_size(desc.zones[i].label, desc.zones[j].label) == 1)
        edges.emplace_back(i, j);

  Provenance prov;
  for (const auto& label : system.labels()) prov.emplace(label, LabelSet{label});
  DualGraph graph(std::move(desc.zones), edges, std::move(prov));

  for (const auto& label : system.labels()) {
    auto view = induced_subgraph(graph, label);
    while (view.components(graph).size() > 1) {
      graph = connect(graph, view);
      view = induced_subgraph(graph, label);
    }
  }
  return graph;
}

std::size_t concurrency(const DualGraph& graph) {
  std::size_t total = 0;
  for (const auto& e : graph.edges()) total += e.label.size();
  // Every edge of a well-formed graph has a nonempty label, so this cannot
  // underflow; saturate anyway for intermediate graphs.
  return total >= graph.edge_count() ? total - graph.edge_count() : 0;
}

DualGraph zone_merge(const DualGraph& graph, std::size_t z1, std::size_t z2) {
  if (z1 >= graph.zone_count() || z2 >= graph.zone_count())
    throw ContractViolation("zone index out of range");
  if (z1 == z2) throw ContractViolation("cannot merge a zone with itself");
  if (!(graph.zones()[z1].label == graph.zones()[z2].label))
    throw ContractViolation("zone_merge requires identical labels, got '" +
                            graph.zones()[z1].label.key() + "' and '" +
                            graph.zones()[z2].label.key() + "'");
  auto keep = std::min(z1, z2);
  auto drop = std::max(z1, z2);

  std::vector<Zone> zones;
  zones.reserve(graph.zone_count() - 1);
  std::vector<std::size_t> remap(graph.zone_count());
  for (std::size_t i = 0; i < graph.zone_count(); ++i) {
    if (i == drop) continue;
    remap[i] = zones.size();
    zones.push_back(graph.zones()[i]);
  }
  remap[drop] = remap[keep];
  const auto& dropped = graph.zones()[drop].elements;
  zones[remap[keep]].elements.insert(dropped.begin(), dropped.end());

  std::vector<ZonePair> edges;
  edges.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) edges.emplace_back(remap[e.a], remap[e.b]);
  return DualGraph(std::move(zones), edges, graph.provenance());
}

std::size_t duplicated_label_count(const DualGraph& graph) {
  std::size_t total = 0;
  for (const auto& label : graph.active_labels()) {
    auto comps = induced_subgraph(graph, label).components(graph);
    if (comps.size() > 1) total += comps.size() - 1;
  }
  return total;
}

std::vector<std::string> check_invariants(const DualGraph& graph) {
  std::vector<std::string> out;
  const auto& zones = graph.zones();
  if (zones.empty() || !zones.front().label.empty()) out.push_back("outer zone missing");
  for (std::size_t i = 0; i < zones.size(); ++i) {
    if (zones[i].label.empty() && !zones[i].elements.empty())
      out.push_back("outer zone carries elements");
    if (!zones[i].label.empty() && zones[i].elements.empty())
      out.push_back("zone '" + zones[i].label.key() + "' has no elements");
    if (i > 0 && zones[i - 1].label == zones[i].label)
      out.push_back("duplicate zone label '" + zones[i].label.key() + "'");
    for (const auto& l : zones[i].label)
      if (!graph.is_active(l)) out.push_back("zone label uses inactive set '" + l + "'");
  }
  std::set<ZonePair> seen;
  for (const auto& e : graph.edges()) {
    if (e.a >= e.b) out.push_back("edge endpoints not canonical");
    if (!seen.emplace(e.a, e.b).second) out.push_back("parallel edge");
    if (e.a < zones.size() && e.b < zones.size()) {
      auto expected = symmetric_difference(zones[e.a].label, zones[e.b].label);
      if (!(e.label == expected))
        out.push_back("edge label law broken on {" + zones[e.a].label.key() + "}-{" +
                      zones[e.b].label.key() + "}");
      if (e.label.empty()) out.push_back("edge with empty label");
    }
  }
  for (const auto& label : graph.active_labels()) {
    bool used = std::any_of(zones.begin(), zones.end(),
                            [&](const Zone& z) { return z.label.contains(label); });
    if (!used) out.push_back("active label '" + label + "' appears in no zone");
  }
  return out;
}

std::string to_json(const DualGraph& graph, int indent) {
  using nlohmann::ordered_json;
  ordered_json zones = ordered_json::array();
  for (const auto& z : graph.zones()) {
    ordered_json rec;
    rec["label"] = z.label.items();
    rec["elements"] = std::vector<std::string>(z.elements.begin(), z.elements.end());
    zones.push_back(std::move(rec));
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : graph.edges()) {
    ordered_json rec;
    rec["a"] = e.a;
    rec["b"] = e.b;
    rec["label"] = e.label.items();
    edges.push_back(std::move(rec));
  }
  ordered_json prov = ordered_json::object();
  for (const auto& [label, group] : graph.provenance()) prov[label] = group.items();
  ordered_json doc;
  doc["zones"] = std::move(zones);
  doc["edges"] = std::move(edges);
  doc["provenance"] = std::move(prov);
  return doc.dump(indent) + "\n";
}

DualGraph dual_graph_from_json(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed dual graph document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("zones") || !j.contains("edges"))
    throw ParseError("dual graph document needs 'zones' and 'edges'");
  std::vector<Zone> zones;
  for (const auto& rec : j["zones"]) {
    Zone z;
    z.label = LabelSet(rec.at("label").get<std::vector<std::string>>());
    for (const auto& e : rec.at("elements")) z.elements.insert(e.get<std::string>());
    zones.push_back(std::move(z));
  }
  std::vector<ZonePair> edges;
  for (const auto& rec : j["edges"])
    edges.emplace_back(rec.at("a").get<std::size_t>(), rec.at("b").get<std::size_t>());
  Provenance prov;
  if (j.contains("provenance")) {
    for (const auto& [label, group] : j["provenance"].items())
      prov.emplace(label, LabelSet(group.get<std::vector<std::string>>()));
  } else {
    for (const auto& z : zones)
      for (const auto& l : z.label) prov.emplace(l, LabelSet{l});
  }
  return DualGraph(std::move(zones), edges, std::move(prov));
}

}  // namespace eulermerge
