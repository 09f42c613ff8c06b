#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulermerge/label_set.hpp"
#include "eulermerge/set_system.hpp"

namespace eulermerge {

// Undirected edge between zone indices a < b. `label` is always the
// symmetric difference of the endpoint zone labels.
struct DualEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  LabelSet label;

  friend bool operator==(const DualEdge&, const DualEdge&) = default;
};

using ZonePair = std::pair<std::size_t, std::size_t>;
using Provenance = std::map<std::string, LabelSet, std::less<>>;

// Labeled dual graph of an abstract description. Values are immutable
// snapshots: every mutating operation returns a new graph.
//
// Zones are kept sorted by LabelSet::key(), so the outer zone (empty label)
// is always index 0 and zone indices are a deterministic function of the
// zone labels. Edges are sorted by (a, b) and carry recomputed labels.
class DualGraph {
 public:
  DualGraph() = default;
  // Canonicalizes: sorts zones (stably), remaps and deduplicates edges, drops
  // self-loops, recomputes edge labels. Duplicate zone labels are allowed
  // here so the intermediate state of a set merge is representable;
  // check_invariants() reports them.
  DualGraph(std::vector<Zone> zones, const std::vector<ZonePair>& edges, Provenance provenance);

  const std::vector<Zone>& zones() const noexcept { return zones_; }
  const std::vector<DualEdge>& edges() const noexcept { return edges_; }
  std::size_t zone_count() const noexcept { return zones_.size(); }
  std::size_t nonempty_zone_count() const noexcept;
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const LabelSet& zone_label(std::size_t z) const { return zones_.at(z).label; }
  std::optional<std::size_t> find_zone(const LabelSet& label) const;
  bool has_edge(std::size_t a, std::size_t b) const;

  // Surviving set labels, in label order.
  LabelSet active_labels() const;
  bool is_active(std::string_view label) const;
  // Surviving label -> original labels it has absorbed (including itself).
  const Provenance& provenance() const noexcept { return provenance_; }

  std::vector<std::vector<std::size_t>> adjacency() const;
  std::vector<ZonePair> edge_pairs() const;

  DualGraph with_edge(std::size_t a, std::size_t b) const;
  DualGraph without_edge(std::size_t edge_index) const;
  // Rewrites `absorbed` to `kept` in every zone label and provenance. May
  // leave zones with identical labels; callers collapse them with
  // zone_merge().
  DualGraph with_label_replaced(std::string_view absorbed, const std::string& kept) const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  std::vector<Zone> zones_;
  std::vector<DualEdge> edges_;
  Provenance provenance_;
};

// Subgraph of the zones whose label contains one set label.
struct InducedView {
  std::string label;
  std::vector<std::size_t> vertices;     // zone indices, ascending
  std::vector<std::size_t> edge_indices;  // indices into graph.edges()

  // Connected components as sorted lists of zone indices, ordered by their
  // smallest member.
  std::vector<std::vector<std::size_t>> components(const DualGraph& graph) const;
};

// Throws UnknownLabel if `label` is not active.
InducedView induced_subgraph(const DualGraph& graph, std::string_view label);

// Zones and single-difference edges of the abstract description, then the
// connectivity repair: for every set in label order, connect() until its
// induced view is connected.
DualGraph initial_dual_graph(const SetSystem& system);

// Adds one edge between two zones in different components of `view` whose
// label symmetric difference is minimal; ties go to the lexicographically
// least (key(z_i), key(z_j)) pair with key(z_i) < key(z_j). Throws
// ContractViolation if the view is already connected.
DualGraph connect(const DualGraph& graph, const InducedView& view);

// Sum over edges of |edge label| - |E|.
std::size_t concurrency(const DualGraph& graph);

// Collapses two zones with identical labels into one (elements united,
// incident edges re-attached, loops and parallels dropped). Throws
// ContractViolation if z1 == z2 or the labels differ.
DualGraph zone_merge(const DualGraph& graph, std::size_t z1, std::size_t z2);

// Sum over active labels of (components of the induced view - 1).
std::size_t duplicated_label_count(const DualGraph& graph);

// Full rescan of the DualGraph invariants; returns one message per violation.
std::vector<std::string> check_invariants(const DualGraph& graph);

// {zones: [{label, elements}], edges: [{a, b, label}], provenance: {...}}
std::string to_json(const DualGraph& graph, int indent = 2);
DualGraph dual_graph_from_json(std::string_view document);

}  // namespace eulermerge
