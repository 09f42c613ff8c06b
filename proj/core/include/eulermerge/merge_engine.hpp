#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eulermerge/dual_graph.hpp"
#include "eulermerge/set_system.hpp"

namespace eulermerge {

enum class MergeReason { kPlanarity, kConcurrency, kGenus };

std::string_view to_string(MergeReason reason);

struct MergeStep {
  std::string kept;
  std::string absorbed;
  MergeReason reason = MergeReason::kPlanarity;
  std::size_t concurrency_before = 0;
  std::size_t concurrency_after = 0;
  std::size_t zones_before = 0;  // all zones, including the outer one
  std::size_t zones_after = 0;

  friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

// Ordered audit trail of the set merges applied by the pipeline.
struct MergeLog {
  std::vector<MergeStep> steps;

  std::size_t count(MergeReason reason) const;
  std::size_t size() const noexcept { return steps.size(); }
  void append(const MergeLog& other);

  friend bool operator==(const MergeLog&, const MergeLog&) = default;
};

std::string to_json(const MergeLog& log, int indent = 2);
// One step per line: index, reason, kept <- absorbed, concurrency and zone deltas.
std::string to_table(const MergeLog& log);

struct MergeResult {
  DualGraph graph;
  MergeLog log;
};

// Merges set `l2` into `l1` on the graph level (the label kept is the
// lexicographically smaller one): rewrites labels, then collapses zones
// that became identical. Throws ContractViolation for l1 == l2 and
// UnknownLabel for inactive labels.
DualGraph pairwise_set_merge(const DualGraph& graph, std::string_view l1, std::string_view l2);

// Greedy merges of label pairs drawn from a Kuratowski subgraph until the
// graph is planar. Each step applies the candidate pair with the smallest
// resulting concurrency.
MergeResult nonplanar_to_planar(DualGraph graph);

// Greedy merges over all active label pairs until concurrency is zero;
// re-planarizes if a merge ever breaks planarity.
MergeResult concurrency_removal(DualGraph graph);

struct EulerMergeOptions {
  bool genus_removal = false;
};

// Initial dual graph, then planarity merges, then concurrency merges (and
// optionally genus merges). The log concatenates the phases.
MergeResult euler_merge(const SetSystem& system, const EulerMergeOptions& options = {});

// Genus separation of one set: delete the zones containing `label`; if the
// rest falls into several components, sum (min symmetric-difference distance
// - 1) along a minimum spanning tree over the components.
std::size_t genus_separation(const DualGraph& graph, std::string_view label);
// Sum over all active labels.
std::size_t genus_separation(const DualGraph& graph);

// Greedy merges minimizing the diagram genus separation until it is zero.
// Planar, concurrency-free candidates are preferred; if the chosen merge
// breaks either property the graph is repaired and the repair merges are
// logged with the genus reason.
MergeResult genus_removal(DualGraph graph);

}  // namespace eulermerge
