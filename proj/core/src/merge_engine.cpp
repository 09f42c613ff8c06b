#include "eulermerge/merge_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "eulermerge/error.hpp"
#include "eulermerge/planarity.hpp"
#include "json.hpp"

namespace eulermerge {
namespace {

struct Candidate {
  std::string kept;
  std::string absorbed;
  DualGraph graph;
};

MergeStep make_step(const DualGraph& before, const Candidate& c, MergeReason reason) {
  return MergeStep{c.kept,           c.absorbed,          reason,
                   concurrency(before), concurrency(c.graph), before.zone_count(),
                   c.graph.zone_count()};
}

// Scans every unordered pair of `labels` (in label order, so the first pair
// reaching the minimum is the lexicographically least) and returns the merge
// minimizing `score`. Always returns a candidate when labels.size() >= 2.
template <typename Score>
std::optional<Candidate> best_merge(const DualGraph& graph, const std::vector<std::string>& labels,
                                    Score score) {
  std::optional<Candidate> best;
  std::optional<decltype(score(graph))> best_score;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      auto merged = pairwise_set_merge(graph, labels[i], labels[j]);
      auto s = score(merged);
      if (!best_score || s < *best_score) {
        best_score = s;
        best = Candidate{labels[i], labels[j], std::move(merged)};
      }
    }
  }
  return best;
}

std::size_t component_distance(const DualGraph& graph, const std::vector<std::size_t>& a,
                               const std::vector<std::size_t>& b) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto u : a)
    for (auto v : b)
      best = std::min(best, symmetric_difference_size(graph.zone_label(u), graph.zone_label(v)));
  return best;
}

}  // namespace

std::string_view to_string(MergeReason reason) {
  switch (reason) {
    case MergeReason::kPlanarity:
      return "planarity";
    case MergeReason::kConcurrency:
      return "concurrency";
    case MergeReason::kGenus:
      return "genus";
  }
  return "unknown";
}

std::size_t MergeLog::count(MergeReason reason) const {
  return static_cast<std::size_t>(std::count_if(
      steps.begin(), steps.end(), [&](const MergeStep& s) { return s.reason == reason; }));
}

void MergeLog::append(const MergeLog& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::string to_json(const MergeLog& log, int indent) {
  using nlohmann::ordered_json;
  ordered_json steps = ordered_json::array();
  for (const auto& s : log.steps) {
    ordered_json rec;
    rec["kept"] = s.kept;
    rec["absorbed"] = s.absorbed;
    rec["reason"] = std::string(to_string(s.reason));
    rec["concurrency_before"] = s.concurrency_before;
    rec["concurrency_after"] = s.concurrency_after;
    rec["zones_before"] = s.zones_before;
    rec["zones_after"] = s.zones_after;
    steps.push_back(std::move(rec));
  }
  ordered_json doc;
  doc["steps"] = std::move(steps);
  doc["planarity_merges"] = log.count(MergeReason::kPlanarity);
  doc["concurrency_merges"] = log.count(MergeReason::kConcurrency);
  doc["genus_merges"] = log.count(MergeReason::kGenus);
  return doc.dump(indent) + "\n";
}

std::string to_table(const MergeLog& log) {
  std::ostringstream out;
  out << "#  reason       kept <- absorbed   concurrency   zones\n";
  for (std::size_t i = 0; i < log.steps.size(); ++i) {
    const auto& s = log.steps[i];
    std::ostringstream pair;
    pair << s.kept << " <- " << s.absorbed;
    out << i + 1 << "  ";
    out.width(12);
    out << std::left << to_string(s.reason) << " ";
    out.width(18);
    out << pair.str() << " " << s.concurrency_before << " -> " << s.concurrency_after << "    "
        << s.zones_before << " -> " << s.zones_after << "\n";
  }
  return out.str();
}

DualGraph pairwise_set_merge(const DualGraph& graph, std::string_view l1, std::string_view l2) {
  if (l1 == l2) throw ContractViolation("cannot merge set '" + std::string(l1) + "' with itself");
  if (!graph.is_active(l1)) throw UnknownLabel(std::string(l1));
  if (!graph.is_active(l2)) throw UnknownLabel(std::string(l2));
  std::string kept(std::min(l1, l2));
  std::string_view absorbed = std::max(l1, l2);

  DualGraph merged = graph.with_label_replaced(absorbed, kept);
  // Zones are sorted by label, so identical labels are adjacent.
  for (std::size_t i = 1; i < merged.zone_count();) {
    if (merged.zones()[i - 1].label == merged.zones()[i].label)
      merged = zone_merge(merged, i - 1, i);
    else
      ++i;
  }
  return merged;
}

MergeResult nonplanar_to_planar(DualGraph graph) {
  MergeLog log;
  while (!is_planar(graph).planar) {
    auto kuratowski = kuratowski_subdivision(graph);
    LabelSet candidates;
    for (auto z : kuratowski.vertices)
      for (const auto& l : graph.zone_label(z)) candidates.insert(l);
    auto best = best_merge(graph, candidates.items(),
                           [](const DualGraph& g) { return concurrency(g); });
    if (!best) throw Error("Kuratowski subgraph spans fewer than two set labels");
    log.steps.push_back(make_step(graph, *best, MergeReason::kPlanarity));
    graph = std::move(best->graph);
  }
  return {std::move(graph), std::move(log)};
}

MergeResult concurrency_removal(DualGraph graph) {
  MergeLog log;
  while (true) {
    while (concurrency(graph) > 0) {
      // If nothing strictly reduces concurrency the best candidate is still
      // applied: the active label count drops, so the loop terminates.
      auto best = best_merge(graph, graph.active_labels().items(),
                             [](const DualGraph& g) { return concurrency(g); });
      if (!best) break;
      log.steps.push_back(make_step(graph, *best, MergeReason::kConcurrency));
      graph = std::move(best->graph);
    }
    if (is_planar(graph).planar) break;
    auto repaired = nonplanar_to_planar(std::move(graph));
    for (auto& s : repaired.log.steps) s.reason = MergeReason::kConcurrency;
    log.append(repaired.log);
    graph = std::move(repaired.graph);
  }
  return {std::move(graph), std::move(log)};
}

MergeResult euler_merge(const SetSystem& system, const EulerMergeOptions& options) {
  auto planar = nonplanar_to_planar(initial_dual_graph(system));
  auto clean = concurrency_removal(std::move(planar.graph));
  MergeResult out{std::move(clean.graph), std::move(planar.log)};
  out.log.append(clean.log);
  if (options.genus_removal) {
    auto genus = genus_removal(std::move(out.graph));
    out.graph = std::move(genus.graph);
    out.log.append(genus.log);
  }
  return out;
}

std::size_t genus_separation(const DualGraph& graph, std::string_view label) {
  if (!graph.is_active(label)) throw UnknownLabel(std::string(label));
  const auto n = graph.zone_count();
  std::vector<bool> removed(n, false);
  for (std::size_t z = 0; z < n; ++z) removed[z] = graph.zone_label(z).contains(label);

  // Components of the remainder, by BFS over the adjacency lists.
  auto adj = graph.adjacency();
  std::vector<std::size_t> comp(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (removed[s] || comp[s] != std::numeric_limits<std::size_t>::max()) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = comps.size() - 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (auto w : adj[v]) {
        if (removed[w] || comp[w] != std::numeric_limits<std::size_t>::max()) continue;
        comp[w] = comps.size() - 1;
        stack.push_back(w);
      }
    }
  }
  if (comps.size() < 2) return 0;

  // Prim's MST over the complete component graph.
  const auto k = comps.size();
  std::vector<std::vector<std::size_t>> dist(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      dist[i][j] = dist[j][i] = component_distance(graph, comps[i], comps[j]);

  std::vector<bool> in_tree(k, false);
  std::vector<std::size_t> key(k, std::numeric_limits<std::size_t>::max());
  key[0] = 0;
  std::size_t total = 0;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t u = k;
    for (std::size_t v = 0; v < k; ++v)
      if (!in_tree[v] && (u == k || key[v] < key[u])) u = v;
    in_tree[u] = true;
    if (step > 0) total += key[u] > 0 ? key[u] - 1 : 0;
    for (std::size_t v = 0; v < k; ++v)
      if (!in_tree[v]) key[v] = std::min(key[v], dist[u][v]);
  }
  return total;
}

std::size_t genus_separation(const DualGraph& graph) {
  std::size_t total = 0;
  for (const auto& label : graph.active_labels()) total += genus_separation(graph, label);
  return total;
}

MergeResult genus_removal(DualGraph graph) {
  MergeLog log;
  while (genus_separation(graph) > 0) {
    // Objective: (not wellformed, genus separation); lexicographic pair order
    // breaks remaining ties.
    auto best = best_merge(graph, graph.active_labels().items(), [](const DualGraph& g) {
      bool wellformed = concurrency(g) == 0 && is_planar(g).planar;
      return std::make_pair(!wellformed, genus_separation(g));
    });
    if (!best) break;
    log.steps.push_back(make_step(graph, *best, MergeReason::kGenus));
    graph = std::move(best->graph);

    if (!is_planar(graph).planar || concurrency(graph) > 0) {
      auto planar = nonplanar_to_planar(std::move(graph));
      auto clean = concurrency_removal(std::move(planar.graph));
      for (auto* part : {&planar.log, &clean.log})
        for (auto& s : part->steps) s.reason = MergeReason::kGenus;
      log.append(planar.log);
      log.append(clean.log);
      graph = std::move(clean.graph);
    }
  }
  return {std::move(graph), std::move(log)};
}

}  // namespace eulermerge
