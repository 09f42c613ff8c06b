#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "eulermerge/merge_engine.hpp"
#include "eulermerge/set_system.hpp"

namespace eulermerge {

struct InstanceStats {
  std::string name;
  std::size_t n_sets = 0;
  std::size_t n_zones = 0;  // nonempty zones of the input
  std::size_t planarity_merges = 0;
  std::size_t concurrency_merges = 0;
  std::size_t genus_merges = 0;
  std::size_t total_merges = 0;
  std::size_t final_concurrency = 0;
};

struct StatsAggregate {
  std::size_t instances = 0;
  double mean_sets = 0.0;
  double mean_zones = 0.0;
  double mean_planarity = 0.0;
  double mean_concurrency_merges = 0.0;
  double mean_genus_merges = 0.0;
  double mean_total = 0.0;
};

struct RunStats {
  std::vector<InstanceStats> rows;    // sorted by name
  std::vector<std::string> failures;  // "<name>: <message>"

  StatsAggregate aggregate() const;
};

InstanceStats evaluate_instance(const std::string& name, const SetSystem& system,
                                const EulerMergeOptions& options = {});

// Runs every regular file of `dir` (sorted by file name). Files that fail to
// load or simplify are recorded in `failures` and skipped.
RunStats evaluate_collection(const std::filesystem::path& dir, InputFormat format = InputFormat::kAuto,
                             const EulerMergeOptions& options = {});

// One row per instance, then a `mean` row.
std::string to_csv(const RunStats& stats);

}  // namespace eulermerge
