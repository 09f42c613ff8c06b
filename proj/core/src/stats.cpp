#include "eulermerge/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "eulermerge/error.hpp"

namespace eulermerge {
namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

StatsAggregate RunStats::aggregate() const {
  StatsAggregate a;
  a.instances = rows.size();
  if (rows.empty()) return a;
  for (const auto& r : rows) {
    a.mean_sets += static_cast<double>(r.n_sets);
    a.mean_zones += static_cast<double>(r.n_zones);
    a.mean_planarity += static_cast<double>(r.planarity_merges);
    a.mean_concurrency_merges += static_cast<double>(r.concurrency_merges);
    a.mean_genus_merges += static_cast<double>(r.genus_merges);
    a.mean_total += static_cast<double>(r.total_merges);
  }
  double n = static_cast<double>(rows.size());
  for (double* v : {&a.mean_sets, &a.mean_zones, &a.mean_planarity, &a.mean_concurrency_merges,
                    &a.mean_genus_merges, &a.mean_total})
    *v /= n;
  return a;
}

InstanceStats evaluate_instance(const std::string& name, const SetSystem& system,
                                const EulerMergeOptions& options) {
  InstanceStats s;
  s.name = name;
  s.n_sets = system.size();
  s.n_zones = abstract_description(system).nonempty_zone_count();
  auto result = euler_merge(system, options);
  s.planarity_merges = result.log.count(MergeReason::kPlanarity);
  s.concurrency_merges = result.log.count(MergeReason::kConcurrency);
  s.genus_merges = result.log.count(MergeReason::kGenus);
  s.total_merges = s.planarity_merges + s.concurrency_merges + s.genus_merges;
  s.final_concurrency = concurrency(result.graph);
  return s;
}

RunStats evaluate_collection(const std::filesystem::path& dir, InputFormat format,
                             const EulerMergeOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  RunStats stats;
  for (const auto& f : files) {
    auto name = f.filename().string();
    try {
      stats.rows.push_back(evaluate_instance(name, load_set_system(f, format), options));
    } catch (const std::exception& e) {
      stats.failures.push_back(name + ": " + e.what());
    }
  }
  return stats;
}

std::string to_csv(const RunStats& stats) {
  std::ostringstream out;
  out << "instance,n_sets,n_zones,planarity_merges,concurrency_merges,genus_merges,total_merges,"
         "final_concurrency\n";
  for (const auto& r : stats.rows)
    out << csv_field(r.name) << "," << r.n_sets << "," << r.n_zones << "," << r.planarity_merges
        << "," << r.concurrency_merges << "," << r.genus_merges << "," << r.total_merges << ","
        << r.final_concurrency << "\n";
  auto a = stats.aggregate();
  double final_concurrency = 0.0;
  for (const auto& r : stats.rows) final_concurrency += static_cast<double>(r.final_concurrency);
  if (!stats.rows.empty()) final_concurrency /= static_cast<double>(stats.rows.size());
  out << "mean," << fixed(a.mean_sets) << "," << fixed(a.mean_zones) << ","
      << fixed(a.mean_planarity) << "," << fixed(a.mean_concurrency_merges) << ","
      << fixed(a.mean_genus_merges) << "," << fixed(a.mean_total) << ","
      << fixed(final_concurrency) << "\n";
  return out.str();
}

}  // namespace eulermerge
