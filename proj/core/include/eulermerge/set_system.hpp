#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eulermerge/label_set.hpp"

namespace eulermerge {

using ElementSet = std::set<std::string, std::less<>>;
using SetMap = std::map<std::string, ElementSet, std::less<>>;

// A labeled family of nonempty element sets. Immutable once built; every
// constructor path validates that sets are nonempty and labels unique.
class SetSystem {
 public:
  // Throws ParseError on an empty family or an empty set. `names` optionally
  // maps labels to display names (e.g. movie titles); unknown labels in it
  // are rejected.
  static SetSystem from_sets(SetMap sets,
                             std::map<std::string, std::string, std::less<>> names = {});

  const SetMap& sets() const noexcept { return sets_; }
  const ElementSet& universe() const noexcept { return universe_; }
  // Labels in label order (lexicographic).
  std::vector<std::string> labels() const;
  std::size_t size() const noexcept { return sets_.size(); }

  bool has_label(std::string_view label) const;
  // Throws UnknownLabel.
  const ElementSet& elements(std::string_view label) const;

  // Display name for a label; the label itself when none was given.
  std::string display_name(std::string_view label) const;
  const std::map<std::string, std::string, std::less<>>& names() const noexcept { return names_; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  SetSystem() = default;

  SetMap sets_;
  ElementSet universe_;
  std::map<std::string, std::string, std::less<>> names_;
};

enum class InputFormat { kAuto, kLines, kStructured };

// Line format: one set per line, `label: elem1, elem2, ...`; `#` starts a
// comment; an optional `label = Display Name` line names a set.
// Structured format: {"sets": [{"label": ..., "elements": [...], "name": ...}]}.
SetSystem parse_set_system(std::string_view document, InputFormat format = InputFormat::kAuto);
SetSystem load_set_system(const std::filesystem::path& path,
                          InputFormat format = InputFormat::kAuto);

std::string to_lines(const SetSystem& system);
std::string to_structured(const SetSystem& system);

// Labels of the sets containing `element`. Throws UnknownElement.
LabelSet cover(const SetSystem& system, std::string_view element);

struct Zone {
  LabelSet label;
  ElementSet elements;  // empty exactly for the outer zone

  friend bool operator==(const Zone&, const Zone&) = default;
};

// Zones sorted by LabelSet::key(); the outer zone (empty label) comes first.
struct AbstractDescription {
  std::vector<Zone> zones;

  std::vector<LabelSet> labels() const;
  std::size_t nonempty_zone_count() const { return zones.empty() ? 0 : zones.size() - 1; }
};

AbstractDescription abstract_description(const SetSystem& system);

// Replaces sets l1 and l2 by their union, kept under the lexicographically
// smaller label. Throws ContractViolation if l1 == l2, UnknownLabel otherwise.
SetSystem merge_sets_in_system(const SetSystem& system, std::string_view l1, std::string_view l2);

}  // namespace eulermerge
