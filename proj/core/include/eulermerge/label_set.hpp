#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eulermerge {

// An ordered set of set-labels. Used for zone labels, edge labels and
// provenance groups. Labels are kept sorted lexicographically, which is also
// the label order used for every tie-break in the library.
class LabelSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  LabelSet() = default;
  LabelSet(std::initializer_list<std::string> labels);
  explicit LabelSet(std::vector<std::string> labels);

  bool contains(std::string_view label) const;
  void insert(std::string label);
  void erase(std::string_view label);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const std::vector<std::string>& items() const noexcept { return items_; }

  // Comma-joined labels; "" for the empty set. Used as the canonical sort key
  // of zones.
  std::string key() const;
  // Compact display form: labels concatenated when every label is a single
  // character ("abdf"), comma-joined otherwise.
  std::string compact() const;

  // Replaces `from` by `to` if present (the label rewrite of a set merge).
  LabelSet replaced(std::string_view from, const std::string& to) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend bool operator<(const LabelSet& a, const LabelSet& b) { return a.items_ < b.items_; }

 private:
  std::vector<std::string> items_;
};

LabelSet symmetric_difference(const LabelSet& a, const LabelSet& b);
std::size_t symmetric_difference_size(const LabelSet& a, const LabelSet& b);
LabelSet set_union(const LabelSet& a, const LabelSet& b);

}  // namespace eulermerge
