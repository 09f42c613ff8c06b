#include "eulermerge/label_set.hpp"

#include <algorithm>
#include <iterator>

namespace eulermerge {

LabelSet::LabelSet(std::initializer_list<std::string> labels)
    : LabelSet(std::vector<std::string>(labels)) {}

LabelSet::LabelSet(std::vector<std::string> labels) : items_(std::move(labels)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool LabelSet::contains(std::string_view label) const {
  return std::binary_search(items_.begin(), items_.end(), label);
}

void LabelSet::insert(std::string label) {
  auto it = std::lower_bound(items_.begin(), items_.end(), label);
  if (it == items_.end() || *it != label) items_.insert(it, std::move(label));
}

void LabelSet::erase(std::string_view label) {
  auto it = std::lower_bound(items_.begin(), items_.end(), label);
  if (it != items_.end() && *it == label) items_.erase(it);
}

std::string LabelSet::key() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ',';
    out += items_[i];
  }
  return out;
}

std::string LabelSet::compact() const {
  bool single = std::all_of(items_.begin(), items_.end(),
                            [](const std::string& s) { return s.size() == 1; });
  if (!single) return key();
  std::string out;
  for (const auto& s : items_) out += s;
  return out;
}

LabelSet LabelSet::replaced(std::string_view from, const std::string& to) const {
  if (!contains(from)) return *this;
  LabelSet out = *this;
  out.erase(from);
  out.insert(to);
  return out;
}

LabelSet symmetric_difference(const LabelSet& a, const LabelSet& b) {
  std::vector<std::string> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return LabelSet(std::move(out));
}

std::size_t symmetric_difference_size(const LabelSet& a, const LabelSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++n;
      ++i;
    } else if (*j < *i) {
      ++n;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return n + static_cast<std::size_t>(std::distance(i, a.end())) +
         static_cast<std::size_t>(std::distance(j, b.end()));
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LabelSet(std::move(out));
}

}  // namespace eulermerge
