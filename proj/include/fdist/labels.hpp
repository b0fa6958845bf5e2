#pragma once

// Finite sets of element labels, the focal elements of discrete fuzzy sets.

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fdist {

class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<std::string> labels) : LabelSet(std::vector<std::string>(labels)) {}
  explicit LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  }

  std::span<const std::string> labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool contains(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
  }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LabelSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.labels_.size(); ++i) os << (i ? "," : "") << s.labels_[i];
    return os << '}';
  }

 private:
  std::vector<std::string> labels_;
};

inline bool is_subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.labels().begin(), b.labels().end(), a.labels().begin(), a.labels().end());
}

inline bool intersects(const LabelSet& a, const LabelSet& b) {
  auto i = a.labels().begin();
  auto j = b.labels().begin();
  while (i != a.labels().end() && j != b.labels().end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// Smaller sets first, then lexicographic; the empty set last.
inline bool canonical_less(const LabelSet& a, const LabelSet& b) {
  if (a.empty() || b.empty()) return !a.empty() && b.empty();
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end());
}

}  // namespace fdist
