#pragma once

// Mass assignments: probability mass spread over focal elements (sets)
// rather than points.

#include <algorithm>
#include <concepts>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/interval.hpp"
#include "fdist/labels.hpp"
#include "fdist/scalar.hpp"

namespace fdist {

// Anything with set semantics that can be listed canonically.
template <class F>
concept FocalElement = std::equality_comparable<F> && requires(const F& a, const F& b) {
  { a.empty() } -> std::convertible_to<bool>;
  { is_subset(a, b) } -> std::convertible_to<bool>;
  { intersects(a, b) } -> std::convertible_to<bool>;
  { canonical_less(a, b) } -> std::convertible_to<bool>;
};

template <FocalElement Focal, Scalar T>
class MassAssignment {
 public:
  using focal_type = Focal;
  using scalar_type = T;

  struct Entry {
    Focal focal;
    T mass;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.focal == b.focal && approx_eq(a.mass, b.mass);
    }
  };

  // Merges equal focal elements, drops zero masses and sorts canonically.
  // Throws InvalidInput on a negative mass or when the total is not one.
  // Entries for the same focal element are summed before the sign check.
  static MassAssignment make(std::vector<Entry> entries) {
    MassAssignment m;
    m.entries_ = canonicalize(std::move(entries));
    for (const auto& e : m.entries_) {
      if (e.mass < T(0)) {
        std::ostringstream msg;
        msg << "negative mass " << e.mass << " on focal element " << e.focal;
        throw InvalidInput(msg.str());
      }
    }
    T total(0);
    for (const auto& e : m.entries_) total += e.mass;
    if (!sums_to_one(total)) {
      std::ostringstream msg;
      msg << "masses sum to " << total << ", expected 1";
      throw InvalidInput(msg.str());
    }
    return m;
  }

  static MassAssignment make(std::initializer_list<Entry> entries) { return make(std::vector<Entry>(entries)); }

  // All mass on a single focal element.
  static MassAssignment certain(Focal focal) { return make({Entry{std::move(focal), T(1)}}); }

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  T mass_of(const Focal& f) const {
    for (const auto& e : entries_)
      if (e.focal == f) return e.mass;
    return T(0);
  }

  T empty_mass() const { return mass_of(Focal{}); }
  bool is_normal() const { return approx_zero(empty_mass()); }

  T total() const {
    T sum(0);
    for (const auto& e : entries_) sum += e.mass;
    return sum;
  }

  friend bool operator==(const MassAssignment& a, const MassAssignment& b) { return a.entries_ == b.entries_; }

  friend std::ostream& operator<<(std::ostream& os, const MassAssignment& m) {
    for (std::size_t i = 0; i < m.entries_.size(); ++i) {
      if (i) os << ", ";
      os << m.entries_[i].focal << ':' << m.entries_[i].mass;
    }
    return os;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  static std::vector<Entry> canonicalize(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return canonical_less(a.focal, b.focal); });
    std::vector<Entry> out;
    for (auto& e : entries) {
      if (!out.empty() && out.back().focal == e.focal) {
        out.back().mass += e.mass;
      } else {
        out.push_back(std::move(e));
      }
    }
    std::erase_if(out, [](const Entry& e) { return approx_zero(e.mass); });
    return out;
  }

  std::vector<Entry> entries_;
};

template <Scalar T>
using NumericMass = MassAssignment<IntervalUnion<T>, T>;

template <Scalar T>
using LabelMass = MassAssignment<LabelSet, T>;

// Membership grades over named elements.
template <Scalar T>
class DiscreteFuzzySet {
 public:
  DiscreteFuzzySet() = default;
  explicit DiscreteFuzzySet(std::map<std::string, T> grades) : grades_(std::move(grades)) {
    for (const auto& [label, grade] : grades_) {
      if (grade < T(0) || T(1) < grade) {
        std::ostringstream msg;
        msg << "grade " << grade << " of element '" << label << "' outside [0,1]";
        throw InvalidInput(msg.str());
      }
    }
  }
  DiscreteFuzzySet(std::initializer_list<std::pair<const std::string, T>> grades)
      : DiscreteFuzzySet(std::map<std::string, T>(grades)) {}

  const std::map<std::string, T>& grades() const { return grades_; }

  T grade(const std::string& label) const {
    auto it = grades_.find(label);
    return it == grades_.end() ? T(0) : it->second;
  }

 private:
  std::map<std::string, T> grades_;
};

// Nested level sets in order of falling membership. The set of the i
// highest-graded elements receives mu(x_i) - mu(x_{i+1}); the empty set
// receives 1 - max grade. Equal grades form a single level set.
template <Scalar T>
LabelMass<T> mass_from_discrete(const DiscreteFuzzySet<T>& f) {
  std::vector<std::pair<std::string, T>> order(f.grades().begin(), f.grades().end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return b.second < a.second; });

  using Entry = typename LabelMass<T>::Entry;
  std::vector<Entry> entries;
  std::vector<std::string> level;
  for (std::size_t i = 0; i < order.size(); ++i) {
    level.push_back(order[i].first);
    bool last_of_tier = i + 1 == order.size() || order[i + 1].second < order[i].second;
    if (!last_of_tier) continue;
    T next = i + 1 == order.size() ? T(0) : order[i + 1].second;
    entries.push_back({LabelSet(level), order[i].second - next});
  }
  T top = order.empty() ? T(0) : order.front().second;
  entries.push_back({LabelSet{}, T(1) - top});
  return LabelMass<T>::make(std::move(entries));
}

}  // namespace fdist
