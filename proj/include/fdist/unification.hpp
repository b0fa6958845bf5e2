#pragma once

// Semantic unification: the support a fuzzy claim receives from fuzzy
// evidence, as mass over the truth subsets {t}, {f}, {f,t} and the empty set.

#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fdist/detail/flow.hpp"
#include "fdist/mass.hpp"
#include "fdist/scalar.hpp"

namespace fdist {

enum class TruthLabel { True, False, Both, Unknown };

inline constexpr std::array<TruthLabel, 4> kTruthLabels{TruthLabel::True, TruthLabel::False, TruthLabel::Both,
                                                       TruthLabel::Unknown};

inline std::string to_string(TruthLabel label) {
  switch (label) {
    case TruthLabel::True: return "{t}";
    case TruthLabel::False: return "{f}";
    case TruthLabel::Both: return "{f,t}";
    case TruthLabel::Unknown: return "{}";
  }
  return "?";
}

template <Scalar T>
class TruthAssignment {
 public:
  TruthAssignment() = default;
  TruthAssignment(std::initializer_list<std::pair<TruthLabel, T>> masses) {
    for (const auto& [label, mass] : masses) masses_[index(label)] += mass;
  }

  T operator[](TruthLabel label) const { return masses_[index(label)]; }
  void add(TruthLabel label, const T& mass) { masses_[index(label)] += mass; }

  T total() const {
    T sum(0);
    for (const auto& m : masses_) sum += m;
    return sum;
  }

  friend bool operator==(const TruthAssignment& a, const TruthAssignment& b) {
    for (std::size_t i = 0; i < 4; ++i)
      if (!approx_eq(a.masses_[i], b.masses_[i])) return false;
    return true;
  }

  // Lists labels with non-zero mass, e.g. "{t}:0.67, {f,t}:0.23, {}:0.1".
  friend std::ostream& operator<<(std::ostream& os, const TruthAssignment& a) {
    bool first = true;
    for (TruthLabel label : {TruthLabel::True, TruthLabel::False, TruthLabel::Both, TruthLabel::Unknown}) {
      if (approx_zero(a[label])) continue;
      os << (first ? "" : ", ") << to_string(label) << ':' << a[label];
      first = false;
    }
    return os;
  }

 private:
  static std::size_t index(TruthLabel label) { return static_cast<std::size_t>(label); }
  std::array<T, 4> masses_{T(0), T(0), T(0), T(0)};
};

// Truth of claim focal `a` given evidence focal `g`. Empty evidence against a
// non-empty claim is unknown even though the empty set is a subset of
// everything.
template <FocalElement F>
TruthLabel truth_cell(const F& a, const F& g) {
  if (a.empty() && g.empty()) return TruthLabel::True;
  if (g.empty()) return TruthLabel::Unknown;
  if (!a.empty() && is_subset(g, a)) return TruthLabel::True;
  if (!a.empty() && !intersects(a, g)) return TruthLabel::False;
  return TruthLabel::Both;
}

// Independent routing: cell (i,j) carries a_i * g_j.
template <FocalElement F, Scalar T>
TruthAssignment<T> unify_product(const MassAssignment<F, T>& claim, const MassAssignment<F, T>& evidence) {
  TruthAssignment<T> out;
  for (const auto& a : claim.entries())
    for (const auto& g : evidence.entries()) out.add(truth_cell(a.focal, g.focal), a.mass * g.mass);
  return out;
}

// Priority order for maximal routing, highest first.
using TruthPriority = std::array<TruthLabel, 4>;
inline constexpr TruthPriority kDefaultTruthPriority{TruthLabel::Both, TruthLabel::True, TruthLabel::False,
                                                     TruthLabel::Unknown};

// Maximal routing: a transportation plan with row sums a_i and column sums
// g_j that lexicographically maximizes the mass on each label in `priority`
// order. Only the label totals are determined; ties between plans are not.
template <FocalElement F, Scalar T>
TruthAssignment<T> unify_maximal(const MassAssignment<F, T>& claim, const MassAssignment<F, T>& evidence,
                                 const TruthPriority& priority = kDefaultTruthPriority) {
  using Cost = detail::LexCost<4>;
  std::vector<T> supply, demand;
  for (const auto& a : claim.entries()) supply.push_back(a.mass);
  for (const auto& g : evidence.entries()) demand.push_back(g.mass);

  std::vector<std::vector<std::optional<Cost>>> cost(supply.size(), std::vector<std::optional<Cost>>(demand.size()));
  std::vector<std::vector<TruthLabel>> labels(supply.size(), std::vector<TruthLabel>(demand.size()));
  for (std::size_t i = 0; i < supply.size(); ++i) {
    for (std::size_t j = 0; j < demand.size(); ++j) {
      TruthLabel label = truth_cell(claim.entries()[i].focal, evidence.entries()[j].focal);
      labels[i][j] = label;
      Cost c;
      for (std::size_t rank = 0; rank < priority.size(); ++rank)
        if (priority[rank] == label) c.v[rank] = -1;
      cost[i][j] = c;
    }
  }

  auto plan = detail::transport<T, Cost>(supply, demand, cost);
  TruthAssignment<T> out;
  for (std::size_t i = 0; i < supply.size(); ++i)
    for (std::size_t j = 0; j < demand.size(); ++j) out.add(labels[i][j], plan[i][j]);
  return out;
}

}  // namespace fdist
