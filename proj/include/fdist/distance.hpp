#pragma once

// Fuzzy-set-valued distances between numeric fuzzy sets.
//
// A cell operator maps one focal element of each input to the set of
// distances between their points. A strategy decides how joint mass is
// spread over the matrix of cells: independently (product), along the
// same-level diagonal, or along the reversed diagonal.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/fuzzy.hpp"
#include "fdist/interval.hpp"
#include "fdist/mass.hpp"
#include "fdist/slicing.hpp"

namespace fdist {

enum class Strategy { Product, Diagonal, AntiDiagonal };

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Product: return "product";
    case Strategy::Diagonal: return "diagonal";
    case Strategy::AntiDiagonal: return "antidiagonal";
  }
  return "?";
}

inline std::optional<Strategy> parse_strategy(std::string_view text) {
  if (text == "product") return Strategy::Product;
  if (text == "diagonal") return Strategy::Diagonal;
  if (text == "antidiagonal") return Strategy::AntiDiagonal;
  return std::nullopt;
}

// {y - x : x in a, y in b}; positive when b lies to the right of a.
template <Scalar T>
IntervalUnion<T> cell_directional(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Interval<T>> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) raw.push_back({q.lo - p.hi, q.hi - p.lo});
  return IntervalUnion<T>(std::move(raw));
}

// {|x - y| : x in a, y in b}: the directional set folded onto [0, inf).
template <Scalar T>
IntervalUnion<T> cell_nondirectional(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  IntervalUnion<T> signed_set = cell_directional(a, b);
  std::vector<Interval<T>> raw;
  for (const auto& p : signed_set.parts()) {
    if (!(p.lo < T(0))) {
      raw.push_back(p);
    } else if (!(T(0) < p.hi)) {
      raw.push_back({T(0) - p.hi, T(0) - p.lo});
    } else {
      T reach = p.hi < T(0) - p.lo ? T(0) - p.lo : p.hi;
      raw.push_back({T(0), reach});
    }
  }
  return IntervalUnion<T>(std::move(raw));
}

struct DirectionalCell {
  template <Scalar T>
  IntervalUnion<T> operator()(const IntervalUnion<T>& a, const IntervalUnion<T>& b) const {
    return cell_directional(a, b);
  }
};

struct NondirectionalCell {
  template <Scalar T>
  IntervalUnion<T> operator()(const IntervalUnion<T>& a, const IntervalUnion<T>& b) const {
    return cell_nondirectional(a, b);
  }
};

template <Scalar T>
struct DistanceResult {
  NumericMass<T> mass;
  NumericFuzzySet<T> fuzzy;

  explicit DistanceResult(NumericMass<T> m) : mass(std::move(m)), fuzzy(fuzzy_from_mass(mass)) {}
};

template <Scalar T, class Cell>
DistanceResult<T> assign_product(const NumericMass<T>& a, const NumericMass<T>& b, Cell cell) {
  std::vector<typename NumericMass<T>::Entry> entries;
  entries.reserve(a.size() * b.size());
  for (const auto& x : a.entries())
    for (const auto& y : b.entries()) entries.push_back({cell(x.focal, y.focal), x.mass * y.mass});
  return DistanceResult<T>(NumericMass<T>::make(std::move(entries)));
}

namespace detail {

template <Scalar T>
std::vector<T> merged_bounds(std::vector<T> bounds, const std::vector<T>& more) {
  bounds.insert(bounds.end(), more.begin(), more.end());
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end(), [](const T& x, const T& y) { return approx_eq(x, y); }),
               bounds.end());
  return bounds;
}

// Pairs slice k of `left` with slice partner(k) of `right`, weighted by the
// shared height; both must already be cut on matching levels.
template <Scalar T, class Cell, class Partner>
DistanceResult<T> assign_paired(const SlicedAssignment<T>& left, const SlicedAssignment<T>& right, Cell cell,
                                Partner partner) {
  if (left.size() != right.size()) throw InvariantViolation("aligned slice counts differ");
  const std::size_t n = left.size();
  std::vector<typename NumericMass<T>::Entry> entries;
  entries.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = left.slices()[k];
    const auto& t = right.slices()[partner(k, n)];
    if (!approx_eq(s.mass(), t.mass())) throw InvariantViolation("paired slices have different heights");
    entries.push_back({cell(s.focal, t.focal), s.mass()});
  }
  return DistanceResult<T>(NumericMass<T>::make(std::move(entries)));
}

}  // namespace detail

// Level band [l,h] of a meets the same band of b.
template <Scalar T, class Cell>
DistanceResult<T> assign_diagonal(const SlicedAssignment<T>& a, const SlicedAssignment<T>& b, Cell cell) {
  auto [left, right] = align_levels(a, b);
  return detail::assign_paired(left, right, cell, [](std::size_t k, std::size_t) { return k; });
}

// Level band [l,h] of a meets band [1-h,1-l] of b.
template <Scalar T, class Cell>
DistanceResult<T> assign_antidiagonal(const SlicedAssignment<T>& a, const SlicedAssignment<T>& b, Cell cell) {
  std::vector<T> mirrored;
  for (const T& x : b.boundaries()) mirrored.push_back(T(1) - x);
  std::vector<T> bounds = detail::merged_bounds(a.boundaries(), mirrored);
  std::vector<T> reflected;
  for (auto it = bounds.rbegin(); it != bounds.rend(); ++it) reflected.push_back(T(1) - *it);
  return detail::assign_paired(a.refine(bounds), b.refine(reflected), cell,
                               [](std::size_t k, std::size_t n) { return n - 1 - k; });
}

// Any of the three numeric fuzzy-set representations.
template <Scalar T>
using FuzzyInput = std::variant<PiecewiseShape<T>, NumericMass<T>, SlicedAssignment<T>>;

inline constexpr std::size_t kDefaultSlices = 100;

template <Scalar T>
SlicedAssignment<T> to_sliced(const FuzzyInput<T>& input, std::size_t slices = kDefaultSlices) {
  struct Visitor {
    std::size_t slices;
    SlicedAssignment<T> operator()(const PiecewiseShape<T>& s) const { return slice_shape(s, slices); }
    SlicedAssignment<T> operator()(const NumericMass<T>& m) const { return slices_from_mass(m); }
    SlicedAssignment<T> operator()(const SlicedAssignment<T>& s) const { return s; }
  };
  return std::visit(Visitor{slices}, input);
}

template <Scalar T>
NumericMass<T> to_mass(const FuzzyInput<T>& input, std::size_t slices = kDefaultSlices) {
  if (const auto* m = std::get_if<NumericMass<T>>(&input)) return *m;
  return to_sliced(input, slices).to_mass();
}

template <Scalar T>
bool is_normal(const FuzzyInput<T>& input) {
  if (const auto* s = std::get_if<PiecewiseShape<T>>(&input)) return s->height() == T(1);
  return to_mass(input).is_normal();
}

// Product when either input carries empty-set mass, diagonal otherwise.
template <Scalar T>
Strategy default_strategy(const FuzzyInput<T>& a, const FuzzyInput<T>& b) {
  return is_normal(a) && is_normal(b) ? Strategy::Diagonal : Strategy::Product;
}

struct DistanceOptions {
  bool directional = false;
  Strategy strategy = Strategy::Diagonal;
  std::size_t slices = kDefaultSlices;
};

template <Scalar T>
DistanceResult<T> distance(const FuzzyInput<T>& a, const FuzzyInput<T>& b, const DistanceOptions& options) {
  auto run = [&](auto cell) {
    switch (options.strategy) {
      case Strategy::Product:
        return assign_product(to_mass(a, options.slices), to_mass(b, options.slices), cell);
      case Strategy::Diagonal:
        return assign_diagonal(to_sliced(a, options.slices), to_sliced(b, options.slices), cell);
      case Strategy::AntiDiagonal:
        return assign_antidiagonal(to_sliced(a, options.slices), to_sliced(b, options.slices), cell);
    }
    throw InvalidInput("unknown strategy");
  };
  return options.directional ? run(DirectionalCell{}) : run(NondirectionalCell{});
}

}  // namespace fdist
