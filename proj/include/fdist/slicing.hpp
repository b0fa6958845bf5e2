#pragma once

// Horizontal slicing of fuzzy sets along the membership axis.
//
// A SlicedAssignment is a mass assignment whose entries are stacked on
// membership levels: slice k covers the level range (level_lo, level_hi]
// and its height is its mass. Slices run from level 0 to level 1; the
// levels above a non-normal set's height belong to the empty set.

#include <algorithm>
#include <ostream>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/interval.hpp"
#include "fdist/mass.hpp"
#include "fdist/scalar.hpp"

namespace fdist {

// Piecewise-linear membership function through the given vertices, zero
// outside their span. Two consecutive vertices may share an x to describe a
// vertical edge, as in a crisp interval (1,0),(1,1),(2,1),(2,0).
template <Scalar T>
class PiecewiseShape {
 public:
  struct Vertex {
    T x;
    T mu;
  };

  explicit PiecewiseShape(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidInput("piecewise shape needs at least one vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& v = vertices_[i];
      if (v.mu < T(0) || T(1) < v.mu) {
        std::ostringstream msg;
        msg << "vertex " << i << " has membership " << v.mu << " outside [0,1]";
        throw InvalidInput(msg.str());
      }
      if (i > 0 && v.x < vertices_[i - 1].x) {
        std::ostringstream msg;
        msg << "vertex " << i << " has decreasing x";
        throw InvalidInput(msg.str());
      }
      if (i > 1 && v.x == vertices_[i - 1].x && v.x == vertices_[i - 2].x) {
        std::ostringstream msg;
        msg << "more than two vertices at x = " << v.x;
        throw InvalidInput(msg.str());
      }
    }
  }
  PiecewiseShape(std::initializer_list<Vertex> vertices) : PiecewiseShape(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }

  T height() const {
    T h(0);
    for (const auto& v : vertices_) h = h < v.mu ? v.mu : h;
    return h;
  }

  // Closure of the strict cut {x : mu(x) > level}.
  IntervalUnion<T> cut_above(const T& level) const {
    std::vector<Interval<T>> raw;
    for (const auto& v : vertices_)
      if (level < v.mu) raw.push_back({v.x, v.x});
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[i + 1];
      if (a.x == b.x) continue;  // vertical edge: covered by its vertices
      bool a_in = level < a.mu;
      bool b_in = level < b.mu;
      if (a_in && b_in) {
        raw.push_back({a.x, b.x});
      } else if (a_in) {
        raw.push_back({a.x, a.x + (a.mu - level) * (b.x - a.x) / (a.mu - b.mu)});
      } else if (b_in) {
        raw.push_back({b.x - (b.mu - level) * (b.x - a.x) / (b.mu - a.mu), b.x});
      }
    }
    return IntervalUnion<T>(std::move(raw));
  }

  T membership(const T& x) const {
    T best(0);
    auto consider = [&](const T& mu) { best = best < mu ? mu : best; };
    for (const auto& v : vertices_)
      if (v.x == x) consider(v.mu);
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[i + 1];
      if (a.x < x && x < b.x) consider(a.mu + (b.mu - a.mu) * (x - a.x) / (b.x - a.x));
    }
    return best;
  }

 private:
  std::vector<Vertex> vertices_;
};

template <Scalar T>
struct Slice {
  T level_lo;
  T level_hi;
  IntervalUnion<T> focal;

  T mass() const { return level_hi - level_lo; }

  friend bool operator==(const Slice& a, const Slice& b) {
    return approx_eq(a.level_lo, b.level_lo) && approx_eq(a.level_hi, b.level_hi) && a.focal == b.focal;
  }
};

template <Scalar T>
class SlicedAssignment {
 public:
  // Slices must tile [0,1] bottom-up with positive heights.
  explicit SlicedAssignment(std::vector<Slice<T>> slices) : slices_(std::move(slices)) {
    if (slices_.empty()) throw InvalidInput("sliced assignment needs at least one slice");
    T expected(0);
    for (const auto& s : slices_) {
      if (!approx_eq(s.level_lo, expected)) throw InvalidInput("slices do not tile the membership axis");
      if (!(s.level_lo < s.level_hi)) throw InvalidInput("slice with non-positive height");
      expected = s.level_hi;
    }
    if (!sums_to_one(expected)) throw InvalidInput("slices do not reach membership level 1");
  }

  std::span<const Slice<T>> slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }

  std::vector<T> boundaries() const {
    std::vector<T> out{slices_.front().level_lo};
    for (const auto& s : slices_) out.push_back(s.level_hi);
    return out;
  }

  // Splits slices at every boundary strictly inside them.
  SlicedAssignment refine(std::span<const T> bounds) const {
    std::vector<Slice<T>> out;
    for (const auto& s : slices_) {
      T lo = s.level_lo;
      for (const auto& b : bounds) {
        if (approx_lt(lo, b) && approx_lt(b, s.level_hi)) {
          out.push_back({lo, b, s.focal});
          lo = b;
        }
      }
      out.push_back({lo, s.level_hi, s.focal});
    }
    return SlicedAssignment(std::move(out));
  }

  NumericMass<T> to_mass() const {
    std::vector<typename NumericMass<T>::Entry> entries;
    entries.reserve(slices_.size());
    for (const auto& s : slices_) entries.push_back({s.focal, s.mass()});
    return NumericMass<T>::make(std::move(entries));
  }

  bool is_normal() const { return to_mass().is_normal(); }

  friend bool operator==(const SlicedAssignment&, const SlicedAssignment&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SlicedAssignment& s) {
    for (std::size_t i = 0; i < s.slices_.size(); ++i) {
      if (i) os << ", ";
      os << s.slices_[i].focal << ':' << s.slices_[i].mass();
    }
    return os;
  }

 private:
  std::vector<Slice<T>> slices_;
};

// n slices of equal height h/n, h being the shape's peak. Slice k (from 0)
// takes the closure of the strict cut at level k*h/n. A non-normal shape gets
// an empty-set slice for the levels above h.
template <Scalar T>
SlicedAssignment<T> slice_shape(const PiecewiseShape<T>& shape, std::size_t n) {
  if (n == 0) throw InvalidInput("slice count must be positive");
  const T h = shape.height();
  std::vector<Slice<T>> slices;
  if (h == T(0)) {
    slices.push_back({T(0), T(1), IntervalUnion<T>{}});
    return SlicedAssignment<T>(std::move(slices));
  }
  const T count(static_cast<std::int64_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    T lo = h * T(static_cast<std::int64_t>(k)) / count;
    T hi = k + 1 == n ? h : h * T(static_cast<std::int64_t>(k + 1)) / count;
    slices.push_back({lo, hi, shape.cut_above(lo)});
  }
  if (h < T(1)) slices.push_back({h, T(1), IntervalUnion<T>{}});
  return SlicedAssignment<T>(std::move(slices));
}

// Stacks a mass assignment into slices, widest focal elements at the bottom
// and the empty set on top. Elements are ordered so that no element sits
// below one of its strict supersets; for nested assignments this is the
// alpha-cut order.
template <Scalar T>
SlicedAssignment<T> slices_from_mass(const NumericMass<T>& m) {
  std::vector<typename NumericMass<T>::Entry> pending;
  std::vector<Slice<T>> slices;
  for (const auto& e : m.entries())
    if (!e.focal.empty()) pending.push_back(e);

  T level(0);
  while (!pending.empty()) {
    // Among elements not strictly inside another pending one, take the
    // longest (first in canonical order on ties).
    std::size_t pick = pending.size();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < pending.size() && !dominated; ++j) {
        dominated = j != i && is_subset(pending[i].focal, pending[j].focal) && !(pending[i].focal == pending[j].focal);
      }
      if (dominated) continue;
      if (pick == pending.size() || pending[pick].focal.length() < pending[i].focal.length()) pick = i;
    }
    const auto& e = pending[pick];
    slices.push_back({level, level + e.mass, e.focal});
    level = level + e.mass;
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  T empty = m.empty_mass();
  if (!approx_zero(empty)) slices.push_back({level, level + empty, IntervalUnion<T>{}});
  if (!slices.empty()) slices.back().level_hi = T(1);
  return SlicedAssignment<T>(std::move(slices));
}

// Refines both assignments onto the union of their level boundaries so that
// slice k of each covers the same level range.
template <Scalar T>
std::pair<SlicedAssignment<T>, SlicedAssignment<T>> align_levels(const SlicedAssignment<T>& a,
                                                                  const SlicedAssignment<T>& b) {
  std::vector<T> bounds = a.boundaries();
  auto more = b.boundaries();
  bounds.insert(bounds.end(), more.begin(), more.end());
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end(), [](const T& x, const T& y) { return approx_eq(x, y); }),
               bounds.end());
  return {a.refine(bounds), b.refine(bounds)};
}

}  // namespace fdist
