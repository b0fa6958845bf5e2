#pragma once

// Reductions of a numeric mass assignment or fuzzy set to a single interval
// or a single value.

#include <algorithm>
#include <span>
#include <sstream>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/fuzzy.hpp"
#include "fdist/interval.hpp"
#include "fdist/mass.hpp"
#include "fdist/scalar.hpp"

namespace fdist {

// Piecewise-constant probability density. Pieces are open intervals with
// positive density, ordered and non-overlapping; mass that sat on the empty
// set is kept aside as `unassigned`.
template <Scalar T>
struct Density {
  struct Piece {
    Interval<T> region;
    T value;
    friend bool operator==(const Piece& a, const Piece& b) {
      return a.region == b.region && approx_eq(a.value, b.value);
    }
  };

  std::vector<Piece> pieces;
  T unassigned{0};

  T value_at(const T& x) const {
    for (const auto& p : pieces)
      if (p.region.lo < x && x < p.region.hi) return p.value;
    return T(0);
  }

  T integral() const {
    T sum(0);
    for (const auto& p : pieces) sum += p.value * p.region.length();
    return sum;
  }
};

// Least prejudiced distribution: each focal element's mass spread uniformly
// over its total length. Throws DegenerateSupport for a zero-length focal
// element carrying mass.
template <Scalar T>
Density<T> least_prejudiced(const NumericMass<T>& m) {
  Density<T> out;
  std::vector<T> points;
  for (const auto& e : m.entries()) {
    if (e.focal.empty()) {
      out.unassigned += e.mass;
      continue;
    }
    if (approx_zero(e.focal.length())) {
      std::ostringstream msg;
      msg << "focal element " << e.focal << " has zero length; mass cannot be spread uniformly";
      throw DegenerateSupport(msg.str());
    }
    for (const auto& p : e.focal.parts()) {
      points.push_back(p.lo);
      points.push_back(p.hi);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(), [](const T& a, const T& b) { return approx_eq(a, b); }),
               points.end());

  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    T mid = (points[i] + points[i + 1]) / T(2);
    T value(0);
    for (const auto& e : m.entries())
      if (!e.focal.empty() && e.focal.contains(mid)) value += e.mass / e.focal.length();
    if (approx_zero(value)) continue;
    auto& pieces = out.pieces;
    if (!pieces.empty() && pieces.back().region.hi == points[i] && approx_eq(pieces.back().value, value)) {
      pieces.back().region.hi = points[i + 1];
    } else {
      pieces.push_back({Interval<T>{points[i], points[i + 1]}, value});
    }
  }
  return out;
}

// The closed region where the least prejudiced density peaks.
template <Scalar T>
IntervalUnion<T> max_likelihood_interval(const NumericMass<T>& m) {
  Density<T> d = least_prejudiced(m);
  if (d.pieces.empty()) return {};
  T peak = d.pieces.front().value;
  for (const auto& p : d.pieces) peak = peak < p.value ? p.value : peak;
  std::vector<Interval<T>> raw;
  for (const auto& p : d.pieces)
    if (approx_eq(p.value, peak)) raw.push_back(p.region);
  return IntervalUnion<T>(std::move(raw));
}

// Membership-weighted mean. Throws InvalidInput when the set has no area.
template <Scalar T>
T centre_of_gravity(const NumericFuzzySet<T>& f) {
  T area(0);
  T moment(0);
  for (const auto& s : f.steps()) {
    const auto& r = s.region;
    area += s.grade * (r.hi - r.lo);
    moment += s.grade * (r.hi * r.hi - r.lo * r.lo) / T(2);
  }
  if (approx_zero(area)) throw InvalidInput("centre of gravity of a fuzzy set with zero area");
  return moment / area;
}

}  // namespace fdist
