#pragma once

// Piecewise-constant numeric fuzzy sets, the shape of every distance result.

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/interval.hpp"
#include "fdist/mass.hpp"
#include "fdist/scalar.hpp"

namespace fdist {

// A maximal run of constant membership. Endpoints may be open where the
// neighbouring run (or a point) carries a different grade.
template <Scalar T>
struct Step {
  Interval<T> region;
  T grade;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const T& x) const {
    if (x < region.lo || region.hi < x) return false;
    if (x == region.lo && !lo_closed) return false;
    if (x == region.hi && !hi_closed) return false;
    return true;
  }

  friend bool operator==(const Step& a, const Step& b) {
    return a.region == b.region && approx_eq(a.grade, b.grade) && a.lo_closed == b.lo_closed &&
           a.hi_closed == b.hi_closed;
  }
};

template <Scalar T>
class NumericFuzzySet {
 public:
  using step_type = Step<T>;

  NumericFuzzySet() = default;

  // Steps must be ordered, carry grades in (0,1] and not share points.
  explicit NumericFuzzySet(std::vector<step_type> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const auto& s = steps_[i];
      if (s.region.hi < s.region.lo) throw InvalidInput("fuzzy step with lo > hi");
      if (!(T(0) < s.grade) || T(1) < s.grade) throw InvalidInput("fuzzy step grade outside (0,1]");
      if (i == 0) continue;
      const auto& prev = steps_[i - 1];
      bool ok = prev.region.hi < s.region.lo ||
                (prev.region.hi == s.region.lo && !(prev.hi_closed && s.lo_closed));
      if (!ok) throw InvalidInput("fuzzy steps overlap or are out of order");
    }
  }

  std::span<const step_type> steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

  T membership(const T& x) const {
    for (const auto& s : steps_)
      if (s.contains(x)) return s.grade;
    return T(0);
  }

  T height() const {
    T h(0);
    for (const auto& s : steps_) h = h < s.grade ? s.grade : h;
    return h;
  }

  std::optional<Interval<T>> support_hull() const {
    if (steps_.empty()) return std::nullopt;
    return Interval<T>{steps_.front().region.lo, steps_.back().region.hi};
  }

  // Steps with open/closed markers dropped: (closed region, grade).
  std::vector<std::pair<Interval<T>, T>> closed_steps() const {
    std::vector<std::pair<Interval<T>, T>> out;
    for (const auto& s : steps_) out.emplace_back(s.region, s.grade);
    return out;
  }

  friend bool operator==(const NumericFuzzySet&, const NumericFuzzySet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const NumericFuzzySet& f) {
    os << '{';
    for (std::size_t i = 0; i < f.steps_.size(); ++i) {
      const auto& s = f.steps_[i];
      if (i) os << ", ";
      os << s.grade << '|' << (s.lo_closed ? '[' : '(') << s.region.lo << ',' << s.region.hi
         << (s.hi_closed ? ']' : ')');
    }
    return os << '}';
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  std::vector<step_type> steps_;
};

// mu(x) is the total mass of the focal elements containing x (closed
// containment). Mass on the empty set lands nowhere, so a non-normal
// assignment yields a non-normal fuzzy set.
template <Scalar T>
NumericFuzzySet<T> fuzzy_from_mass(const NumericMass<T>& m) {
  std::vector<T> points;
  for (const auto& e : m.entries())
    for (const auto& p : e.focal.parts()) {
      points.push_back(p.lo);
      points.push_back(p.hi);
    }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(), [](const T& a, const T& b) { return approx_eq(a, b); }),
               points.end());

  auto grade_at = [&](const T& x) {
    T sum(0);
    for (const auto& e : m.entries())
      if (e.focal.contains(x)) sum += e.mass;
    return T(1) < sum ? T(1) : sum;  // rounding only; masses sum to one
  };

  // Alternate point pieces and open gaps, then merge equal neighbours.
  struct Piece {
    T lo, hi, grade;
    bool is_point;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < points.size(); ++i) {
    pieces.push_back({points[i], points[i], grade_at(points[i]), true});
    if (i + 1 < points.size()) {
      T mid = (points[i] + points[i + 1]) / T(2);
      pieces.push_back({points[i], points[i + 1], grade_at(mid), false});
    }
  }

  std::vector<Step<T>> steps;
  bool extending = false;
  for (const auto& piece : pieces) {
    if (approx_zero(piece.grade)) {
      extending = false;
      continue;
    }
    if (extending && approx_eq(steps.back().grade, piece.grade)) {
      steps.back().region.hi = piece.hi;
      steps.back().hi_closed = piece.is_point;
      continue;
    }
    steps.push_back({Interval<T>{piece.lo, piece.hi}, piece.grade, piece.is_point, piece.is_point});
    extending = true;
  }
  return NumericFuzzySet<T>(std::move(steps));
}

}  // namespace fdist
