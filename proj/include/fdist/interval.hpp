#pragma once

// Closed intervals and canonical finite unions of them.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/scalar.hpp"

namespace fdist {

template <Scalar T>
struct Interval {
  T lo{};
  T hi{};

  T length() const { return hi - lo; }
  bool contains(const T& x) const { return approx_le(lo, x) && approx_le(x, hi); }
  bool is_point() const { return approx_eq(lo, hi); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return approx_eq(a.lo, b.lo) && approx_eq(a.hi, b.hi);
  }
  friend std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.lo << ',' << iv.hi << ']';
  }
};

// A sorted list of pairwise disjoint, non-touching closed intervals. The
// empty list is the empty set. Every constructor canonicalizes.
template <Scalar T>
class IntervalUnion {
 public:
  using interval_type = Interval<T>;

  IntervalUnion() = default;
  IntervalUnion(const T& lo, const T& hi) : IntervalUnion(std::vector<interval_type>{{lo, hi}}) {}
  explicit IntervalUnion(const interval_type& iv) : IntervalUnion(std::vector<interval_type>{iv}) {}
  IntervalUnion(std::initializer_list<interval_type> raw) : IntervalUnion(std::vector<interval_type>(raw)) {}

  // Sorts and merges overlapping or touching parts. Throws InvalidInput on a
  // reversed interval.
  explicit IntervalUnion(std::vector<interval_type> raw) {
    for (const auto& iv : raw) {
      if (iv.hi < iv.lo) {
        std::ostringstream msg;
        msg << "malformed interval " << '[' << iv.lo << ',' << iv.hi << "]: lo > hi";
        throw InvalidInput(msg.str());
      }
    }
    std::sort(raw.begin(), raw.end(), [](const interval_type& a, const interval_type& b) {
      return a.lo < b.lo || (!(b.lo < a.lo) && a.hi < b.hi);
    });
    for (auto& iv : raw) {
      if (!parts_.empty() && approx_le(iv.lo, parts_.back().hi)) {
        if (parts_.back().hi < iv.hi) parts_.back().hi = iv.hi;
      } else {
        parts_.push_back(iv);
      }
    }
  }

  std::span<const interval_type> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  T length() const {
    T total(0);
    for (const auto& p : parts_) total += p.length();
    return total;
  }

  bool contains(const T& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const interval_type& p) { return p.contains(x); });
  }

  std::optional<interval_type> hull() const {
    if (parts_.empty()) return std::nullopt;
    return interval_type{parts_.front().lo, parts_.back().hi};
  }

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) { return a.parts_ == b.parts_; }

  friend std::ostream& operator<<(std::ostream& os, const IntervalUnion& u) {
    if (u.parts_.empty()) return os << "[]";
    for (std::size_t i = 0; i < u.parts_.size(); ++i) {
      if (i) os << ',';
      os << u.parts_[i];
    }
    return os;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  std::vector<interval_type> parts_;
};

// Every point of a lies in b.
template <Scalar T>
bool is_subset(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  auto bp = b.parts();
  std::size_t j = 0;
  for (const auto& p : a.parts()) {
    // a connected part must fit inside a single part of b
    while (j < bp.size() && approx_lt(bp[j].hi, p.lo)) ++j;
    if (j == bp.size()) return false;
    if (!(approx_le(bp[j].lo, p.lo) && approx_le(p.hi, bp[j].hi))) return false;
  }
  return true;
}

template <Scalar T>
bool intersects(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  auto ap = a.parts();
  auto bp = b.parts();
  std::size_t i = 0, j = 0;
  while (i < ap.size() && j < bp.size()) {
    const T& lo = ap[i].lo < bp[j].lo ? bp[j].lo : ap[i].lo;
    const T& hi = ap[i].hi < bp[j].hi ? ap[i].hi : bp[j].hi;
    if (approx_le(lo, hi)) return true;
    if (ap[i].hi < bp[j].hi) ++i; else ++j;
  }
  return false;
}

template <Scalar T>
IntervalUnion<T> negate(const IntervalUnion<T>& a) {
  std::vector<Interval<T>> out;
  out.reserve(a.size());
  for (const auto& p : a.parts()) out.push_back({T(0) - p.hi, T(0) - p.lo});
  return IntervalUnion<T>(std::move(out));
}

template <Scalar T>
IntervalUnion<T> unite(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  std::vector<Interval<T>> raw(a.parts().begin(), a.parts().end());
  raw.insert(raw.end(), b.parts().begin(), b.parts().end());
  return IntervalUnion<T>(std::move(raw));
}

template <Scalar T>
IntervalUnion<T> intersect(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  std::vector<Interval<T>> raw;
  for (const auto& p : a.parts()) {
    for (const auto& q : b.parts()) {
      const T& lo = p.lo < q.lo ? q.lo : p.lo;
      const T& hi = p.hi < q.hi ? p.hi : q.hi;
      if (approx_le(lo, hi)) raw.push_back({lo, hi < lo ? lo : hi});
    }
  }
  return IntervalUnion<T>(std::move(raw));
}

// Deterministic total order used for canonical listings: by parts
// lexicographically on (lo, hi), a strict prefix first, the empty set last.
template <Scalar T>
bool canonical_less(const IntervalUnion<T>& a, const IntervalUnion<T>& b) {
  if (a.empty() || b.empty()) return !a.empty() && b.empty();
  auto ap = a.parts();
  auto bp = b.parts();
  std::size_t n = std::min(ap.size(), bp.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!approx_eq(ap[i].lo, bp[i].lo)) return ap[i].lo < bp[i].lo;
    if (!approx_eq(ap[i].hi, bp[i].hi)) return ap[i].hi < bp[i].hi;
  }
  return ap.size() < bp.size();
}

}  // namespace fdist
