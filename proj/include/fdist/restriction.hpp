#pragma once

// Restrictions move mass towards more specific focal elements. Type 1 moves
// mass from a focal element to one of its subsets; type 2 moves mass from two
// focal elements onto their union and intersection. This header also holds
// the reachability and linear-combination checks used to compare distance
// assignments, and nesting checks over a matrix of cell results.

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "fdist/detail/flow.hpp"
#include "fdist/detail/simplex.hpp"
#include "fdist/errors.hpp"
#include "fdist/interval.hpp"
#include "fdist/mass.hpp"
#include "fdist/slicing.hpp"

namespace fdist {

namespace detail {

template <Scalar T>
void require_positive_amount(const T& x) {
  if (!(T(0) < x) || approx_zero(x)) throw InvalidRestriction("restricted mass must be positive");
}

template <Scalar T>
void require_available(const NumericMass<T>& m, const IntervalUnion<T>& focal, const T& x) {
  T have = m.mass_of(focal);
  if (approx_lt(have, x)) {
    std::ostringstream msg;
    msg << "cannot move " << x << " from " << focal << " which holds " << have;
    throw InvalidRestriction(msg.str());
  }
}

}  // namespace detail

// Moves x from `donor` to `receiver`, which must be a different subset of it.
template <Scalar T>
NumericMass<T> apply_type1(const NumericMass<T>& m, const IntervalUnion<T>& donor, const IntervalUnion<T>& receiver,
                           const T& x) {
  if (donor == receiver) throw InvalidRestriction("donor and receiver are the same focal element");
  if (!is_subset(receiver, donor)) {
    std::ostringstream msg;
    msg << "receiver " << receiver << " is not a subset of donor " << donor;
    throw InvalidRestriction(msg.str());
  }
  detail::require_positive_amount(x);
  detail::require_available(m, donor, x);

  std::vector<typename NumericMass<T>::Entry> entries(m.entries().begin(), m.entries().end());
  entries.push_back({donor, T(0) - x});
  entries.push_back({receiver, x});
  return NumericMass<T>::make(std::move(entries));
}

// Moves x from each of `k` and `n` onto both their union and their
// intersection. Receivers already present accumulate the mass.
template <Scalar T>
NumericMass<T> apply_type2(const NumericMass<T>& m, const IntervalUnion<T>& k, const IntervalUnion<T>& n,
                           const T& x) {
  if (k == n) throw InvalidRestriction("type-2 restriction needs two distinct focal elements");
  IntervalUnion<T> joined = unite(k, n);
  IntervalUnion<T> common = intersect(k, n);
  if (joined == k || joined == n || common == k || common == n)
    throw InvalidRestriction("one focal element contains the other; use a type-1 restriction");
  detail::require_positive_amount(x);
  detail::require_available(m, k, x);
  detail::require_available(m, n, x);

  std::vector<typename NumericMass<T>::Entry> entries(m.entries().begin(), m.entries().end());
  entries.push_back({k, T(0) - x});
  entries.push_back({n, T(0) - x});
  entries.push_back({joined, x});
  entries.push_back({common, x});
  return NumericMass<T>::make(std::move(entries));
}

// Non-negative coefficients summing to one with sum_r c_r basis_r = target
// on every focal element, or nullopt when no such mixture exists.
template <Scalar T>
std::optional<std::vector<T>> linear_combination(const NumericMass<T>& target, const std::vector<NumericMass<T>>& basis) {
  if (basis.empty()) return std::nullopt;
  std::vector<IntervalUnion<T>> universe;
  auto note = [&](const IntervalUnion<T>& f) {
    for (const auto& u : universe)
      if (u == f) return;
    universe.push_back(f);
  };
  for (const auto& e : target.entries()) note(e.focal);
  for (const auto& b : basis)
    for (const auto& e : b.entries()) note(e.focal);

  std::vector<std::vector<T>> a;
  std::vector<T> rhs;
  for (const auto& f : universe) {
    std::vector<T> row;
    for (const auto& b : basis) row.push_back(b.mass_of(f));
    a.push_back(std::move(row));
    rhs.push_back(target.mass_of(f));
  }
  a.emplace_back(basis.size(), T(1));
  rhs.push_back(T(1));
  return detail::feasible_point(std::move(a), std::move(rhs));
}

// Whether some sequence of type-1 restrictions turns `from` into `to`. Mass
// can only travel from a focal element to its subsets, so this is a
// transportation feasibility question.
template <Scalar T>
bool reachable_type1(const NumericMass<T>& from, const NumericMass<T>& to) {
  std::vector<T> supply, demand;
  for (const auto& e : from.entries()) supply.push_back(e.mass);
  for (const auto& e : to.entries()) demand.push_back(e.mass);
  std::vector<std::vector<std::optional<int>>> allowed(supply.size(), std::vector<std::optional<int>>(demand.size()));
  for (std::size_t i = 0; i < supply.size(); ++i)
    for (std::size_t j = 0; j < demand.size(); ++j)
      if (is_subset(to.entries()[j].focal, from.entries()[i].focal)) allowed[i][j] = 0;

  auto plan = detail::transport<T, int>(supply, demand, allowed);
  T shipped(0);
  for (const auto& row : plan)
    for (const auto& v : row) shipped += v;
  return approx_eq(shipped, to.total());
}

// Cell results for every (row focal, column focal) pair.
template <Scalar T>
class CellMatrix {
 public:
  template <class Cell>
  static CellMatrix build(std::vector<IntervalUnion<T>> rows, std::vector<IntervalUnion<T>> cols, Cell cell) {
    CellMatrix out;
    out.rows_ = std::move(rows);
    out.cols_ = std::move(cols);
    for (const auto& r : out.rows_) {
      std::vector<IntervalUnion<T>> line;
      for (const auto& c : out.cols_) line.push_back(cell(r, c));
      out.cells_.push_back(std::move(line));
    }
    return out;
  }

  template <class Cell>
  static CellMatrix from_slices(const SlicedAssignment<T>& a, const SlicedAssignment<T>& b, Cell cell) {
    std::vector<IntervalUnion<T>> rows, cols;
    for (const auto& s : a.slices()) rows.push_back(s.focal);
    for (const auto& s : b.slices()) cols.push_back(s.focal);
    return build(std::move(rows), std::move(cols), cell);
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  const IntervalUnion<T>& at(std::size_t row, std::size_t col) const { return cells_[row][col]; }

 private:
  std::vector<IntervalUnion<T>> rows_;
  std::vector<IntervalUnion<T>> cols_;
  std::vector<std::vector<IntervalUnion<T>>> cells_;
};

struct CellPosition {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const CellPosition&, const CellPosition&) = default;
};

namespace detail {

template <Scalar T, class Visit>
void for_each_cell_pair(const CellMatrix<T>& m, Visit visit) {
  std::vector<CellPosition> cells;
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j) cells.push_back({i, j});
  for (std::size_t p = 0; p < cells.size(); ++p)
    for (std::size_t q = p + 1; q < cells.size(); ++q)
      if (!visit(cells[p], cells[q])) return;
}

}  // namespace detail

// True when every two cells are comparable under inclusion, i.e. no type-2
// restriction can apply between them.
template <Scalar T>
bool cells_nested(const CellMatrix<T>& m) {
  bool nested = true;
  detail::for_each_cell_pair(m, [&](CellPosition p, CellPosition q) {
    const auto& a = m.at(p.row, p.col);
    const auto& b = m.at(q.row, q.col);
    nested = is_subset(a, b) || is_subset(b, a);
    return nested;
  });
  return nested;
}

// Two cells that intersect while neither contains the other, if any.
template <Scalar T>
std::optional<std::pair<CellPosition, CellPosition>> overlap_witness(const CellMatrix<T>& m) {
  std::optional<std::pair<CellPosition, CellPosition>> found;
  detail::for_each_cell_pair(m, [&](CellPosition p, CellPosition q) {
    const auto& a = m.at(p.row, p.col);
    const auto& b = m.at(q.row, q.col);
    if (intersects(a, b) && !is_subset(a, b) && !is_subset(b, a)) found = std::pair{p, q};
    return !found;
  });
  return found;
}

}  // namespace fdist
