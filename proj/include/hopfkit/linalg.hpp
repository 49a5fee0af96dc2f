#pragma once

// Sparse Gaussian elimination over a field policy (exact cyclotomic or F_p),
// plus a dense fraction-free (Bareiss) rank for small dense matrices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "hopfkit/errors.hpp"

namespace hopfkit {

template <class V>
using SparseVec = std::vector<std::pair<std::uint32_t, V>>;

template <class F>
class Echelon {
 public:
  using V = typename F::value_type;

  Echelon(std::uint32_t ncols, F f) : f_(std::move(f)), ncols_(ncols), pivot_(ncols, -1), work_(ncols, f_.zero()), mark_(ncols, 0) {}

  std::uint32_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<V>>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivot_columns() const { return pivcols_; }
  bool is_pivot(std::uint32_t c) const { return pivot_[c] >= 0; }
  const SparseVec<V>& pivot_row(std::uint32_t c) const { return rows_[static_cast<std::size_t>(pivot_[c])]; }

  // Adds v to the row space; returns true when it was independent.
  bool insert(const SparseVec<V>& v) {
    SparseVec<V> r = reduce(v, /*full=*/false);
    if (r.empty()) return false;
    V inv = f_.inv(r.front().second);
    for (auto& e : r) e.second = f_.mul(e.second, inv);
    pivot_[r.front().first] = static_cast<long>(rows_.size());
    pivcols_.push_back(r.front().first);
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
  }

  // Reduces v against the pivots. With full=false stops once the leading entry is free.
  SparseVec<V> reduce(const SparseVec<V>& v, bool full = true) {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    touched_.clear();
    for (const auto& [c, x] : v) {
      if (c >= ncols_) throw Error(ErrorKind::DimensionMismatch, "column index out of range");
      if (!mark_[c]) {
        mark_[c] = 1;
        touched_.push_back(c);
        heap.push(c);
      }
      f_.add_to(work_[c], x);
    }
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      if (f_.is_zero(work_[c])) continue;
      if (pivot_[c] < 0) {
        if (!full) break;
        continue;
      }
      V coef = work_[c];
      for (const auto& [col, val] : rows_[static_cast<std::size_t>(pivot_[c])]) {
        if (!mark_[col]) {
          mark_[col] = 1;
          touched_.push_back(col);
          heap.push(col);
        } else if (col != c && f_.is_zero(work_[col]) && col > c) {
          heap.push(col);
        }
        work_[col] = f_.sub(work_[col], f_.mul(coef, val));
      }
    }
    SparseVec<V> out;
    for (std::uint32_t c : touched_) {
      if (!f_.is_zero(work_[c])) out.emplace_back(c, work_[c]);
      work_[c] = f_.zero();
      mark_[c] = 0;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  // Brings the stored rows to reduced row echelon form (pivot columns cleared elsewhere).
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::uint32_t> order = pivcols_;
    std::sort(order.begin(), order.end(), std::greater<>());
    for (std::uint32_t p : order) {
      auto& row = rows_[static_cast<std::size_t>(pivot_[p])];
      SparseVec<V> tail(row.begin() + 1, row.end());
      SparseVec<V> red = reduce(tail, true);
      SparseVec<V> nr;
      nr.reserve(red.size() + 1);
      nr.emplace_back(p, f_.one());
      for (auto& e : red) nr.push_back(std::move(e));
      row = std::move(nr);
    }
    reduced_ = true;
  }

  const F& field() const { return f_; }

 private:
  F f_;
  std::uint32_t ncols_;
  std::vector<long> pivot_;
  std::vector<std::uint32_t> pivcols_;
  std::vector<SparseVec<V>> rows_;
  std::vector<V> work_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
  bool reduced_ = true;
};

template <class F>
std::size_t sparse_rank(const std::vector<SparseVec<typename F::value_type>>& rows, std::uint32_t ncols, const F& f) {
  Echelon<F> e(ncols, f);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.rank() == ncols) break;
  }
  return e.rank();
}

// Basis of {x : A x = 0}, A given by sparse rows over ncols unknowns.
template <class F>
std::vector<SparseVec<typename F::value_type>> nullspace(const std::vector<SparseVec<typename F::value_type>>& rows,
                                                         std::uint32_t ncols, const F& f) {
  using V = typename F::value_type;
  Echelon<F> e(ncols, f);
  for (const auto& r : rows) e.insert(r);
  e.make_reduced();
  // column -> list of (pivot column, coefficient in that pivot row)
  std::vector<std::vector<std::pair<std::uint32_t, V>>> col_entries(ncols);
  for (std::uint32_t p : e.pivot_columns()) {
    const auto& row = e.pivot_row(p);
    for (std::size_t t = 1; t < row.size(); ++t) col_entries[row[t].first].emplace_back(p, row[t].second);
  }
  std::vector<SparseVec<V>> basis;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (e.is_pivot(c)) continue;
    SparseVec<V> v;
    v.emplace_back(c, f.one());
    for (const auto& [p, a] : col_entries[c]) v.emplace_back(p, f.neg(a));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b (free variables zero), or nullopt if inconsistent.
template <class F>
std::optional<std::vector<typename F::value_type>> solve_sparse(
    const std::vector<SparseVec<typename F::value_type>>& rows, const std::vector<typename F::value_type>& rhs,
    std::uint32_t ncols, const F& f) {
  using V = typename F::value_type;
  if (rows.size() != rhs.size()) throw Error(ErrorKind::DimensionMismatch, "rhs length differs from row count");
  Echelon<F> e(ncols + 1, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec<V> r = rows[i];
    if (!f.is_zero(rhs[i])) r.emplace_back(ncols, rhs[i]);
    e.insert(r);
  }
  if (e.is_pivot(ncols)) return std::nullopt;
  e.make_reduced();
  std::vector<V> x(ncols, f.zero());
  for (std::uint32_t p : e.pivot_columns()) {
    const auto& row = e.pivot_row(p);
    if (!row.empty() && row.back().first == ncols) x[p] = row.back().second;
  }
  return x;
}

// Inverse of a square sparse matrix given by rows; nullopt when singular.
// Returns the rows of the inverse.
template <class F>
std::optional<std::vector<SparseVec<typename F::value_type>>> inverse_sparse(
    const std::vector<SparseVec<typename F::value_type>>& rows, const F& f) {
  using V = typename F::value_type;
  auto n = static_cast<std::uint32_t>(rows.size());
  Echelon<F> e(2 * n, f);
  for (std::uint32_t i = 0; i < n; ++i) {
    SparseVec<V> r = rows[i];
    r.emplace_back(n + i, f.one());
    e.insert(r);
  }
  for (std::uint32_t c = 0; c < n; ++c)
    if (!e.is_pivot(c)) return std::nullopt;
  e.make_reduced();
  std::vector<SparseVec<V>> inv(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    for (const auto& [col, val] : e.pivot_row(c))
      if (col >= n) inv[c].emplace_back(col - n, val);
  }
  return inv;
}

// Fraction-free elimination rank of a dense matrix (Bareiss); divisions are exact.
template <class F>
std::size_t bareiss_rank(std::vector<std::vector<typename F::value_type>> a, const F& f) {
  using V = typename F::value_type;
  std::size_t m = a.size();
  if (m == 0) return 0;
  std::size_t n = a[0].size();
  V prev = f.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && f.is_zero(a[piv][c])) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        V t = f.sub(f.mul(a[r][c], a[i][j]), f.mul(a[i][c], a[r][j]));
        a[i][j] = f.mul(t, f.inv(prev));
      }
      a[i][c] = f.zero();
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace hopfkit
