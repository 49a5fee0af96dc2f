#pragma once

// Antipode as the convolution inverse of the identity, found by a sparse
// linear solve. Left inverse is solved for; the right identity is then checked,
// which makes the answer the unique two-sided inverse.

#include <map>
#include <vector>

#include "hopfkit/hopf_algebra.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

template <class F>
std::vector<std::vector<Term<typename F::value_type>>> solve_antipode(const Structure<typename F::value_type>& s,
                                                                      const F& f) {
  using V = typename F::value_type;
  const std::uint32_t d = s.dim;
  if (std::uint64_t(d) * d >= (1ull << 32)) throw Error(ErrorKind::TooLarge, "d^2 unknowns exceed index range");

  // by_right[k] lists (l, m, mu) with b_l b_k containing mu b_m.
  struct Entry {
    std::uint32_t l, m;
    V mu;
  };
  std::vector<std::vector<Entry>> by_right(d);
  for (std::uint32_t l = 0; l < d; ++l)
    for (const auto& t : s.mult[l]) by_right[t.j].push_back({l, t.k, t.coeff});

  // Unknown (j, l) at j*d + l is the coefficient of b_l in S(b_j).
  // Equation (i, m): sum over Delta(b_i) = c b_j (x) b_k of c S(b_j) b_k, coordinate m, equals eps_i 1_m.
  std::vector<SparseVec<V>> rows;
  std::vector<V> rhs;
  std::vector<V> unit_coord(d, f.zero());
  for (const auto& u : s.unit) unit_coord[u.index] = u.coeff;
  for (std::uint32_t i = 0; i < d; ++i) {
    std::map<std::uint32_t, std::map<std::uint32_t, V>> eq;
    for (const auto& t : s.comult[i])
      for (const auto& e : by_right[t.k]) {
        auto [it, ins] = eq[e.m].try_emplace(t.j * d + e.l, f.mul(t.coeff, e.mu));
        if (!ins) f.add_to(it->second, f.mul(t.coeff, e.mu));
      }
    std::map<std::uint32_t, V> target;
    if (!f.is_zero(s.counit[i]))
      for (std::uint32_t m = 0; m < d; ++m)
        if (!f.is_zero(unit_coord[m])) target[m] = f.mul(s.counit[i], unit_coord[m]);
    for (auto& [m, row] : eq) {
      SparseVec<V> r;
      for (auto& [u, c] : row)
        if (!f.is_zero(c)) r.emplace_back(u, c);
      auto tg = target.find(m);
      rhs.push_back(tg == target.end() ? f.zero() : tg->second);
      if (tg != target.end()) target.erase(tg);
      rows.push_back(std::move(r));
    }
    for (auto& [m, v] : target) {  // 0 = nonzero: inconsistent
      (void)m;
      rows.push_back({});
      rhs.push_back(v);
    }
  }
  auto sol = solve_sparse(rows, rhs, d * d, f);
  if (!sol) throw Error(ErrorKind::NotInvertible, "no antipode: the convolution equation has no solution");

  std::vector<std::vector<Term<V>>> S(d);
  for (std::uint32_t j = 0; j < d; ++j)
    for (std::uint32_t l = 0; l < d; ++l)
      if (!f.is_zero((*sol)[j * d + l])) S[j].push_back({l, (*sol)[j * d + l]});

  // Right-handed identity: sum b_j S(b_k) = eps 1.
  for (std::uint32_t i = 0; i < d; ++i) {
    Accumulator<F> acc(f);
    for (const auto& t : s.comult[i])
      for (const auto& st : S[t.k]) {
        auto [lo, hi] = s.product(t.j, st.index);
        for (auto it = lo; it != hi; ++it) acc.add(key1(it->k), f.mul(f.mul(t.coeff, st.coeff), it->coeff));
      }
    for (const auto& u : s.unit) acc.sub(key1(u.index), f.mul(s.counit[i], u.coeff));
    if (!acc.all_zero())
      throw Error(ErrorKind::NotInvertible,
                  "left convolution inverse fails the right identity at index " + std::to_string(i));
  }
  return S;
}

// Sparse rows of the antipode matrix (row i = S(b_i)).
template <class V>
std::vector<SparseVec<V>> antipode_rows(const Structure<V>& s) {
  std::vector<SparseVec<V>> rows(s.dim);
  for (std::uint32_t i = 0; i < s.dim; ++i)
    for (const auto& t : s.antipode[i]) rows[i].emplace_back(t.index, t.coeff);
  return rows;
}

// S^{-1} as rows; throws when S is singular.
template <class F>
std::vector<std::vector<Term<typename F::value_type>>> inverse_antipode(const Structure<typename F::value_type>& s,
                                                                        const F& f) {
  auto inv = inverse_sparse(antipode_rows(s), f);
  if (!inv) throw Error(ErrorKind::NotInvertible, "antipode matrix is singular");
  std::vector<std::vector<Term<typename F::value_type>>> out(s.dim);
  for (std::uint32_t i = 0; i < s.dim; ++i)
    for (auto& [c, v] : (*inv)[i]) out[i].push_back({c, v});
  return out;
}

}  // namespace hopfkit
