#pragma once

// Group-like and central elements: membership tests, closure of a generating
// set into a finite group, and a search for all group-likes of H.

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfkit/hopf_algebra.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

inline bool is_group_like(const HopfAlgebra& H, const Element& x) {
  if (x.degree != 1) return false;
  auto ops = exact_ops(H);
  if (!ops.counit(x).is_one()) return false;
  return ops.equal(ops.delta(x), ops.tensor(x, x));
}

inline bool is_central(const HopfAlgebra& H, const Element& x) {
  if (x.degree != 1) return false;
  auto ops = exact_ops(H);
  for (std::uint32_t i = 0; i < H.dim(); ++i) {
    Element b = ops.basis(i);
    if (!ops.equal(ops.mul(x, b), ops.mul(b, x))) return false;
  }
  return true;
}

// Canonical text of an element; used as a hash key.
inline std::string element_key(const Element& x) {
  std::string s;
  for (const auto& [k, c] : x.terms) s += std::to_string(k) + ":" + c.to_string() + ";";
  return s;
}

struct GroupLikeGroup {
  std::vector<Element> elements;               // elements[0] is the unit
  std::vector<std::string> labels;             // words in the generators
  std::vector<std::vector<std::uint32_t>> table;
  bool lower_bound = true;                     // cleared once matched against a complete enumeration

  std::size_t order() const { return elements.size(); }
  std::uint32_t index_of(const Element& x) const {
    for (std::uint32_t i = 0; i < elements.size(); ++i)
      if (tensors_equal(elements[i], x, ExactField{})) return i;
    throw Error(ErrorKind::NotGroupLike, "element is not in the closure");
  }
};

// Closes verified group-likes under multiplication (finite, so inverses follow).
inline GroupLikeGroup group_like_closure(const HopfAlgebra& H, const std::vector<NamedElement>& gens,
                                         std::size_t max_order = 100000) {
  auto ops = exact_ops(H);
  std::vector<Element> g;
  for (const auto& n : gens) {
    Element e = to_element(n);
    if (!is_group_like(H, e)) throw Error(ErrorKind::NotGroupLike, "generator '" + n.label + "' is not group-like");
    g.push_back(std::move(e));
  }
  GroupLikeGroup out;
  std::unordered_map<std::string, std::uint32_t> seen;
  auto add = [&](Element e, std::string label) {
    auto key = element_key(e);
    auto it = seen.find(key);
    if (it != seen.end()) return;
    seen.emplace(std::move(key), static_cast<std::uint32_t>(out.elements.size()));
    out.elements.push_back(std::move(e));
    out.labels.push_back(std::move(label));
  };
  add(ops.unit(), "1");
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::string w = out.labels[i] == "1" ? gens[k].label : out.labels[i] + "*" + gens[k].label;
      add(ops.mul(out.elements[i], g[k]), w);
    }
    if (out.elements.size() > max_order) throw Error(ErrorKind::TooLarge, "group-like closure exceeds order bound");
  }
  const auto n = out.elements.size();
  out.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = seen.find(element_key(ops.mul(out.elements[a], out.elements[b])));
      if (it == seen.end()) throw Error(ErrorKind::NotGroupLike, "closure is not multiplicatively closed");
      out.table[a][b] = it->second;
    }
  return out;
}

struct GroupLikeSearch {
  std::vector<Element> elements;
  bool complete = false;
  std::size_t cocommutative_dim = 0;  // dimension of the largest cocommutative subcoalgebra
  std::string detail;
};

namespace detail {

inline Element vec_to_element(const SparseVec<CycNumber>& v) {
  Element e;
  for (const auto& [i, c] : v) e.terms.emplace_back(key1(i), c);
  return e;
}

inline SparseVec<CycNumber> element_to_vec(const Element& e) {
  SparseVec<CycNumber> v;
  for (const auto& [k, c] : e.terms) v.emplace_back(static_cast<std::uint32_t>(k), c);
  return v;
}

// Linear combinations sum alpha_r basis[r] for alpha in `coeffs`.
inline std::vector<SparseVec<CycNumber>> combine(const std::vector<SparseVec<CycNumber>>& basis,
                                                 const std::vector<SparseVec<CycNumber>>& coeffs,
                                                 const ExactField& f) {
  std::vector<SparseVec<CycNumber>> out;
  for (const auto& alpha : coeffs) {
    std::map<std::uint32_t, CycNumber> acc;
    for (const auto& [r, a] : alpha)
      for (const auto& [i, c] : basis[r]) {
        auto [it, ins] = acc.try_emplace(i, a * c);
        if (!ins) f.add_to(it->second, a * c);
      }
    SparseVec<CycNumber> v;
    for (auto& [i, c] : acc)
      if (!c.is_zero()) v.emplace_back(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

// Coefficient vectors alpha with sum alpha_r vecs[r] = 0.
inline std::vector<SparseVec<CycNumber>> dependencies(const std::vector<SparseVec<CycNumber>>& vecs,
                                                      const ExactField& f) {
  std::map<std::uint32_t, SparseVec<CycNumber>> rows;
  for (std::uint32_t r = 0; r < vecs.size(); ++r)
    for (const auto& [i, c] : vecs[r]) rows[i].emplace_back(r, c);
  std::vector<SparseVec<CycNumber>> eqs;
  eqs.reserve(rows.size());
  for (auto& [i, row] : rows) eqs.push_back(std::move(row));
  return nullspace(eqs, static_cast<std::uint32_t>(vecs.size()), f);
}

}  // namespace detail

// Group-likes are the joint eigenvectors of the operators x -> (E^a (x) id) Delta(x)
// on the largest cocommutative subcoalgebra D; the eigenvalue of the a-th operator is
// the a-th coordinate. The list is complete exactly when it spans D.
inline GroupLikeSearch find_group_likes(const HopfAlgebra& H) {
  const auto d = H.dim();
  ExactField f = H.field();
  auto ops = exact_ops(H);
  GroupLikeSearch out;

  // C = {x : Delta(x) = Delta^op(x)}.
  std::vector<SparseVec<CycNumber>> W;
  {
    std::map<std::uint64_t, std::map<std::uint32_t, CycNumber>> rows;
    for (std::uint32_t i = 0; i < d; ++i)
      for (const auto& t : H.s.comult[i]) {
        if (t.j == t.k) continue;
        bool fwd = t.j < t.k;
        std::uint64_t key = fwd ? (std::uint64_t(t.j) << 32 | t.k) : (std::uint64_t(t.k) << 32 | t.j);
        CycNumber c = fwd ? t.coeff : -t.coeff;
        auto [it, ins] = rows[key].try_emplace(i, c);
        if (!ins) it->second += c;
      }
    std::vector<SparseVec<CycNumber>> eqs;
    for (auto& [k, row] : rows) {
      SparseVec<CycNumber> r;
      for (auto& [i, c] : row)
        if (!c.is_zero()) r.emplace_back(i, c);
      if (!r.empty()) eqs.push_back(std::move(r));
    }
    W = nullspace(eqs, d, f);
  }

  // Shrink to the largest W with Delta(W) in W (x) H; for cocommutative x this
  // also gives H (x) W, so W becomes a subcoalgebra.
  for (;;) {
    Echelon<ExactField> E(d, f);
    for (const auto& w : W) E.insert(w);
    E.make_reduced();
    std::map<std::uint64_t, SparseVec<CycNumber>> rows;
    for (std::uint32_t r = 0; r < W.size(); ++r) {
      Element dw = ops.delta(detail::vec_to_element(W[r]));
      std::map<std::uint32_t, SparseVec<CycNumber>> slices;  // right leg -> vector in left leg
      for (const auto& [k, c] : dw.terms) slices[leg(k, 1)].emplace_back(leg(k, 0), c);
      for (auto& [k, v] : slices) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [col, c] : E.reduce(v)) rows[std::uint64_t(k) << 32 | col].emplace_back(r, c);
      }
    }
    if (rows.empty()) break;
    std::vector<SparseVec<CycNumber>> eqs;
    for (auto& [k, row] : rows) eqs.push_back(std::move(row));
    auto alpha = nullspace(eqs, static_cast<std::uint32_t>(W.size()), f);
    if (alpha.size() == W.size()) break;
    W = detail::combine(W, alpha, f);
  }
  out.cocommutative_dim = W.size();

  // Split D by joint eigenspaces, eigenvalues drawn from {0} and the N-th roots of unity.
  std::vector<CycNumber> candidates{CycNumber(0)};
  for (std::int64_t k = 0; k < H.conductor; ++k) candidates.push_back(CycNumber::root_of_unity(H.conductor, k));
  std::vector<std::vector<SparseVec<CycNumber>>> pieces{W};
  bool lost = false;
  for (std::uint32_t a = 0; a < d; ++a) {
    bool all_one = true;
    std::vector<std::vector<SparseVec<CycNumber>>> next;
    for (auto& U : pieces) {
      if (U.size() <= 1) {
        next.push_back(std::move(U));
        continue;
      }
      all_one = false;
      // T_a on each basis vector of U.
      std::vector<SparseVec<CycNumber>> Tu;
      bool zero = true;
      for (const auto& u : U) {
        SparseVec<CycNumber> v;
        for (const auto& [i, c] : u)
          for (const auto& t : H.s.comult[i])
            if (t.j == a) v.emplace_back(t.k, c * t.coeff);
        std::map<std::uint32_t, CycNumber> acc;
        for (auto& [k, c] : v) {
          auto [it, ins] = acc.try_emplace(k, c);
          if (!ins) it->second += c;
        }
        SparseVec<CycNumber> w;
        for (auto& [k, c] : acc)
          if (!c.is_zero()) w.emplace_back(k, c);
        if (!w.empty()) zero = false;
        Tu.push_back(std::move(w));
      }
      if (zero) {
        next.push_back(std::move(U));
        continue;
      }
      std::size_t found = 0;
      std::vector<std::vector<SparseVec<CycNumber>>> split;
      for (const auto& lam : candidates) {
        std::vector<SparseVec<CycNumber>> diff;
        for (std::size_t r = 0; r < U.size(); ++r) {
          std::map<std::uint32_t, CycNumber> acc;
          for (const auto& [k, c] : Tu[r]) acc[k] += c;
          if (!lam.is_zero())
            for (const auto& [k, c] : U[r]) acc[k] -= lam * c;
          SparseVec<CycNumber> w;
          for (auto& [k, c] : acc)
            if (!c.is_zero()) w.emplace_back(k, c);
          diff.push_back(std::move(w));
        }
        auto alpha = detail::dependencies(diff, f);
        if (alpha.empty()) continue;
        found += alpha.size();
        split.push_back(detail::combine(U, alpha, f));
        if (found == U.size()) break;
      }
      if (found < U.size()) lost = true;
      for (auto& s : split) next.push_back(std::move(s));
    }
    pieces = std::move(next);
    if (all_one) break;
  }

  for (const auto& U : pieces) {
    if (U.size() != 1) {
      lost = true;
      continue;
    }
    Element x = detail::vec_to_element(U[0]);
    CycNumber e = ops.counit(x);
    if (e.is_zero()) continue;
    x = ops.scale(x, e.inverse());
    if (is_group_like(H, x)) out.elements.push_back(std::move(x));
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const Element& a, const Element& b) { return element_key(a) < element_key(b); });
  out.complete = out.elements.size() == out.cocommutative_dim;
  out.detail = std::to_string(out.elements.size()) + " group-likes; cocommutative subcoalgebra of dimension " +
               std::to_string(out.cocommutative_dim) + (lost ? "; some eigenvalues outside the search set" : "");
  return out;
}

}  // namespace hopfkit
