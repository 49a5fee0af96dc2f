#pragma once

// Structure-constant storage for finite-dimensional Hopf algebras and the
// element-level operations (product, coproduct, antipode, counit, tensor legs).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/modular.hpp"
#include "hopfkit/tensor.hpp"

namespace hopfkit {

template <class V>
struct Term {
  std::uint32_t index;
  V coeff;
};

template <class V>
struct PairTerm {
  std::uint32_t j;
  std::uint32_t k;
  V coeff;
};

// mult[i] holds (j, k, c) for b_i b_j = sum c b_k, sorted by (j, k).
// comult[i] holds (j, k, c) for Delta(b_i) = sum c b_j (x) b_k, sorted by (j, k).
// antipode[i] holds S(b_i), sorted by index.
template <class V>
struct Structure {
  std::uint32_t dim = 0;
  std::vector<std::vector<PairTerm<V>>> mult;
  std::vector<Term<V>> unit;
  std::vector<std::vector<PairTerm<V>>> comult;
  std::vector<V> counit;
  std::vector<std::vector<Term<V>>> antipode;

  using Range = std::pair<typename std::vector<PairTerm<V>>::const_iterator,
                          typename std::vector<PairTerm<V>>::const_iterator>;

  Range product(std::uint32_t i, std::uint32_t j) const {
    const auto& row = mult[i];
    auto lo = std::lower_bound(row.begin(), row.end(), j, [](const PairTerm<V>& t, std::uint32_t x) { return t.j < x; });
    auto hi = lo;
    while (hi != row.end() && hi->j == j) ++hi;
    return {lo, hi};
  }
};

template <class V>
bool operator==(const Term<V>& a, const Term<V>& b) {
  return a.index == b.index && a.coeff == b.coeff;
}
template <class V>
bool operator==(const PairTerm<V>& a, const PairTerm<V>& b) {
  return a.j == b.j && a.k == b.k && a.coeff == b.coeff;
}

template <class V>
bool structures_equal(const Structure<V>& a, const Structure<V>& b) {
  return a.dim == b.dim && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult && a.counit == b.counit &&
         a.antipode == b.antipode;
}

// Collects structure constants in any order; finish() merges duplicates and sorts.
template <class F>
class StructureBuilder {
 public:
  using V = typename F::value_type;

  StructureBuilder(std::uint32_t dim, const F& f)
      : f_(f), mult_(dim), comult_(dim), antipode_(dim), counit_(dim, f.zero()), dim_(dim) {
    if (dim >= kMaxDim) throw Error(ErrorKind::TooLarge, "dimension exceeds index packing limit");
  }

  void add_mult(std::uint32_t i, std::uint32_t j, std::uint32_t k, const V& c) { add(mult_.at(i), order_key(j, k), c); }
  void add_comult(std::uint32_t i, std::uint32_t j, std::uint32_t k, const V& c) {
    add(comult_.at(i), order_key(j, k), c);
  }
  void add_antipode(std::uint32_t i, std::uint32_t j, const V& c) { add(antipode_.at(i), j, c); }
  void add_unit(std::uint32_t k, const V& c) { add(unit_, k, c); }
  void set_counit(std::uint32_t i, const V& c) { counit_.at(i) = c; }

  Structure<V> finish() {
    Structure<V> s;
    s.dim = dim_;
    s.mult.resize(dim_);
    s.comult.resize(dim_);
    s.antipode.resize(dim_);
    for (std::uint32_t i = 0; i < dim_; ++i) {
      for (auto& [key, c] : mult_[i])
        if (!f_.is_zero(c)) s.mult[i].push_back({pair_first(key), pair_second(key), c});
      for (auto& [key, c] : comult_[i])
        if (!f_.is_zero(c)) s.comult[i].push_back({pair_first(key), pair_second(key), c});
      for (auto& [key, c] : antipode_[i])
        if (!f_.is_zero(c)) s.antipode[i].push_back({static_cast<std::uint32_t>(key), c});
    }
    for (auto& [key, c] : unit_)
      if (!f_.is_zero(c)) s.unit.push_back({static_cast<std::uint32_t>(key), c});
    s.counit = counit_;
    return s;
  }

 private:
  // Packed so that std::map iteration order is (j, k).
  static std::uint64_t order_key(std::uint32_t j, std::uint32_t k) { return (std::uint64_t(j) << 32) | k; }
  static std::uint32_t pair_first(std::uint64_t ok) { return static_cast<std::uint32_t>(ok >> 32); }
  static std::uint32_t pair_second(std::uint64_t ok) { return static_cast<std::uint32_t>(ok & 0xffffffffu); }

  void add(std::map<std::uint64_t, V>& m, std::uint64_t key, const V& c) {
    if (f_.is_zero(c)) return;
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) f_.add_to(it->second, c);
  }

  F f_;
  std::vector<std::map<std::uint64_t, V>> mult_, comult_, antipode_;
  std::map<std::uint64_t, V> unit_;
  std::vector<V> counit_;
  std::uint32_t dim_;
};

// Specializes every structure constant through a field policy (e.g. into F_ell).
template <class F>
Structure<typename F::value_type> map_structure(const Structure<CycNumber>& s, const F& f) {
  using V = typename F::value_type;
  Structure<V> out;
  out.dim = s.dim;
  auto conv_pairs = [&](const std::vector<std::vector<PairTerm<CycNumber>>>& in,
                        std::vector<std::vector<PairTerm<V>>>& dst) {
    dst.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      dst[i].reserve(in[i].size());
      for (const auto& t : in[i]) {
        V v = f.from(t.coeff);
        if (!f.is_zero(v)) dst[i].push_back({t.j, t.k, v});
      }
    }
  };
  conv_pairs(s.mult, out.mult);
  conv_pairs(s.comult, out.comult);
  for (const auto& t : s.unit) out.unit.push_back({t.index, f.from(t.coeff)});
  out.counit.reserve(s.counit.size());
  for (const auto& c : s.counit) out.counit.push_back(f.from(c));
  out.antipode.resize(s.antipode.size());
  for (std::size_t i = 0; i < s.antipode.size(); ++i)
    for (const auto& t : s.antipode[i]) {
      V v = f.from(t.coeff);
      if (!f.is_zero(v)) out.antipode[i].push_back({t.index, v});
    }
  return out;
}

struct NamedElement {
  std::string label;
  std::vector<std::pair<std::uint32_t, CycNumber>> terms;
};

class HopfAlgebra {
 public:
  std::string name;
  std::int64_t conductor = 1;
  std::vector<std::string> labels;
  Structure<CycNumber> s;
  std::vector<NamedElement> grouplikes;   // known group-likes (elements of H)
  std::vector<NamedElement> characters;   // distinguished characters (dual coordinates)
  bool certified = false;
  std::string certification;              // backend summary of the last certification

  std::uint32_t dim() const { return s.dim; }
  ExactField field() const { return ExactField{conductor}; }

  std::uint32_t index_of(const std::string& label) const {
    for (std::uint32_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    throw Error(ErrorKind::BadParameters, "no basis element labelled '" + label + "'");
  }
};

using Element = Tensor<CycNumber>;

inline Element to_element(const NamedElement& e) {
  Element out;
  for (const auto& [i, c] : e.terms)
    if (!c.is_zero()) out.terms.emplace_back(key1(i), c);
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

inline NamedElement to_named(const std::string& label, const Element& x) {
  if (x.degree != 1) throw Error(ErrorKind::DimensionMismatch, "named elements have degree 1");
  NamedElement out{label, {}};
  for (const auto& [k, c] : x.terms) out.terms.emplace_back(static_cast<std::uint32_t>(k), c);
  return out;
}

// Element-level operations over a structure and a field policy.
template <class F>
class Ops {
 public:
  using V = typename F::value_type;
  using T = Tensor<V>;

  Ops(const Structure<V>& s, F f) : s_(&s), f_(std::move(f)) {}

  const Structure<V>& structure() const { return *s_; }
  const F& field() const { return f_; }
  std::uint32_t dim() const { return s_->dim; }

  T basis(std::uint32_t i) const {
    check_index(i);
    T out;
    out.terms.emplace_back(key1(i), f_.one());
    return out;
  }

  T basis2(std::uint32_t i, std::uint32_t j) const {
    T out;
    out.degree = 2;
    out.terms.emplace_back(key2(i, j), f_.one());
    return out;
  }

  T unit() const {
    Accumulator<F> acc(f_);
    for (const auto& t : s_->unit) acc.add(key1(t.index), t.coeff);
    return acc.finish(1);
  }

  T unit_n(int degree) const {
    T u = unit();
    T out = u;
    for (int d = 1; d < degree; ++d) out = tensor(out, u);
    return out;
  }

  T scalar(const V& c) const {
    T u = unit();
    for (auto& t : u.terms) t.second = f_.mul(t.second, c);
    return u;
  }

  T zero(int degree = 1) const {
    T out;
    out.degree = degree;
    return out;
  }

  T add(const T& a, const T& b) const { return combine(a, b, false); }
  T sub(const T& a, const T& b) const { return combine(a, b, true); }

  T scale(const T& a, const V& c) const {
    T out;
    out.degree = a.degree;
    if (f_.is_zero(c)) return out;
    for (const auto& [k, v] : a.terms) {
      V w = f_.mul(v, c);
      if (!f_.is_zero(w)) out.terms.emplace_back(k, w);
    }
    return out;
  }

  bool equal(const T& a, const T& b) const { return tensors_equal(a, b, f_); }

  T mul(const T& a, const T& b) const {
    if (a.degree != b.degree) throw Error(ErrorKind::DimensionMismatch, "degree mismatch in product");
    Accumulator<F> acc(f_);
    const int t = a.degree;
    for (const auto& [ka, va] : a.terms) {
      for (const auto& [kb, vb] : b.terms) {
        V ab = f_.mul(va, vb);
        if (t == 1) {
          auto [lo, hi] = s_->product(leg(ka, 0), leg(kb, 0));
          for (auto it = lo; it != hi; ++it) acc.add(key1(it->k), f_.mul(ab, it->coeff));
        } else if (t == 2) {
          auto r0 = s_->product(leg(ka, 0), leg(kb, 0));
          if (r0.first == r0.second) continue;
          auto r1 = s_->product(leg(ka, 1), leg(kb, 1));
          for (auto i0 = r0.first; i0 != r0.second; ++i0) {
            V c0 = f_.mul(ab, i0->coeff);
            for (auto i1 = r1.first; i1 != r1.second; ++i1) acc.add(key2(i0->k, i1->k), f_.mul(c0, i1->coeff));
          }
        } else {
          auto r0 = s_->product(leg(ka, 0), leg(kb, 0));
          if (r0.first == r0.second) continue;
          auto r1 = s_->product(leg(ka, 1), leg(kb, 1));
          if (r1.first == r1.second) continue;
          auto r2 = s_->product(leg(ka, 2), leg(kb, 2));
          for (auto i0 = r0.first; i0 != r0.second; ++i0)
            for (auto i1 = r1.first; i1 != r1.second; ++i1) {
              V c01 = f_.mul(f_.mul(ab, i0->coeff), i1->coeff);
              for (auto i2 = r2.first; i2 != r2.second; ++i2)
                acc.add(key3(i0->k, i1->k, i2->k), f_.mul(c01, i2->coeff));
            }
        }
      }
    }
    return acc.finish(t);
  }

  T pow(const T& a, long e) const {
    if (e < 0) throw Error(ErrorKind::BadParameters, "negative power needs an inverse");
    T result = unit_n(a.degree);
    T base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return result;
  }

  // Delta on a degree-1 element.
  T delta(const T& a) const {
    require_degree(a, 1);
    Accumulator<F> acc(f_);
    for (const auto& [k, v] : a.terms)
      for (const auto& t : s_->comult[leg(k, 0)]) acc.add(key2(t.j, t.k), f_.mul(v, t.coeff));
    return acc.finish(2);
  }

  // Delta applied to leg `which` of a degree-2 element, giving degree 3.
  T delta_leg(const T& a, int which) const {
    require_degree(a, 2);
    Accumulator<F> acc(f_);
    for (const auto& [k, v] : a.terms) {
      std::uint32_t x = leg(k, 0), y = leg(k, 1);
      std::uint32_t src = which == 0 ? x : y;
      for (const auto& t : s_->comult[src]) {
        V c = f_.mul(v, t.coeff);
        acc.add(which == 0 ? key3(t.j, t.k, y) : key3(x, t.j, t.k), c);
      }
    }
    return acc.finish(3);
  }

  // S applied to one leg (or every leg when which < 0).
  T antipode(const T& a, int which = -1) const {
    T cur = a;
    for (int l = 0; l < a.degree; ++l) {
      if (which >= 0 && l != which) continue;
      Accumulator<F> acc(f_);
      for (const auto& [k, v] : cur.terms) {
        for (const auto& t : s_->antipode[leg(k, l)]) {
          std::uint64_t nk = (k & ~(kLegMask << (kLegBits * l))) | (std::uint64_t(t.index) << (kLegBits * l));
          acc.add(nk, f_.mul(v, t.coeff));
        }
      }
      cur = acc.finish(a.degree);
    }
    return cur;
  }

  V counit(const T& a) const {
    require_degree(a, 1);
    V out = f_.zero();
    for (const auto& [k, v] : a.terms) f_.add_to(out, f_.mul(v, s_->counit[leg(k, 0)]));
    return out;
  }

  // Counit applied to one leg of a degree-2 element.
  T counit_leg(const T& a, int which) const {
    require_degree(a, 2);
    Accumulator<F> acc(f_);
    for (const auto& [k, v] : a.terms) {
      const V& e = s_->counit[leg(k, which)];
      if (!f_.is_zero(e)) acc.add(key1(leg(k, 1 - which)), f_.mul(v, e));
    }
    return acc.finish(1);
  }

  T tensor(const T& a, const T& b) const {
    if (a.degree + b.degree > 3) throw Error(ErrorKind::DimensionMismatch, "tensor degree above 3");
    Accumulator<F> acc(f_);
    for (const auto& [ka, va] : a.terms)
      for (const auto& [kb, vb] : b.terms) acc.add(ka | (kb << (kLegBits * a.degree)), f_.mul(va, vb));
    return acc.finish(a.degree + b.degree);
  }

  // Swap the two legs of a degree-2 element.
  T flip(const T& a) const {
    require_degree(a, 2);
    T out;
    out.degree = 2;
    for (const auto& [k, v] : a.terms) out.terms.emplace_back(key2(leg(k, 1), leg(k, 0)), v);
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

  // Place the legs of a degree-2 element at positions (p, q) of a degree-3 element, unit elsewhere.
  T embed3(const T& a, int p, int q) const {
    require_degree(a, 2);
    int r = 3 - p - q;
    Accumulator<F> acc(f_);
    for (const auto& [k, v] : a.terms)
      for (const auto& u : s_->unit) {
        std::uint32_t idx[3];
        idx[p] = leg(k, 0);
        idx[q] = leg(k, 1);
        idx[r] = u.index;
        acc.add(key3(idx[0], idx[1], idx[2]), f_.mul(v, u.coeff));
      }
    return acc.finish(3);
  }

  // Multiply a degree-2 element's legs together: sum a_(1) a_(2).
  T multiply_legs(const T& a) const {
    require_degree(a, 2);
    Accumulator<F> acc(f_);
    for (const auto& [k, v] : a.terms) {
      auto [lo, hi] = s_->product(leg(k, 0), leg(k, 1));
      for (auto it = lo; it != hi; ++it) acc.add(key1(it->k), f_.mul(v, it->coeff));
    }
    return acc.finish(1);
  }

  T from_exact(const Tensor<CycNumber>& x) const {
    T out;
    out.degree = x.degree;
    for (const auto& [k, c] : x.terms) {
      V v = f_.from(c);
      if (!f_.is_zero(v)) out.terms.emplace_back(k, v);
    }
    return out;
  }

 private:
  void check_index(std::uint32_t i) const {
    if (i >= s_->dim) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  }
  static void require_degree(const T& a, int d) {
    if (a.degree != d) throw Error(ErrorKind::DimensionMismatch, "expected degree " + std::to_string(d));
  }

  T combine(const T& a, const T& b, bool negate) const {
    if (a.degree != b.degree) throw Error(ErrorKind::DimensionMismatch, "degree mismatch in sum");
    T out;
    out.degree = a.degree;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
        out.terms.push_back(a.terms[i++]);
      } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
        out.terms.emplace_back(b.terms[j].first, negate ? f_.neg(b.terms[j].second) : b.terms[j].second);
        ++j;
      } else {
        V v = negate ? f_.sub(a.terms[i].second, b.terms[j].second) : f_.add(a.terms[i].second, b.terms[j].second);
        if (!f_.is_zero(v)) out.terms.emplace_back(a.terms[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  const Structure<V>* s_;
  F f_;
};

inline Ops<ExactField> exact_ops(const HopfAlgebra& H) { return Ops<ExactField>(H.s, H.field()); }

}  // namespace hopfkit
