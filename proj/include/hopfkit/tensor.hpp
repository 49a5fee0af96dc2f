#pragma once

// Sparse elements of H, H⊗H and H⊗H⊗H over a scalar type V. A term's
// multi-index is packed into one 64-bit key, 21 bits per leg.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfkit/errors.hpp"

namespace hopfkit {

inline constexpr int kLegBits = 21;
inline constexpr std::uint64_t kLegMask = (1ull << kLegBits) - 1;
inline constexpr std::uint32_t kMaxDim = 1u << kLegBits;

inline std::uint64_t key1(std::uint32_t a) { return a; }
inline std::uint64_t key2(std::uint32_t a, std::uint32_t b) { return a | (std::uint64_t(b) << kLegBits); }
inline std::uint64_t key3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return a | (std::uint64_t(b) << kLegBits) | (std::uint64_t(c) << (2 * kLegBits));
}
inline std::uint32_t leg(std::uint64_t key, int n) {
  return static_cast<std::uint32_t>((key >> (kLegBits * n)) & kLegMask);
}

template <class V>
struct Tensor {
  int degree = 1;
  std::vector<std::pair<std::uint64_t, V>> terms;  // sorted by key, no zero coefficients

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  // Coefficient of a key, or nullptr when absent.
  const V* find(std::uint64_t key) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), key,
                               [](const auto& t, std::uint64_t k) { return t.first < k; });
    return (it != terms.end() && it->first == key) ? &it->second : nullptr;
  }
};

template <class F>
class Accumulator {
 public:
  using V = typename F::value_type;

  explicit Accumulator(const F& f) : f_(f) {}

  void add(std::uint64_t key, const V& v) {
    if (f_.is_zero(v)) return;
    auto [it, inserted] = map_.try_emplace(key, v);
    if (!inserted) f_.add_to(it->second, v);
  }
  void sub(std::uint64_t key, const V& v) { add(key, f_.neg(v)); }

  Tensor<V> finish(int degree) {
    Tensor<V> out;
    out.degree = degree;
    out.terms.reserve(map_.size());
    for (auto& [k, v] : map_)
      if (!f_.is_zero(v)) out.terms.emplace_back(k, std::move(v));
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    map_.clear();
    return out;
  }

  bool all_zero() const {
    for (const auto& [k, v] : map_)
      if (!f_.is_zero(v)) return false;
    return true;
  }

  const std::unordered_map<std::uint64_t, V>& raw() const { return map_; }

 private:
  F f_;  // by value: callers often pass a temporary field()
  std::unordered_map<std::uint64_t, V> map_;
};

template <class V, class F>
bool tensors_equal(const Tensor<V>& a, const Tensor<V>& b, const F& f) {
  if (a.degree != b.degree || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].first != b.terms[i].first || !f.eq(a.terms[i].second, b.terms[i].second)) return false;
  }
  return true;
}

}  // namespace hopfkit
