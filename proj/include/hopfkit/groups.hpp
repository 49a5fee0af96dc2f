#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hopfkit/errors.hpp"

namespace hopfkit {

class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;

  // Builds and validates a table; `mul(a, b)` returns the index of ab.
  FiniteGroupTable(std::uint32_t order, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                   std::vector<std::string> labels)
      : n_(order), table_(std::size_t(order) * order), labels_(std::move(labels)) {
    if (labels_.size() != n_) throw Error(ErrorKind::DimensionMismatch, "one label per group element required");
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b) {
        auto c = mul(a, b);
        if (c >= n_) throw Error(ErrorKind::BadParameters, "product outside the group");
        table_[std::size_t(a) * n_ + b] = c;
      }
    validate();
  }

  std::uint32_t order() const { return n_; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[std::size_t(a) * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const std::string& label(std::uint32_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::uint32_t pow(std::uint32_t a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    std::uint32_t r = id_;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::uint32_t element_order(std::uint32_t a) const {
    std::uint32_t k = 1, x = a;
    while (x != id_) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::uint32_t index_of(const std::string& label) const {
    for (std::uint32_t i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    throw Error(ErrorKind::BadParameters, "no group element labelled '" + label + "'");
  }

  // Exponent of G/[G,G]; the smallest conductor holding all linear characters.
  std::uint32_t abelianization_exponent() const {
    std::vector<char> in(n_, 0);
    std::vector<std::uint32_t> sub{id_};
    in[id_] = 1;
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b) {
        auto c = mul(mul(a, b), mul(inv(a), inv(b)));
        if (!in[c]) {
          in[c] = 1;
          sub.push_back(c);
        }
      }
    for (std::size_t i = 0; i < sub.size(); ++i)  // close under products
      for (std::size_t j = 0; j <= i; ++j)
        for (auto c : {mul(sub[i], sub[j]), mul(sub[j], sub[i])})
          if (!in[c]) {
            in[c] = 1;
            sub.push_back(c);
          }
    std::uint32_t e = 1;
    for (std::uint32_t a = 0; a < n_; ++a) {
      std::uint32_t k = 1, x = a;
      while (!in[x]) {
        x = mul(x, a);
        ++k;
      }
      e = std::lcm(e, k);
    }
    return e;
  }

 private:
  void validate() {
    bool found = false;
    for (std::uint32_t e = 0; e < n_ && !found; ++e) {
      bool ok = true;
      for (std::uint32_t a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        id_ = e;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::BadParameters, "table has no two-sided identity");
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error(ErrorKind::BadParameters, "table is not associative");
    inv_.assign(n_, n_);
    for (std::uint32_t a = 0; a < n_; ++a) {
      std::uint32_t count = 0;
      for (std::uint32_t b = 0; b < n_; ++b)
        if (mul(a, b) == id_ && mul(b, a) == id_) {
          inv_[a] = b;
          ++count;
        }
      if (count != 1) throw Error(ErrorKind::BadParameters, "element without a unique inverse");
    }
  }

  std::uint32_t n_ = 0;
  std::uint32_t id_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::string> labels_;
};

inline std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t pow_mod_int(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = mod_pos(base, m);
  for (std::int64_t i = 0; i < e; ++i) r = (r * base) % m;
  return r;
}

inline std::string metacyclic_label(std::int64_t i, std::int64_t j) {
  return "a^" + std::to_string(i) + " b^" + std::to_string(j);
}

// <a, b | a^m = b^n = 1, b a b^-1 = a^l>; element a^i b^j has index i*n + j.
inline FiniteGroupTable metacyclic_group(std::int64_t m, std::int64_t n, std::int64_t l) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadParameters, "group orders must be positive");
  if (pow_mod_int(l, n, m) != 1 % m)
    throw Error(ErrorKind::BadParameters, "l^n = " + std::to_string(pow_mod_int(l, n, m)) + " mod " +
                                              std::to_string(m) + ", expected 1");
  std::vector<std::string> labels;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < n; ++j) labels.push_back(metacyclic_label(i, j));
  auto mul = [m, n, l](std::uint32_t x, std::uint32_t y) {
    std::int64_t i = x / n, j = x % n, k = y / n, jj = y % n;
    // a^i b^j a^k b^jj = a^(i + k l^j) b^(j + jj)
    std::int64_t ni = mod_pos(i + k * pow_mod_int(l, j, m), m);
    std::int64_t nj = (j + jj) % n;
    return static_cast<std::uint32_t>(ni * n + nj);
  };
  return FiniteGroupTable(static_cast<std::uint32_t>(m * n), mul, labels);
}

inline FiniteGroupTable cyclic_group(std::int64_t n, const std::string& gen = "g") {
  std::vector<std::string> labels;
  for (std::int64_t i = 0; i < n; ++i) labels.push_back(gen + "^" + std::to_string(i));
  return FiniteGroupTable(static_cast<std::uint32_t>(n), [n](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>((a + b) % n);
  }, labels);
}

}  // namespace hopfkit
