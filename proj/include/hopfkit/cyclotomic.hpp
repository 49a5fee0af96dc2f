#pragma once

// Exact arithmetic in Q(zeta_N): elements are residues mod Phi_N in the power
// basis {1, z, ..., z^(phi(N)-1)}, stored sparsely (nonzero coordinates only).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/errors.hpp"

namespace hopfkit {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::int64_t kDefaultConductorBound = 1000000;

inline std::int64_t& conductor_bound() {
  static std::int64_t bound = kDefaultConductorBound;
  return bound;
}

namespace detail {

// Dense integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; divisor must be monic.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return IntPoly{0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  trim(num);
  if (!num.empty()) throw Error(ErrorKind::NotDivisible, "polynomial division left a remainder");
  return quot;
}

inline IntPoly mul_poly(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Sparse integer vector in the power basis.
using PowerRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

struct CyclotomicData {
  std::int64_t N = 1;
  std::uint32_t phi = 1;
  IntPoly poly;                 // Phi_N, monic, degree phi
  std::deque<PowerRow> powers;  // stable references; powers[k] = x^k mod Phi_N for k < N (filled lazily)
  std::mutex mu;

  const PowerRow& power(std::int64_t k) {
    k %= N;
    if (k < 0) k += N;
    std::lock_guard<std::mutex> lock(mu);
    if (powers.empty()) {
      for (std::uint32_t i = 0; i < phi; ++i) powers.push_back(PowerRow{{i, 1}});
    }
    while (static_cast<std::int64_t>(powers.size()) <= k) {
      // x * previous row, then fold the x^phi term via x^phi = -sum poly[i] x^i.
      const PowerRow& prev = powers.back();
      std::vector<std::int64_t> dense(phi, 0);
      std::int64_t top = 0;
      for (auto [e, c] : prev) {
        if (e + 1 == phi)
          top = c;
        else
          dense[e + 1] += c;
      }
      if (top != 0) {
        for (std::uint32_t i = 0; i < phi; ++i) {
          Integer v = Integer(dense[i]) - Integer(top) * poly[i];
          if (!v.fits_slong_p()) throw Error(ErrorKind::Overflow, "power table entry overflow");
          dense[i] = v.get_si();
        }
      }
      PowerRow row;
      for (std::uint32_t i = 0; i < phi; ++i)
        if (dense[i] != 0) row.emplace_back(i, dense[i]);
      powers.push_back(std::move(row));
    }
    return powers[static_cast<std::size_t>(k)];
  }
};

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

class CyclotomicRegistry {
 public:
  static CyclotomicRegistry& instance() {
    static CyclotomicRegistry reg;
    return reg;
  }

  CyclotomicData& get(std::int64_t N) {
    if (N < 1) throw Error(ErrorKind::BadParameters, "conductor must be positive");
    if (N > conductor_bound())
      throw Error(ErrorKind::ConductorOverflow, "conductor " + std::to_string(N) + " exceeds bound");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = data_.find(N);
    if (it != data_.end()) return *it->second;
    auto d = std::make_unique<CyclotomicData>();
    d->N = N;
    d->poly = compute_poly(N);
    d->phi = static_cast<std::uint32_t>(d->poly.size() - 1);
    auto& ref = *d;
    data_.emplace(N, std::move(d));
    return ref;
  }

 private:
  IntPoly compute_poly(std::int64_t N) {
    IntPoly num(static_cast<std::size_t>(N) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(N)] = 1;
    IntPoly den{1};
    for (std::int64_t d : divisors(N)) {
      if (d == N) continue;
      den = mul_poly(den, get(d).poly);
    }
    return divide_monic(num, den);
  }

  std::recursive_mutex mu_;
  std::map<std::int64_t, std::unique_ptr<CyclotomicData>> data_;
};

}  // namespace detail

// Returns Phi_N with integer coefficients, lowest degree first.
inline std::vector<Integer> cyclotomic_poly(std::int64_t N) {
  return detail::CyclotomicRegistry::instance().get(N).poly;
}

inline std::uint32_t euler_phi(std::int64_t N) { return detail::CyclotomicRegistry::instance().get(N).phi; }

inline std::int64_t lcm_conductor(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > conductor_bound()) throw Error(ErrorKind::ConductorOverflow, "lcm of conductors exceeds bound");
  return static_cast<std::int64_t>(l);
}

class CycNumber {
 public:
  using Term = std::pair<std::uint32_t, Rational>;

  CycNumber() = default;
  CycNumber(long v) : CycNumber(Rational(v)) {}  // NOLINT: implicit from integers is convenient
  CycNumber(int v) : CycNumber(Rational(v)) {}   // NOLINT
  CycNumber(const Rational& r, std::int64_t N = 1) : N_(N) {  // NOLINT
    if (r != 0) terms_.emplace_back(0u, r);
  }

  // zeta_N^k
  static CycNumber root_of_unity(std::int64_t N, std::int64_t k) {
    CycNumber out;
    out.N_ = N;
    out.add_power_scaled(k, Rational(1));
    return out;
  }

  static CycNumber from_coeffs(std::int64_t N, const std::vector<Rational>& c) {
    CycNumber out;
    out.N_ = N;
    auto phi = euler_phi(N);
    if (c.size() > phi) throw Error(ErrorKind::DimensionMismatch, "coefficient vector longer than phi(N)");
    for (std::uint32_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) out.terms_.emplace_back(i, c[i]);
    return out;
  }

  std::int64_t conductor() const { return N_; }
  const std::vector<Term>& terms() const { return terms_; }

  std::vector<Rational> coeffs() const {
    std::vector<Rational> c(euler_phi(N_), Rational(0));
    for (const auto& [e, v] : terms_) c[e] = v;
    return c;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
  Rational rational_part() const { return (!terms_.empty() && terms_[0].first == 0) ? terms_[0].second : Rational(0); }

  // Smallest conductor dividing N_ that still represents this value is not tracked;
  // conductor only grows through unification.
  CycNumber embed(std::int64_t M) const {
    if (M % N_ != 0)
      throw Error(ErrorKind::NotDivisible, "conductor " + std::to_string(N_) + " does not divide " + std::to_string(M));
    if (M == N_) return *this;
    CycNumber out;
    out.N_ = M;
    std::int64_t step = M / N_;
    for (const auto& [e, v] : terms_) out.add_power_scaled(static_cast<std::int64_t>(e) * step, v);
    return out;
  }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.N_ == b.N_) return a.terms_ == b.terms_;
    if (a.is_rational() && b.is_rational()) return a.rational_part() == b.rational_part();
    std::int64_t M = lcm_conductor(a.N_, b.N_);
    return a.embed(M).terms_ == b.embed(M).terms_;
  }
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  CycNumber operator-() const {
    CycNumber out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  CycNumber& operator+=(const CycNumber& b) { return accumulate(b, 1); }
  CycNumber& operator-=(const CycNumber& b) { return accumulate(b, -1); }

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.terms_.empty() || b.terms_.empty()) {
      CycNumber z;
      z.N_ = (a.N_ == b.N_) ? a.N_ : unify_for_zero(a.N_, b.N_);
      return z;
    }
    if (a.is_rational() && (b.N_ % a.N_ == 0)) return b.scaled(a.terms_[0].second);
    if (b.is_rational() && (a.N_ % b.N_ == 0)) return a.scaled(b.terms_[0].second);
    if (a.N_ != b.N_) {
      std::int64_t M = lcm_conductor(a.N_, b.N_);
      return a.embed(M) * b.embed(M);
    }
    CycNumber out;
    out.N_ = a.N_;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
      out.add_power_scaled(static_cast<std::int64_t>(a.terms_[0].first) + b.terms_[0].first,
                           a.terms_[0].second * b.terms_[0].second);
      return out;
    }
    auto phi = euler_phi(a.N_);
    std::vector<Rational> acc(2 * phi, Rational(0));
    std::vector<char> used(2 * phi, 0);
    for (const auto& [ea, va] : a.terms_)
      for (const auto& [eb, vb] : b.terms_) {
        acc[ea + eb] += va * vb;
        used[ea + eb] = 1;
      }
    std::vector<Rational> low(phi, Rational(0));
    auto& data = detail::CyclotomicRegistry::instance().get(a.N_);
    for (std::uint32_t k = 0; k < 2 * phi; ++k) {
      if (!used[k] || acc[k] == 0) continue;
      if (k < phi) {
        low[k] += acc[k];
      } else {
        for (auto [e, c] : data.power(k)) low[e] += acc[k] * c;
      }
    }
    for (std::uint32_t i = 0; i < phi; ++i)
      if (low[i] != 0) out.terms_.emplace_back(i, std::move(low[i]));
    return out;
  }
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  CycNumber inverse() const;

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
  CycNumber& operator/=(const CycNumber& b) { return *this = *this / b; }

  CycNumber pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber result = CycNumber::one(N_);
    CycNumber base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  static CycNumber one(std::int64_t N = 1) { return CycNumber(Rational(1), N); }
  static CycNumber zero(std::int64_t N = 1) { return CycNumber(Rational(0), N); }

  // Literal form: terms in increasing exponent, e.g. "3-1/2*z^5".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, v] : terms_) {
      std::string c = v.get_str();
      if (!first && c[0] != '-') s += '+';
      s += c;
      if (e > 0) s += "*z^" + std::to_string(e);
      first = false;
    }
    return s;
  }

  // Reinterprets at conductor M >= N_ only if N_ | M; used when a whole algebra moves conductor.
  void set_conductor_unchecked(std::int64_t M) { N_ = M; }

 private:
  static std::int64_t unify_for_zero(std::int64_t a, std::int64_t b) {
    if (a % b == 0) return a;
    if (b % a == 0) return b;
    return lcm_conductor(a, b);
  }

  CycNumber scaled(const Rational& r) const {
    CycNumber out;
    out.N_ = N_;
    if (r == 0) return out;
    out.terms_ = terms_;
    if (r != 1)
      for (auto& t : out.terms_) t.second *= r;
    return out;
  }

  // this += r * z^k, with k reduced into the power basis.
  void add_power_scaled(std::int64_t k, const Rational& r) {
    if (r == 0) return;
    auto& data = detail::CyclotomicRegistry::instance().get(N_);
    std::int64_t kk = k % N_;
    if (kk < 0) kk += N_;
    if (kk < static_cast<std::int64_t>(data.phi)) {
      add_term(static_cast<std::uint32_t>(kk), r);
      return;
    }
    for (auto [e, c] : data.power(kk)) add_term(e, r * c);
  }

  void add_term(std::uint32_t e, const Rational& r) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::uint32_t x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
      it->second += r;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{e, r});
    }
  }

  CycNumber& accumulate(const CycNumber& b, int sign) {
    if (b.terms_.empty()) {
      if (N_ != b.N_ && b.N_ % N_ == 0) *this = embed(b.N_);
      return *this;
    }
    if (N_ != b.N_) {
      if (is_rational() && b.N_ % N_ == 0) {
        N_ = b.N_;
      } else if (b.is_rational() && N_ % b.N_ == 0) {
        // b fits at our conductor
      } else {
        std::int64_t M = lcm_conductor(N_, b.N_);
        *this = embed(M);
        return accumulate(b.embed(M), sign);
      }
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + b.terms_.size());
    auto i = terms_.begin();
    auto j = b.terms_.begin();
    while (i != terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        merged.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        merged.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
        ++j;
      } else {
        Rational v = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
        if (v != 0) merged.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  std::int64_t N_ = 1;
  std::vector<Term> terms_;
};

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (q, r) with a = q*b + r over Q.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly r(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

}  // namespace detail

inline CycNumber CycNumber::inverse() const {
  if (terms_.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (terms_.size() == 1) {
    CycNumber out;
    out.N_ = N_;
    out.add_power_scaled(-static_cast<std::int64_t>(terms_[0].first), 1 / terms_[0].second);
    return out;
  }
  // Extended Euclid on (a, Phi_N): s*a + t*Phi = 1.
  auto& data = detail::CyclotomicRegistry::instance().get(N_);
  detail::QPoly phi_poly(data.poly.begin(), data.poly.end());
  detail::QPoly a = coeffs();
  detail::trim(a);
  detail::QPoly r0 = phi_poly, r1 = a;
  detail::QPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = detail::divmod(r0, r1);
    detail::QPoly s2 = detail::sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible and a != 0 mod Phi_N.
  if (r0.size() != 1) throw Error(ErrorKind::DivisionByZero, "non-invertible cyclotomic element");
  Rational c = 1 / r0[0];
  CycNumber out;
  out.N_ = N_;
  for (std::size_t i = 0; i < s0.size(); ++i)
    if (s0[i] != 0) out.add_power_scaled(static_cast<std::int64_t>(i), s0[i] * c);
  return out;
}

// Parses a scalar literal at conductor N. Accepts the documented grammar
// `(int | int/posint)[*z^exp]` joined by +/-; also bare `z`, `z^e` and `z_M^e`
// (explicit root order M, which must divide N).
inline CycNumber parse_scalar(const std::string& text, std::int64_t N) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Syntax, "scalar literal '" + text + "' at column " + std::to_string(pos + 1) + ": " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return text.substr(start, pos - start);
  };
  CycNumber total = CycNumber::zero(N);
  skip_ws();
  if (pos == text.size()) fail("empty literal");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_int();
      coef = Rational(Integer(num));
      have_coef = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        Integer den(read_int());
        if (den == 0) fail("zero denominator");
        coef = Rational(Integer(num), den);
        coef.canonicalize();
      }
      skip_ws();
    }
    std::int64_t exponent = 0;
    std::int64_t order = N;
    bool have_z = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coef) fail("dangling '*'");
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'z') fail("expected 'z' after '*'");
    }
    if (pos < text.size() && text[pos] == 'z') {
      have_z = true;
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '_') {
        ++pos;
        order = std::stoll(read_int());
        if (order < 1) fail("root order must be positive");
        if (N % order != 0)
          throw Error(ErrorKind::ConductorMismatch,
                      "root order " + std::to_string(order) + " does not divide conductor " + std::to_string(N));
      }
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < text.size() && text[pos] == '-') {
          esign = -1;
          ++pos;
        }
        exponent = esign * std::stoll(read_int());
      }
      skip_ws();
    }
    if (!have_coef && !have_z) fail("expected a term");
    CycNumber term = have_z ? CycNumber::root_of_unity(N, exponent * (N / order)) : CycNumber::one(N);
    total += term * CycNumber(Rational(sign * coef), N);
  }
  return total;
}

inline std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.to_string(); }

}  // namespace hopfkit
