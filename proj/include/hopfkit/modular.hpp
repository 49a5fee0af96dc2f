#pragma once

// Finite-field images of cyclotomic scalars: pick a prime l = 1 mod N and an
// element of exact order N, then zeta_N maps to that element.

#include <cstdint>
#include <random>
#include <vector>

#include "hopfkit/cyclotomic.hpp"

namespace hopfkit {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimeSpecialization {
  std::uint64_t ell = 0;
  std::uint64_t image = 0;  // image of zeta_N
  std::int64_t conductor = 1;
};

// Primes are drawn from [2^30, 2^31) so that products of residues fit in 64 bits.
inline PrimeSpecialization choose_specialization(std::int64_t N, std::mt19937_64& rng) {
  const std::uint64_t lo = 1ull << 30, hi = 1ull << 31;
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
  auto factors = prime_factors(static_cast<std::uint64_t>(N));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::uint64_t start = dist(rng);
    std::uint64_t ell = start - (start % N) + 1;
    if (ell < lo) ell += N;
    for (int k = 0; k < 2000 && ell < hi; ++k, ell += N) {
      if (!is_prime_u64(ell)) continue;
      std::uniform_int_distribution<std::uint64_t> pick(2, ell - 1);
      for (int tries = 0; tries < 64; ++tries) {
        std::uint64_t r = powmod(pick(rng), (ell - 1) / N, ell);
        bool exact = (powmod(r, N, ell) == 1);
        for (auto p : factors) exact = exact && powmod(r, N / p, ell) != 1;
        if (exact) return PrimeSpecialization{ell, r, N};
      }
    }
  }
  throw Error(ErrorKind::NoSuitablePrime, "no prime = 1 mod " + std::to_string(N) + " found");
}

inline std::uint64_t rational_mod(const Rational& q, std::uint64_t ell) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), ell);
  if (den == 0) throw Error(ErrorKind::BadDenominator, "denominator divisible by " + std::to_string(ell));
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), ell);
  return mulmod(num, powmod(den, ell - 2, ell), ell);
}

// Ring homomorphism to F_ell; a's conductor must divide the specialization's.
inline std::uint64_t specialize(const CycNumber& a, const PrimeSpecialization& s) {
  if (s.conductor % a.conductor() != 0)
    throw Error(ErrorKind::NotDivisible, "value conductor does not divide specialization conductor");
  std::uint64_t step_root = powmod(s.image, static_cast<std::uint64_t>(s.conductor / a.conductor()), s.ell);
  std::uint64_t acc = 0;
  for (const auto& [e, v] : a.terms()) {
    acc = (acc + mulmod(rational_mod(v, s.ell), powmod(step_root, e, s.ell), s.ell)) % s.ell;
  }
  return acc;
}

// Field policies used by the generic linear algebra and verification code.
struct ExactField {
  using value_type = CycNumber;
  std::int64_t conductor = 1;

  value_type zero() const { return CycNumber::zero(conductor); }
  value_type one() const { return CycNumber::one(conductor); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_one(const value_type& a) const { return a.is_one(); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  void add_to(value_type& acc, const value_type& a) const { acc += a; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type from(const CycNumber& c) const { return c; }
  std::string str(const value_type& a) const { return a.to_string(); }
};

struct ModField {
  using value_type = std::uint64_t;
  PrimeSpecialization spec;

  std::uint64_t p() const { return spec.ell; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const {
    value_type r = a + b;
    return r >= spec.ell ? r - spec.ell : r;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + spec.ell - b; }
  value_type mul(value_type a, value_type b) const { return a * b % spec.ell; }
  value_type neg(value_type a) const { return a == 0 ? 0 : spec.ell - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero mod p");
    return powmod(a, spec.ell - 2, spec.ell);
  }
  void add_to(value_type& acc, value_type a) const { acc = add(acc, a); }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type from(const CycNumber& c) const { return specialize(c, spec); }
  std::string str(value_type a) const { return std::to_string(a); }
};

}  // namespace hopfkit
