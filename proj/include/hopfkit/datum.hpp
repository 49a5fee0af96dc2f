#pragma once

// Integer linear algebra over products of cyclic groups and the datum-level
// hypothesis checks for quotients of doubles of pointed Hopf algebras.
//
// Groups are G = Z_{o_1} x ... x Z_{o_m}; elements and characters are integer
// exponent vectors. chi(e_k) = zeta_{o_k}^{c_k}, so pairings are computed as
// exponents of zeta_E with E = lcm(o_k).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/errors.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using LongMatrix = std::vector<std::vector<long>>;

inline IntMatrix to_int_matrix(const LongMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long v : m[i]) out[i].emplace_back(v);
  return out;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix I(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

inline IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<mpz_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Fraction-free Bareiss elimination; exact over Z.
inline mpz_class determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct SmithForm {
  IntMatrix U, D, V;              // U * M * V == D
  std::vector<mpz_class> diagonal;  // d_1 | d_2 | ..., nonnegative, length min(rows, cols)
  std::size_t rank = 0;
};

inline SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.size(), n = m ? M[0].size() : 0;
  SmithForm s{identity_matrix(m), M, identity_matrix(n), {}, 0};
  auto& A = s.D;
  auto row_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {  // row_dst -= q row_src
    for (std::size_t j = 0; j < n; ++j) A[dst][j] -= q * A[src][j];
    for (std::size_t j = 0; j < m; ++j) s.U[dst][j] -= q * s.U[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {  // col_dst -= q col_src
    for (std::size_t i = 0; i < m; ++i) A[i][dst] -= q * A[i][src];
    for (std::size_t i = 0; i < n; ++i) s.V[i][dst] -= q * s.V[i][src];
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    std::swap(s.U[a], s.U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : s.V) std::swap(row[a], row[b]);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A[i][j] != 0 && (pi == m || abs(A[i][j]) < abs(A[pi][pj]))) pi = i, pj = j;
      if (pi == m) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        row_op(i, t, q);
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        col_op(j, t, q);
        if (A[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and reduce again.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, -1);
    }
    if (A[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) A[t][j] = -A[t][j];
      for (std::size_t j = 0; j < m; ++j) s.U[t][j] = -s.U[t][j];
    }
  }
  for (std::size_t t = 0; t < steps; ++t) {
    s.diagonal.push_back(A[t][t]);
    if (A[t][t] != 0) ++s.rank;
  }
  return s;
}

// Integer solution of C w = b, or nullopt.
inline std::optional<std::vector<mpz_class>> solve_integer_system(const IntMatrix& C, const std::vector<mpz_class>& b) {
  const std::size_t m = C.size(), n = m ? C[0].size() : 0;
  SmithForm s = smith_normal_form(C);
  std::vector<mpz_class> ub(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ub[i] += s.U[i][j] * b[j];
  std::vector<mpz_class> w(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const mpz_class d = i < std::min(m, n) ? s.D[i][i] : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % d != 0) return std::nullopt;
    w[i] = ub[i] / d;
  }
  std::vector<mpz_class> x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += s.V[i][j] * w[j];
  return x;
}

// ---------------------------------------------------------------------------
// Finite abelian groups as exponent vectors.

inline long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

inline long lcm_of(const std::vector<long>& v) {
  long e = 1;
  for (long x : v) e = std::lcm(e, x);
  return e;
}

inline long element_order(const std::vector<long>& orders, const std::vector<long>& v) {
  long o = 1;
  for (std::size_t k = 0; k < orders.size(); ++k) o = std::lcm(o, orders[k] / std::gcd(mod_floor(v[k], orders[k]), orders[k]));
  return o;
}

// Exponent e with chi(g) = zeta_E^e, E = lcm(orders).
inline long pairing_exponent(const std::vector<long>& orders, const std::vector<long>& chi, const std::vector<long>& g) {
  const long E = lcm_of(orders);
  __int128 acc = 0;
  for (std::size_t k = 0; k < orders.size(); ++k)
    acc += static_cast<__int128>(mod_floor(chi[k], orders[k])) * mod_floor(g[k], orders[k]) * (E / orders[k]);
  return static_cast<long>(acc % E);
}

// Order of the subgroup of prod Z_{orders} generated by gens.
inline mpz_class subgroup_order(const std::vector<long>& orders, const LongMatrix& gens) {
  const std::size_t m = orders.size();
  IntMatrix L;
  for (const auto& g : gens) {
    std::vector<mpz_class> row;
    for (std::size_t k = 0; k < m; ++k) row.emplace_back(mod_floor(g[k], orders[k]));
    L.push_back(row);
  }
  mpz_class total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<mpz_class> row(m, 0);
    row[k] = orders[k];
    L.push_back(row);
    total *= orders[k];
  }
  SmithForm s = smith_normal_form(L);
  mpz_class index = 1;
  for (const auto& d : s.diagonal) index *= d;
  return total / index;
}

// y in prod Z_{orders} with sum_k A[j][k] y_k (E/o_k) = rhs[j] mod E for all j.
inline std::optional<std::vector<long>> solve_exponent_system(const std::vector<long>& orders, const LongMatrix& A,
                                                              const std::vector<long>& rhs) {
  const long E = lcm_of(orders);
  const std::size_t m = orders.size(), eqs = A.size();
  IntMatrix C(eqs, std::vector<mpz_class>(m + eqs, 0));
  std::vector<mpz_class> b(eqs);
  for (std::size_t j = 0; j < eqs; ++j) {
    for (std::size_t k = 0; k < m; ++k) C[j][k] = mpz_class(A[j][k]) * (E / orders[k]);
    C[j][m + j] = E;
    b[j] = mod_floor(rhs[j], E);
  }
  auto w = solve_integer_system(C, b);
  if (!w) return std::nullopt;
  std::vector<long> y(m);
  for (std::size_t k = 0; k < m; ++k) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), (*w)[k].get_mpz_t(), static_cast<unsigned long>(orders[k]));
    y[k] = r.get_si();
  }
  return y;
}

// ---------------------------------------------------------------------------
// Systems x M = 0 with x_i in Z_{n_i} and column j read mod n_j.

struct ZModSystem {
  LongMatrix M;
  std::vector<long> moduli;

  ZModSystem() = default;
  // Entries reduced mod the column modulus. Requires n_j | n_i m_ij so that the
  // map x -> x M is a well-defined homomorphism.
  ZModSystem(LongMatrix m, std::vector<long> n) : M(std::move(m)), moduli(std::move(n)) {
    const std::size_t s = moduli.size();
    if (M.size() != s) throw Error(ErrorKind::DimensionMismatch, "system matrix and moduli disagree");
    for (long v : moduli)
      if (v < 1) throw Error(ErrorKind::BadParameters, "moduli must be positive");
    for (std::size_t i = 0; i < s; ++i) {
      if (M[i].size() != s) throw Error(ErrorKind::DimensionMismatch, "system matrix is not square");
      for (std::size_t j = 0; j < s; ++j) {
        M[i][j] = mod_floor(M[i][j], moduli[j]);
        if ((static_cast<__int128>(moduli[i]) * M[i][j]) % moduli[j] != 0)
          throw Error(ErrorKind::BadParameters, "row " + std::to_string(i) + " is not well defined mod " +
                                                    std::to_string(moduli[i]) + " in column " + std::to_string(j));
      }
    }
  }
  std::size_t size() const { return moduli.size(); }
};

struct SolutionCount {
  bool unique = false;
  mpz_class count = 0;
  std::vector<std::string> backends;  // every backend that produced the count
  std::vector<long> witness;          // a nonzero solution when not unique and brute force ran
};

namespace detail {

inline std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline int valuation(long n, long p) {
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

inline long ipow(long p, int e) {
  long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

inline long mul_mod(long a, long b, long m) { return static_cast<long>(static_cast<__int128>(a) * b % m); }

inline long inverse_mod(long a, long m) {
  long g = m, x = 0, y = 1, aa = mod_floor(a, m);
  long r = aa;
  while (r != 0) {
    long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  if (g != 1) throw Error(ErrorKind::NotInvertible, "no inverse mod " + std::to_string(m));
  return mod_floor(x, m);
}

// Local elimination at p: |ker| of the p-primary part of x -> x M.
inline mpz_class local_kernel_size(const ZModSystem& S, long p) {
  const std::size_t s = S.size();
  std::vector<int> a(s), b(s);
  int B = 0, sum_a = 0, sum_b = 0;
  for (std::size_t i = 0; i < s; ++i) {
    a[i] = valuation(S.moduli[i], p);
    b[i] = valuation(S.moduli[i], p);
    B = std::max(B, b[i]);
    sum_a += a[i];
    sum_b += b[i];
  }
  mpz_class pa, pb;
  mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(sum_a));
  if (B == 0) return pa;
  const long PB = ipow(p, B);
  // Rows: images of the p-part generators (n_i / p^{a_i}) e_i, then p^{b_j} e_j.
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i] == 0) continue;
    const long u = S.moduli[i] / ipow(p, a[i]);
    std::vector<long> r(s);
    for (std::size_t j = 0; j < s; ++j) r[j] = mod_floor(mul_mod(u, S.M[i][j], ipow(p, b[j])), PB);
    rows.push_back(r);
  }
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<long> r(s, 0);
    r[j] = ipow(p, b[j]) % PB;
    rows.push_back(r);
  }
  // Elimination over Z/p^B with minimal-valuation pivots.
  auto val = [&](long x) { return x == 0 ? B : std::min(B, valuation(x, p)); };
  int index_exp = 0;
  std::vector<bool> row_used(rows.size(), false), col_used(s, false);
  for (std::size_t step = 0; step < s; ++step) {
    std::size_t pr = rows.size(), pc = s;
    int best = B + 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < s; ++c)
        if (!col_used[c] && rows[r][c] != 0 && val(rows[r][c]) < best) best = val(rows[r][c]), pr = r, pc = c;
    }
    if (pr == rows.size()) {
      index_exp += B * static_cast<int>(s - step);  // remaining columns vanish mod p^B
      break;
    }
    index_exp += best;
    row_used[pr] = col_used[pc] = true;
    const long pv = ipow(p, best);
    const long unit_inv = inverse_mod(rows[pr][pc] / pv, PB);
    for (auto& x : rows[pr]) x = mul_mod(x, unit_inv, PB);  // pivot becomes p^best
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][pc] == 0) continue;
      const long q = rows[r][pc] / pv;  // exact: valuation >= best
      for (std::size_t c = 0; c < s; ++c) rows[r][c] = mod_floor(rows[r][c] - mul_mod(q, rows[pr][c], PB), PB);
    }
    // Column operations clear the pivot row without changing the lattice index.
    for (std::size_t c = 0; c < s; ++c)
      if (c != pc) rows[pr][c] = 0;
  }
  // |image| = p^{sum b} / p^{index_exp}; |ker| = p^{sum a} / |image|.
  mpz_pow_ui(pb.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(sum_b - index_exp));
  return pa / pb;
}

}  // namespace detail

// Per-prime local elimination.
inline mpz_class kernel_size_local(const ZModSystem& S) {
  long all = 1;
  for (long n : S.moduli) all = std::lcm(all, n);
  mpz_class count = 1;
  for (long p : detail::prime_factors(all)) count *= detail::local_kernel_size(S, p);
  return count;
}

// Lattice index via Smith normal form over Z: |ker| = |domain| * index / |codomain|.
inline mpz_class kernel_size_lattice(const ZModSystem& S) {
  mpz_class image = subgroup_order(S.moduli, S.M);
  mpz_class domain = 1;
  for (long n : S.moduli) domain *= n;
  return domain / image;
}

// Enumeration; returns count and the first nonzero solution found.
inline std::pair<mpz_class, std::vector<long>> kernel_size_brute(const ZModSystem& S) {
  const std::size_t s = S.size();
  std::vector<long> x(s, 0), first;
  std::uint64_t count = 0;
  while (true) {
    bool zero = true;
    for (std::size_t j = 0; j < s && zero; ++j) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < s; ++i) acc += static_cast<__int128>(x[i]) * S.M[i][j];
      if (acc % S.moduli[j] != 0) zero = false;
    }
    if (zero) {
      ++count;
      if (first.empty() && std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) first = x;
    }
    std::size_t k = 0;
    while (k < s && ++x[k] == S.moduli[k]) x[k++] = 0;
    if (k == s) break;
  }
  return {mpz_class(static_cast<unsigned long>(count)), first};
}

// Decides whether x = 0 is the only solution. Elimination and lattice backends always
// run; brute force runs when the domain has at most brute_limit elements. Any
// disagreement throws.
inline SolutionCount unique_solution_check(const ZModSystem& S, double brute_limit = 1e7) {
  SolutionCount out;
  double domain = 1;
  for (long n : S.moduli) domain *= static_cast<double>(n);
  if (domain > 9e18) throw Error(ErrorKind::Overflow, "domain too large for exact counting");
  out.count = kernel_size_local(S);
  out.backends.push_back("local-elimination");
  mpz_class lattice = kernel_size_lattice(S);
  if (lattice != out.count)
    throw Error(ErrorKind::ConventionFailure, "lattice and elimination counts differ: " + lattice.get_str() + " vs " +
                                                  out.count.get_str());
  out.backends.push_back("smith-lattice");
  if (domain <= brute_limit) {
    auto [c, w] = kernel_size_brute(S);
    if (c != out.count)
      throw Error(ErrorKind::ConventionFailure, "brute force and elimination counts differ: " + c.get_str() + " vs " +
                                                    out.count.get_str());
    out.backends.push_back("brute-force");
    out.witness = w;
  }
  out.unique = out.count == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Data.

struct CartanDatum {
  int theta = 0;
  LongMatrix cartan;               // theta x theta
  std::vector<long> group_orders;  // G = prod Z_{o_k}
  LongMatrix g, chi;               // theta exponent vectors each
};

struct ReducedDatum {
  int theta = 0;
  std::vector<long> group_orders;
  LongMatrix g, f, chi;  // f may be empty (to be solved)
};

inline long group_exponent(const std::vector<long>& orders) { return lcm_of(orders); }

// q_ij = chi_j(g_i) as an exponent of zeta_E.
inline LongMatrix braiding_exponents(const std::vector<long>& orders, const LongMatrix& g, const LongMatrix& chi) {
  const std::size_t t = g.size();
  LongMatrix q(t, std::vector<long>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) q[i][j] = pairing_exponent(orders, chi[j], g[i]);
  return q;
}

// Orders N_i of q_ii.
inline std::vector<long> root_orders(const CartanDatum& D) {
  const long E = group_exponent(D.group_orders);
  auto q = braiding_exponents(D.group_orders, D.g, D.chi);
  std::vector<long> N;
  for (int i = 0; i < D.theta; ++i) N.push_back(E / std::gcd(q[i][i], E));
  return N;
}

inline bool matrix_connected(const LongMatrix& M) {
  const std::size_t n = M.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && j != i && (M[i][j] != 0 || M[j][i] != 0)) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace detail {

inline void validate_shape(int theta, const std::vector<long>& orders, const LongMatrix& vecs, const char* what) {
  if (static_cast<int>(vecs.size()) != theta)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs " + std::to_string(theta) + " vectors");
  for (const auto& v : vecs)
    if (v.size() != orders.size())
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + " vectors need " + std::to_string(orders.size()) +
                                                    " exponents");
}

inline std::string vec_string(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string mat_string(const LongMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + vec_string(m[i]);
  return s + "]";
}

// Connected components of the Dynkin graph.
inline std::vector<int> components(const LongMatrix& A) {
  const std::size_t n = A.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && (A[i][j] != 0 || A[j][i] != 0)) comp[j] = c, stack.push_back(j);
    }
    ++c;
  }
  return comp;
}

}  // namespace detail

// q_ij q_ji = q_ii^{a_ij}, q_ii != 1, odd root orders, constant on components, prime
// to 3 on G2 components.
inline Report check_cartan_datum(const CartanDatum& D) {
  Report rep("cartan-datum");
  detail::validate_shape(D.theta, D.group_orders, D.g, "g");
  detail::validate_shape(D.theta, D.group_orders, D.chi, "chi");
  if (static_cast<int>(D.cartan.size()) != D.theta) throw Error(ErrorKind::DimensionMismatch, "Cartan matrix size");
  const long E = group_exponent(D.group_orders);
  auto q = braiding_exponents(D.group_orders, D.g, D.chi);

  Check c{"braiding_compatible", Status::Pass, "exact", "", "", {}, 0.0};
  for (int i = 0; i < D.theta; ++i)
    for (int j = 0; j < D.theta; ++j) {
      long lhs = mod_floor(q[i][j] + q[j][i], E);
      long rhs = mod_floor(static_cast<long>(static_cast<__int128>(D.cartan[i][j]) * q[i][i] % E), E);
      if (lhs != rhs) {
        c.status = Status::Fail;
        c.witnesses.push_back("(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  c.coverage = std::to_string(D.theta * D.theta) + " pairs";
  rep.add(c);

  Check nt{"diagonal_nontrivial", Status::Pass, "exact", "", "", {}, 0.0};
  for (int i = 0; i < D.theta; ++i)
    if (q[i][i] == 0) nt.status = Status::Fail, nt.witnesses.push_back("i=" + std::to_string(i + 1));
  rep.add(nt);

  auto N = root_orders(D);
  auto comp = detail::components(D.cartan);
  Check odd{"root_orders_odd", Status::Pass, "exact", "", "", {}, 0.0};
  Check cst{"root_order_constant_on_components", Status::Pass, "exact", "", "", {}, 0.0};
  Check g2{"g2_orders_prime_to_3", Status::Pass, "exact", "", "", {}, 0.0};
  for (int i = 0; i < D.theta; ++i) {
    if (N[i] % 2 == 0) odd.status = Status::Fail, odd.witnesses.push_back("N_" + std::to_string(i + 1) + "=" + std::to_string(N[i]));
    for (int j = 0; j < D.theta; ++j) {
      if (comp[i] == comp[j] && N[i] != N[j] && i < j)
        cst.status = Status::Fail, cst.witnesses.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (D.cartan[i][j] * D.cartan[j][i] == 3 && N[i] % 3 == 0)
        g2.status = Status::Fail, g2.witnesses.push_back("i=" + std::to_string(i + 1));
    }
  }
  rep.add(odd);
  rep.add(cst);
  rep.add(g2);
  std::string ns;
  for (int i = 0; i < D.theta; ++i) ns += (i ? ", " : "") + std::to_string(N[i]);
  rep.note("root orders N_i: " + ns);
  return rep;
}

// chibar_i with chibar_i(g_j) = chi_j(g_i) for all j; nullopt when unsolvable.
inline std::optional<LongMatrix> solve_chibar(const std::vector<long>& orders, const LongMatrix& g, const LongMatrix& chi) {
  const std::size_t t = g.size();
  LongMatrix out;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<long> rhs(t);
    for (std::size_t j = 0; j < t; ++j) rhs[j] = pairing_exponent(orders, chi[j], g[i]);
    auto y = solve_exponent_system(orders, g, rhs);
    if (!y) return std::nullopt;
    out.push_back(*y);
  }
  return out;
}

// f_j with chi_i(f_j) = chi_j(g_i) for all i; nullopt when unsolvable.
inline std::optional<LongMatrix> solve_reduced_f(const std::vector<long>& orders, const LongMatrix& g, const LongMatrix& chi) {
  const std::size_t t = g.size();
  LongMatrix out;
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<long> rhs(t);
    for (std::size_t i = 0; i < t; ++i) rhs[i] = pairing_exponent(orders, chi[j], g[i]);
    auto y = solve_exponent_system(orders, chi, rhs);
    if (!y) return std::nullopt;
    out.push_back(*y);
  }
  return out;
}

inline mpz_class group_order(const std::vector<long>& orders) {
  mpz_class n = 1;
  for (long o : orders) n *= o;
  return n;
}

// Hypotheses of the rank-theta double-quotient theorem for u(D, lambda, mu).
inline Report double_quotient_hypotheses(const CartanDatum& D) {
  Report rep("double-quotient-hypotheses");
  rep.merge(check_cartan_datum(D), "cartan");
  const mpz_class detA = determinant(to_int_matrix(D.cartan));
  rep.note("det A = " + detA.get_str());

  Check gc{"gcd(ord(chi_i g_i), det A) = 1", Status::Pass, "exact", "", "", {}, 0.0};
  for (int i = 0; i < D.theta; ++i) {
    long o = std::lcm(element_order(D.group_orders, D.chi[i]), element_order(D.group_orders, D.g[i]));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(o).get_mpz_t(), detA.get_mpz_t());
    gc.detail += (i ? ", " : "") + std::string("ord(chi_") + std::to_string(i + 1) + " g_" + std::to_string(i + 1) + ")=" + std::to_string(o);
    if (g != 1) gc.status = Status::Fail, gc.witnesses.push_back("i=" + std::to_string(i + 1));
  }
  rep.add(gc);

  auto chibar = solve_chibar(D.group_orders, D.g, D.chi);
  rep.add("chibar_exists", chibar.has_value(), chibar ? "chibar = " + detail::mat_string(*chibar) : "no solution");

  const mpz_class G = group_order(D.group_orders);
  const mpz_class gen_chi = subgroup_order(D.group_orders, D.chi);
  rep.add("characters_generate_dual", gen_chi == G, "|<chi_i>| = " + gen_chi.get_str() + ", |G| = " + G.get_str());
  if (chibar) {
    const mpz_class gen_bar = subgroup_order(D.group_orders, *chibar);
    rep.add("chibar_generate_dual", gen_bar == G, "|<chibar_i>| = " + gen_bar.get_str());
  } else {
    rep.skip("chibar_generate_dual", "no chibar");
  }

  auto N = root_orders(D);
  bool same = std::all_of(N.begin(), N.end(), [&](long x) { return x == N[0]; });
  bool odd = same && !N.empty() && N[0] % 2 == 1;
  rep.add("uniform_odd_root_order", odd, odd ? "2r-1 = " + std::to_string(N[0]) + ", r = " + std::to_string((N[0] + 1) / 2) : "");
  return rep;
}

// Reduced datum validity: chi_j(g_i) = chi_i(f_j) and f_i g_i != 1.
inline Report check_reduced_datum(const ReducedDatum& D) {
  Report rep("reduced-datum");
  detail::validate_shape(D.theta, D.group_orders, D.g, "g");
  detail::validate_shape(D.theta, D.group_orders, D.chi, "chi");
  if (D.f.empty()) {
    rep.add("f_present", false, "no f supplied and none solved");
    return rep;
  }
  detail::validate_shape(D.theta, D.group_orders, D.f, "f");
  Check c{"chi_j(g_i) = chi_i(f_j)", Status::Pass, "exact", "", "", {}, 0.0};
  for (int i = 0; i < D.theta; ++i)
    for (int j = 0; j < D.theta; ++j)
      if (pairing_exponent(D.group_orders, D.chi[j], D.g[i]) != pairing_exponent(D.group_orders, D.chi[i], D.f[j]))
        c.status = Status::Fail, c.witnesses.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  rep.add(c);
  Check nt{"f_i g_i != 1", Status::Pass, "exact", "", "", {}, 0.0};
  for (int i = 0; i < D.theta; ++i) {
    std::vector<long> fg(D.group_orders.size());
    for (std::size_t k = 0; k < fg.size(); ++k) fg[k] = D.f[i][k] + D.g[i][k];
    if (element_order(D.group_orders, fg) == 1) nt.status = Status::Fail, nt.witnesses.push_back("i=" + std::to_string(i + 1));
  }
  rep.add(nt);
  return rep;
}

// n_i = ord(chi_i f_i) and M with chi_i(g_j) chi_j(g_i) = zeta_{n_j}^{m_ij}. A different
// primitive root per column rescales column j by a unit and leaves uniqueness unchanged.
struct PairingSystem {
  std::vector<long> n;
  LongMatrix M;
  bool well_formed = true;
  std::string problem;
};

inline PairingSystem reduced_pairing_system(const ReducedDatum& D) {
  PairingSystem ps;
  const long E = group_exponent(D.group_orders);
  for (int i = 0; i < D.theta; ++i)
    ps.n.push_back(std::lcm(element_order(D.group_orders, D.chi[i]), element_order(D.group_orders, D.f[i])));
  ps.M.assign(D.theta, std::vector<long>(D.theta, 0));
  for (int i = 0; i < D.theta; ++i)
    for (int j = 0; j < D.theta; ++j) {
      long e = mod_floor(pairing_exponent(D.group_orders, D.chi[i], D.g[j]) + pairing_exponent(D.group_orders, D.chi[j], D.g[i]), E);
      long step = E / ps.n[j];
      if (e % step != 0) {
        ps.well_formed = false;
        ps.problem = "pairing (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not an n_j-th root";
        continue;
      }
      ps.M[i][j] = e / step;
    }
  return ps;
}

// Unique-ribbon factorizability conditions for a reduced datum with generic moduli.
inline Report reduced_datum_conditions(const ReducedDatum& D) {
  Report rep("reduced-datum-conditions");
  rep.merge(check_reduced_datum(D), "datum");
  if (D.f.empty()) return rep;
  rep.skip("nichols_finite_dimensional", "assumed: finite-dimensionality of the Nichols algebra is an input hypothesis");

  const mpz_class G = group_order(D.group_orders);
  const mpz_class gen = subgroup_order(D.group_orders, D.chi);
  rep.add("characters_generate_dual", gen == G, "|<chi_i>| = " + gen.get_str() + ", |G| = " + G.get_str());

  PairingSystem ps = reduced_pairing_system(D);
  std::vector<long> both_orders = D.group_orders;
  both_orders.insert(both_orders.end(), D.group_orders.begin(), D.group_orders.end());
  LongMatrix gens;
  mpz_class prod = 1;
  for (int i = 0; i < D.theta; ++i) {
    std::vector<long> v = D.chi[i];
    v.insert(v.end(), D.f[i].begin(), D.f[i].end());
    gens.push_back(v);
    prod *= ps.n[i];
  }
  const mpz_class sub = subgroup_order(both_orders, gens);
  rep.add("central_subgroup_is_direct_product", sub == prod,
          "|<chi_i f_i>| = " + sub.get_str() + ", prod n_i = " + prod.get_str() + ", n = " + detail::vec_string(ps.n));
  if (!ps.well_formed) {
    rep.add("pairing_matrix", false, ps.problem);
    return rep;
  }
  rep.note("M = " + detail::mat_string(ps.M) + " over n = " + detail::vec_string(ps.n));
  try {
    ZModSystem S(ps.M, ps.n);
    SolutionCount sc = unique_solution_check(S);
    std::string backends;
    for (const auto& b : sc.backends) backends += (backends.empty() ? "" : "+") + b;
    Check c{"unique_solution", sc.unique ? Status::Pass : Status::Fail, backends, "", "solution count " + sc.count.get_str(), {}, 0.0};
    if (!sc.witness.empty()) c.witnesses.push_back("x = " + detail::vec_string(sc.witness));
    rep.add(c);
  } catch (const Error& e) {
    rep.add("unique_solution", false, e.what());
  }
  return rep;
}

// Integer matrix m_ij with chi_j(g_i) = omega^{m_ij}, omega = zeta_n, read from the
// unreduced exponents when G = Z_n^theta with g_i the standard generators; otherwise
// the reduced exponents.
inline LongMatrix standard_pairing_matrix(const ReducedDatum& D, long n) {
  LongMatrix M(D.theta, std::vector<long>(D.theta, 0));
  bool standard = static_cast<int>(D.group_orders.size()) == D.theta;
  for (int i = 0; i < D.theta && standard; ++i)
    for (int k = 0; k < D.theta; ++k)
      if (mod_floor(D.g[i][k], n) != (i == k ? 1 % n : 0)) standard = false;
  for (int i = 0; i < D.theta; ++i)
    for (int j = 0; j < D.theta; ++j) {
      if (standard) {
        M[i][j] = D.chi[j][i];
      } else {
        const long E = group_exponent(D.group_orders);
        M[i][j] = pairing_exponent(D.group_orders, D.chi[j], D.g[i]) / (E / n);
      }
    }
  return M;
}

// Determinant conditions for G = Z_n^theta.
inline Report determinant_conditions(const ReducedDatum& D, long n) {
  Report rep("determinant-conditions");
  rep.merge(check_reduced_datum(D), "datum");
  rep.skip("nichols_finite_dimensional", "assumed: finite-dimensionality of the Nichols algebra is an input hypothesis");
  const int t = D.theta;

  bool shape = static_cast<int>(D.group_orders.size()) == t &&
               std::all_of(D.group_orders.begin(), D.group_orders.end(), [&](long o) { return o == n; });
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(t));
  const mpz_class gen_g = shape ? subgroup_order(D.group_orders, D.g) : mpz_class(0);
  rep.add("group_is_Z_n^theta_on_g", shape && gen_g == full, shape ? "|<g_i>| = " + gen_g.get_str() : "group orders differ from n");
  const mpz_class gen_chi = shape ? subgroup_order(D.group_orders, D.chi) : mpz_class(0);
  rep.add("dual_is_Z_n^theta_on_chi", shape && gen_chi == full, shape ? "|<chi_i>| = " + gen_chi.get_str() : "group orders differ from n");
  if (!shape) return rep;

  LongMatrix M = standard_pairing_matrix(D, n);
  IntMatrix Mi = to_int_matrix(M);
  IntMatrix S = Mi;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) S[i][j] = Mi[i][j] + Mi[j][i];
  const mpz_class dM = determinant(Mi), dS = determinant(S);
  mpz_class g1, g2;
  mpz_gcd(g1.get_mpz_t(), dM.get_mpz_t(), mpz_class(n).get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), dS.get_mpz_t(), mpz_class(n).get_mpz_t());
  rep.note("M = " + detail::mat_string(M) + ", det M = " + dM.get_str() + ", det(M+M^t) = " + dS.get_str());
  rep.add("gcd(det M, n) = 1", g1 == 1, "det M = " + dM.get_str() + ", gcd = " + g1.get_str());
  rep.add("gcd(det(M+M^t), n) = 1", g2 == 1, "det(M+M^t) = " + dS.get_str() + ", gcd = " + g2.get_str());
  return rep;
}

// ---------------------------------------------------------------------------
// Named data.

// Rank one: G = Z_n, g = 1, chi(g) = zeta_n^k, A = (2).
inline CartanDatum taft_datum(long n, long k = 1) { return CartanDatum{1, {{2}}, {n}, {{1}}, {{k}}}; }

// Type A_2 over Z_{2n}^2: chi_1 = (-3, 2), chi_2 = (1, -3) on g_1 = a, g_2 = b.
inline CartanDatum a2_datum(long n) {
  return CartanDatum{2, {{2, -1}, {-1, 2}}, {2 * n, 2 * n}, {{1, 0}, {0, 1}}, {{-3, 2}, {1, -3}}};
}

// Reduced datum over the A_2 data with f solved from chi_i(f_j) = chi_j(g_i); f stays
// empty when no solution exists.
inline ReducedDatum h_omega_datum(long n) {
  CartanDatum c = a2_datum(n);
  ReducedDatum d{2, c.group_orders, c.g, {}, c.chi};
  if (auto f = solve_reduced_f(d.group_orders, d.g, d.chi)) d.f = *f;
  return d;
}

// Non-Cartan rank two over Z_{3n}^2: chi_1 = (-2, 1), chi_2 = (1, n), f_i = g_i.
inline ReducedDatum k_alpha_datum(long n) {
  return ReducedDatum{2, {3 * n, 3 * n}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}, {{-2, 1}, {1, n}}};
}

}  // namespace hopfkit
