#pragma once

// Named constructors: group algebras and their duals, matched pairs of groups
// with their abelian extensions k^G #_{sigma,tau} kF, the family A_l built
// on Z_p x| Z_q, and Taft algebras.

#include <string>
#include <vector>

#include "hopfkit/antipode.hpp"
#include "hopfkit/groups.hpp"
#include "hopfkit/hopf_algebra.hpp"
#include "hopfkit/modular.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/verify.hpp"

namespace hopfkit {

// "x^2*g", "x", "1": exponent 1 omitted, zero exponents dropped.
inline std::string monomial_label(const std::vector<std::pair<std::string, long>>& parts) {
  std::string out;
  for (const auto& [name, e] : parts) {
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

// Certifies H in auto mode and throws if any axiom fails.
inline Report certify_or_throw(HopfAlgebra& H, const VerifyOptions& opt) {
  Report r = certify(H, opt);
  if (!r.ok()) {
    std::string first;
    for (const auto& c : r.checks())
      if (c.status == Status::Fail) {
        first = c.name + (c.witnesses.empty() ? "" : " at " + c.witnesses.front());
        break;
      }
    throw Error(ErrorKind::AxiomFailure, H.name + " fails certification: " + first);
  }
  return r;
}

}  // namespace detail

inline HopfAlgebra group_algebra(const FiniteGroupTable& G, const std::string& name = "kG",
                                 const VerifyOptions& opt = {}) {
  const auto n = G.order();
  const auto N = static_cast<std::int64_t>(G.abelianization_exponent());
  ExactField f{N};
  StructureBuilder<ExactField> b(n, f);
  for (std::uint32_t g = 0; g < n; ++g) {
    for (std::uint32_t h = 0; h < n; ++h) b.add_mult(g, h, G.mul(g, h), CycNumber(1));
    b.add_comult(g, g, g, CycNumber(1));
    b.set_counit(g, CycNumber(1));
    b.add_antipode(g, G.inv(g), CycNumber(1));
  }
  b.add_unit(G.identity(), CycNumber(1));
  HopfAlgebra H;
  H.name = name;
  H.conductor = N;
  H.labels = G.labels();
  H.s = b.finish();
  for (std::uint32_t g = 0; g < n; ++g) H.grouplikes.push_back({G.label(g), {{g, CycNumber(1)}}});
  detail::certify_or_throw(H, opt);
  return H;
}

inline std::string point_mass_label(const std::string& g) { return "e(" + g + ")"; }

// Functions on G with the point-mass basis e_g.
inline HopfAlgebra dual_group_algebra(const FiniteGroupTable& G, const std::string& name = "k^G",
                                      const VerifyOptions& opt = {}) {
  const auto n = G.order();
  const auto N = static_cast<std::int64_t>(G.abelianization_exponent());
  StructureBuilder<ExactField> b(n, ExactField{N});
  for (std::uint32_t g = 0; g < n; ++g) {
    b.add_mult(g, g, g, CycNumber(1));
    b.add_unit(g, CycNumber(1));
    for (std::uint32_t h = 0; h < n; ++h) b.add_comult(g, h, G.mul(G.inv(h), g), CycNumber(1));
    b.add_antipode(g, G.inv(g), CycNumber(1));
  }
  b.set_counit(G.identity(), CycNumber(1));
  HopfAlgebra H;
  H.name = name;
  H.conductor = N;
  for (std::uint32_t g = 0; g < n; ++g) H.labels.push_back(point_mass_label(G.label(g)));
  H.s = b.finish();
  // Evaluation at each group element is a character.
  for (std::uint32_t g = 0; g < n; ++g) H.characters.push_back({"ev(" + G.label(g) + ")", {{g, CycNumber(1)}}});
  detail::certify_or_throw(H, opt);
  return H;
}

// Matched pair (F, G, <|, |>) with 2-cocycles sigma on G x F x F and tau on G x G x F.
struct MatchedPair {
  FiniteGroupTable G, F;
  std::vector<std::uint32_t> left;   // g <| f in G, at g*|F| + f
  std::vector<std::uint32_t> right;  // g |> f in F, at g*|F| + f
  std::vector<CycNumber> sigma;      // at (g*|F| + f)*|F| + f'
  std::vector<CycNumber> tau;        // at (g*|G| + g')*|F| + f
  std::int64_t conductor = 1;

  std::uint32_t nG() const { return G.order(); }
  std::uint32_t nF() const { return F.order(); }
  std::uint32_t lt(std::uint32_t g, std::uint32_t f) const { return left[std::size_t(g) * nF() + f]; }
  std::uint32_t rt(std::uint32_t g, std::uint32_t f) const { return right[std::size_t(g) * nF() + f]; }
  const CycNumber& sig(std::uint32_t g, std::uint32_t f, std::uint32_t f2) const {
    return sigma[(std::size_t(g) * nF() + f) * nF() + f2];
  }
  CycNumber& sig(std::uint32_t g, std::uint32_t f, std::uint32_t f2) {
    return sigma[(std::size_t(g) * nF() + f) * nF() + f2];
  }
  const CycNumber& ta(std::uint32_t g, std::uint32_t g2, std::uint32_t f) const {
    return tau[(std::size_t(g) * nG() + g2) * nF() + f];
  }
  CycNumber& ta(std::uint32_t g, std::uint32_t g2, std::uint32_t f) {
    return tau[(std::size_t(g) * nG() + g2) * nF() + f];
  }
};

// Trivial actions and cocycles; callers overwrite what they need.
inline MatchedPair trivial_matched_pair(FiniteGroupTable G, FiniteGroupTable F, std::int64_t conductor = 1) {
  MatchedPair P;
  P.G = std::move(G);
  P.F = std::move(F);
  P.conductor = conductor;
  const auto nG = P.nG(), nF = P.nF();
  P.left.resize(std::size_t(nG) * nF);
  P.right.resize(std::size_t(nG) * nF);
  for (std::uint32_t g = 0; g < nG; ++g)
    for (std::uint32_t f = 0; f < nF; ++f) {
      P.left[std::size_t(g) * nF + f] = g;
      P.right[std::size_t(g) * nF + f] = f;
    }
  P.sigma.assign(std::size_t(nG) * nF * nF, CycNumber(1));
  P.tau.assign(std::size_t(nG) * nG * nF, CycNumber(1));
  return P;
}

inline Report validate_matched_pair(const MatchedPair& P) {
  Report r("matched-pair");
  const auto& G = P.G;
  const auto& F = P.F;
  const auto nG = P.nG(), nF = P.nF();
  const auto eG = G.identity(), eF = F.identity();
  auto lg = [&](std::uint32_t g) { return G.label(g); };
  auto lf = [&](std::uint32_t f) { return F.label(f); };

  auto run = [&](const std::string& name, auto&& body) {
    Stopwatch sw;
    Check c;
    c.name = name;
    c.backend = "exact";
    std::size_t failures = 0, total = 0;
    body([&](bool ok, const std::string& witness) {
      ++total;
      if (!ok) {
        ++failures;
        if (c.witnesses.size() < 5) c.witnesses.push_back(witness);
      }
    });
    c.status = failures ? Status::Fail : Status::Pass;
    c.coverage = std::to_string(total) + " tuples";
    if (failures) c.detail = std::to_string(failures) + " failing tuples";
    c.seconds = sw.seconds();
    r.add(std::move(c));
  };

  if (P.left.size() != std::size_t(nG) * nF || P.right.size() != std::size_t(nG) * nF ||
      P.sigma.size() != std::size_t(nG) * nF * nF || P.tau.size() != std::size_t(nG) * nG * nF) {
    r.add("table_sizes", false, "action or cocycle table has the wrong size");
    return r;
  }

  run("left_action", [&](auto rec) {  // g <| 1 = g, g <| (f f') = (g <| f) <| f'
    for (std::uint32_t g = 0; g < nG; ++g) {
      rec(P.lt(g, eF) == g, "g=" + lg(g));
      for (std::uint32_t f = 0; f < nF; ++f)
        for (std::uint32_t f2 = 0; f2 < nF; ++f2)
          rec(P.lt(g, F.mul(f, f2)) == P.lt(P.lt(g, f), f2), "g=" + lg(g) + " f=" + lf(f) + " f'=" + lf(f2));
    }
  });
  run("right_action", [&](auto rec) {  // 1 |> f = f, (g g') |> f = g |> (g' |> f)
    for (std::uint32_t f = 0; f < nF; ++f) {
      rec(P.rt(eG, f) == f, "f=" + lf(f));
      for (std::uint32_t g = 0; g < nG; ++g)
        for (std::uint32_t g2 = 0; g2 < nG; ++g2)
          rec(P.rt(G.mul(g, g2), f) == P.rt(g, P.rt(g2, f)), "g=" + lg(g) + " g'=" + lg(g2) + " f=" + lf(f));
    }
  });
  run("matched_product", [&](auto rec) {  // g |> (f f') = (g |> f)((g <| f) |> f')
    for (std::uint32_t g = 0; g < nG; ++g)
      for (std::uint32_t f = 0; f < nF; ++f)
        for (std::uint32_t f2 = 0; f2 < nF; ++f2)
          rec(P.rt(g, F.mul(f, f2)) == F.mul(P.rt(g, f), P.rt(P.lt(g, f), f2)),
              "g=" + lg(g) + " f=" + lf(f) + " f'=" + lf(f2));
  });
  run("matched_coproduct", [&](auto rec) {  // (g g') <| f = (g <| (g' |> f))(g' <| f)
    for (std::uint32_t g = 0; g < nG; ++g)
      for (std::uint32_t g2 = 0; g2 < nG; ++g2)
        for (std::uint32_t f = 0; f < nF; ++f)
          rec(P.lt(G.mul(g, g2), f) == G.mul(P.lt(g, P.rt(g2, f)), P.lt(g2, f)),
              "g=" + lg(g) + " g'=" + lg(g2) + " f=" + lf(f));
  });
  run("sigma_normalized", [&](auto rec) {
    for (std::uint32_t g = 0; g < nG; ++g)
      for (std::uint32_t f = 0; f < nF; ++f) {
        rec(P.sig(g, eF, f).is_one(), "sigma(" + lg(g) + ",1," + lf(f) + ")");
        rec(P.sig(g, f, eF).is_one(), "sigma(" + lg(g) + "," + lf(f) + ",1)");
        if (g == 0)
          for (std::uint32_t f2 = 0; f2 < nF; ++f2)
            rec(P.sig(eG, f, f2).is_one(), "sigma(1," + lf(f) + "," + lf(f2) + ")");
      }
  });
  run("sigma_cocycle", [&](auto rec) {
    for (std::uint32_t g = 0; g < nG; ++g)
      for (std::uint32_t f = 0; f < nF; ++f)
        for (std::uint32_t f2 = 0; f2 < nF; ++f2)
          for (std::uint32_t f3 = 0; f3 < nF; ++f3) {
            CycNumber lhs = P.sig(P.lt(g, f), f2, f3) * P.sig(g, f, F.mul(f2, f3));
            CycNumber rhs = P.sig(g, f, f2) * P.sig(g, F.mul(f, f2), f3);
            rec(lhs == rhs, "g=" + lg(g) + " f=" + lf(f) + " f'=" + lf(f2) + " f''=" + lf(f3));
          }
  });
  run("tau_normalized", [&](auto rec) {
    for (std::uint32_t g = 0; g < nG; ++g) {
      for (std::uint32_t g2 = 0; g2 < nG; ++g2) rec(P.ta(g, g2, eF).is_one(), "tau(" + lg(g) + "," + lg(g2) + ",1)");
      for (std::uint32_t f = 0; f < nF; ++f) {
        rec(P.ta(g, eG, f).is_one(), "tau(" + lg(g) + ",1," + lf(f) + ")");
        rec(P.ta(eG, g, f).is_one(), "tau(1," + lg(g) + "," + lf(f) + ")");
      }
    }
  });
  run("tau_cocycle", [&](auto rec) {
    for (std::uint32_t g = 0; g < nG; ++g)
      for (std::uint32_t g2 = 0; g2 < nG; ++g2)
        for (std::uint32_t g3 = 0; g3 < nG; ++g3)
          for (std::uint32_t f = 0; f < nF; ++f) {
            CycNumber lhs = P.ta(G.mul(g, g2), g3, f) * P.ta(g, g2, P.rt(g3, f));
            CycNumber rhs = P.ta(g2, g3, f) * P.ta(g, G.mul(g2, g3), f);
            rec(lhs == rhs, "g=" + lg(g) + " g'=" + lg(g2) + " g''=" + lg(g3) + " f=" + lf(f));
          }
  });
  run("sigma_tau_compatible", [&](auto rec) {
    for (std::uint32_t g = 0; g < nG; ++g)
      for (std::uint32_t g2 = 0; g2 < nG; ++g2)
        for (std::uint32_t f = 0; f < nF; ++f)
          for (std::uint32_t f2 = 0; f2 < nF; ++f2) {
            CycNumber lhs = P.sig(G.mul(g, g2), f, f2) * P.ta(g, g2, F.mul(f, f2));
            CycNumber rhs = P.sig(g, P.rt(g2, f), P.rt(P.lt(g2, f), f2)) * P.sig(g2, f, f2) * P.ta(g, g2, f) *
                            P.ta(P.lt(g, P.rt(g2, f)), P.lt(g2, f), f2);
            rec(lhs == rhs, "g=" + lg(g) + " g'=" + lg(g2) + " f=" + lf(f) + " f'=" + lf(f2));
          }
  });
  return r;
}

inline std::string extension_label(const std::string& g, const std::string& f) { return "e(" + g + ")#" + f; }

struct ExtensionOptions {
  VerifyOptions verify;
  std::uint32_t antipode_crosscheck_limit = 200;  // solve for S independently up to this dimension
};

// Basis e_g#f at index g*|F| + f.
inline HopfAlgebra abelian_extension(const MatchedPair& P, const std::string& name = "k^G#kF",
                                     const ExtensionOptions& opt = {}, Report* report = nullptr) {
  Report val = validate_matched_pair(P);
  if (!val.ok()) {
    for (const auto& c : val.checks())
      if (c.status == Status::Fail)
        throw Error(ErrorKind::BadParameters, "matched pair fails " + c.name +
                                                  (c.witnesses.empty() ? "" : " at " + c.witnesses.front()));
  }
  const auto& G = P.G;
  const auto& F = P.F;
  const auto nG = P.nG(), nF = P.nF();
  const std::uint32_t d = nG * nF;
  auto idx = [nF](std::uint32_t g, std::uint32_t f) { return g * nF + f; };
  ExactField fld{P.conductor};
  StructureBuilder<ExactField> b(d, fld);
  for (std::uint32_t g = 0; g < nG; ++g)
    for (std::uint32_t f = 0; f < nF; ++f) {
      const auto i = idx(g, f);
      // (e_g#f)(e_{g'}#f') = [g <| f = g'] sigma(g,f,f') e_g#ff'
      for (std::uint32_t f2 = 0; f2 < nF; ++f2) b.add_mult(i, idx(P.lt(g, f), f2), idx(g, F.mul(f, f2)), P.sig(g, f, f2));
      // Delta(e_g#f) = sum_{g'g''=g} tau(g',g'',f) e_{g'}#(g'' |> f) (x) e_{g''}#f
      for (std::uint32_t g2 = 0; g2 < nG; ++g2) {
        std::uint32_t g1 = G.mul(g, G.inv(g2));
        b.add_comult(i, idx(g1, P.rt(g2, f)), idx(g2, f), P.ta(g1, g2, f));
      }
      b.set_counit(i, CycNumber(g == G.identity() ? 1 : 0));
      std::uint32_t gf = P.rt(g, f);
      CycNumber c = (P.sig(G.inv(g), gf, F.inv(gf)) * P.ta(G.inv(g), g, f)).inverse();
      b.add_antipode(i, idx(G.inv(P.lt(g, f)), F.inv(gf)), c);
    }
  for (std::uint32_t g = 0; g < nG; ++g) b.add_unit(idx(g, F.identity()), CycNumber(1));

  HopfAlgebra H;
  H.name = name;
  H.conductor = P.conductor;
  for (std::uint32_t g = 0; g < nG; ++g)
    for (std::uint32_t f = 0; f < nF; ++f) H.labels.push_back(extension_label(G.label(g), F.label(f)));
  H.s = b.finish();

  Report rep("abelian-extension");
  rep.merge(val, "matched_pair");
  rep.merge(detail::certify_or_throw(H, opt.verify));
  if (d <= opt.antipode_crosscheck_limit) {
    Stopwatch sw;
    auto solved = solve_antipode(H.s, fld);
    bool same = solved == H.s.antipode;
    auto& c = rep.add("antipode_closed_form_matches_solver", same);
    c.seconds = sw.seconds();
    if (!same) throw Error(ErrorKind::IllPosed, "closed-form antipode differs from the solved antipode");
  } else {
    rep.skip("antipode_closed_form_matches_solver", "dimension above cross-check limit");
  }
  if (report) report->merge(rep);
  return H;
}

// Parameters of the A_l family.
struct ScriptAParams {
  std::int64_t p = 7, q = 3, t = 2, l = 0;
};

inline void check_script_A_params(const ScriptAParams& a) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::BadParameters, m); };
  if (a.p < 3 || a.p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(a.p))) fail("p must be an odd prime");
  if (a.q < 3 || a.q % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(a.q))) fail("q must be an odd prime");
  if (a.p % a.q != 1)
    fail("p = " + std::to_string(a.p) + " is " + std::to_string(a.p % a.q) + " mod q = " + std::to_string(a.q) +
         ", expected 1");
  if (pow_mod_int(a.t, a.q, a.p) != 1)
    fail("t^q = " + std::to_string(pow_mod_int(a.t, a.q, a.p)) + " mod p, expected 1");
  if (mod_pos(a.t, a.p) == 1) fail("t must not be 1 mod p");
  if (a.l < 0 || a.l >= a.q) fail("l must lie in [0, q-1]");
}

// G = Z_p x| Z_q = <a, b | b a b^-1 = a^t>, F = Z_q = <x>, |> trivial,
// a^i b^j <| x^k = a^(i t^k) b^j, sigma(a^i b^j, x^m, x^n) = w^(j l floor((m+n)/q)), tau = 1.
inline MatchedPair script_A_matched_pair(const ScriptAParams& a) {
  check_script_A_params(a);
  auto G = metacyclic_group(a.p, a.q, a.t);
  auto F = cyclic_group(a.q, "x");
  MatchedPair P = trivial_matched_pair(G, F, a.q);
  const auto q = a.q;
  for (std::int64_t i = 0; i < a.p; ++i)
    for (std::int64_t j = 0; j < q; ++j) {
      auto g = static_cast<std::uint32_t>(i * q + j);
      for (std::int64_t k = 0; k < q; ++k) {
        std::int64_t ni = mod_pos(i * pow_mod_int(a.t, k, a.p), a.p);
        P.left[std::size_t(g) * q + k] = static_cast<std::uint32_t>(ni * q + j);
      }
      for (std::int64_t m = 0; m < q; ++m)
        for (std::int64_t n = 0; n < q; ++n)
          P.sig(g, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n)) =
              CycNumber::root_of_unity(q, j * a.l * ((m + n) / q));
    }
  return P;
}

inline HopfAlgebra build_script_A(const ScriptAParams& a, const ExtensionOptions& opt = {}, Report* report = nullptr) {
  auto P = script_A_matched_pair(a);
  std::string name = "A_" + std::to_string(a.l) + "(" + std::to_string(a.p) + "," + std::to_string(a.q) + "," +
                     std::to_string(a.t) + ")";
  return abelian_extension(P, name, opt, report);
}

inline std::string taft_label(long i, long j) { return monomial_label({{"x", i}, {"g", j}}); }

// Gaussian binomial [n choose k] at q.
inline CycNumber q_binomial(long n, long k, const CycNumber& q) {
  if (k < 0 || k > n) return CycNumber(0);
  // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<CycNumber> row{CycNumber(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<CycNumber> next(m + 1, CycNumber(0));
    for (long j = 0; j <= m; ++j) {
      if (j >= 1) next[j] += row[j - 1];
      if (j < m) next[j] += q.pow(j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

// Order of a root of unity q (0 when q is not one of order <= limit).
inline long root_order(const CycNumber& q, long limit) {
  CycNumber x = q;
  for (long k = 1; k <= limit; ++k) {
    if (x.is_one()) return k;
    x = x * q;
  }
  return 0;
}

// Taft algebra: g^n = 1, x^n = 0, g x = q x g, Delta(x) = x (x) 1 + g (x) x.
// Basis x^i g^j at index i*n + j.
inline HopfAlgebra build_taft(long n, const CycNumber& q, const VerifyOptions& opt = {}) {
  if (n < 2) throw Error(ErrorKind::BadParameters, "Taft algebras need n >= 2");
  if (root_order(q, n) != n) throw Error(ErrorKind::BadParameters, "q must be a primitive n-th root of unity");
  const auto d = static_cast<std::uint32_t>(n * n);
  const std::int64_t N = q.conductor();
  ExactField fld{N};
  auto idx = [n](long i, long j) { return static_cast<std::uint32_t>(i * n + j); };
  StructureBuilder<ExactField> b(d, fld);
  std::vector<CycNumber> qp(n);
  for (long k = 0; k < n; ++k) qp[k] = q.pow(k).embed(N);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      for (long k = 0; i + k < n; ++k)
        for (long l = 0; l < n; ++l) b.add_mult(idx(i, j), idx(k, l), idx(i + k, (j + l) % n), qp[(j * k) % n]);
      for (long s = 0; s <= i; ++s)
        b.add_comult(idx(i, j), idx(s, (i - s + j) % n), idx(i - s, j), q_binomial(i, s, q).embed(N));
      b.set_counit(idx(i, j), CycNumber(i == 0 ? 1 : 0));
    }
  b.add_unit(idx(0, 0), CycNumber(1));
  HopfAlgebra H;
  H.name = "Taft(" + std::to_string(n) + ")";
  H.conductor = N;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) H.labels.push_back(taft_label(i, j));
  H.s = b.finish();

  // S(x^i g^j) = S(g)^j S(x)^i with S(g) = g^-1, S(x) = -g^-1 x.
  {
    auto ops = exact_ops(H);
    Element Sg = ops.basis(idx(0, n - 1));
    Element Sx = ops.scale(ops.mul(Sg, ops.basis(idx(1, 0))), CycNumber(-1));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Element v = ops.mul(ops.pow(Sg, j), ops.pow(Sx, i));
        for (const auto& [k, c] : v.terms) H.s.antipode[idx(i, j)].push_back({static_cast<std::uint32_t>(k), c});
      }
  }
  for (long j = 0; j < n; ++j) H.grouplikes.push_back({taft_label(0, j), {{idx(0, j), CycNumber(1)}}});
  NamedElement chi{"chi", {}};
  for (long j = 0; j < n; ++j) chi.terms.emplace_back(idx(0, j), qp[j]);
  H.characters.push_back(chi);
  detail::certify_or_throw(H, opt);
  return H;
}

}  // namespace hopfkit
