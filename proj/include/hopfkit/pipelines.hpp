#pragma once

// End-to-end constructions of factorizable quotients of Drinfeld doubles:
//   A(p,q) = D(A_0) / <chi x>,  D(Taft_n) / <chi g>,  D(kG).
// Named elements live in the final algebra; presentation checks are exact.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfkit/builders.hpp"
#include "hopfkit/doubles.hpp"

namespace hopfkit {

// ---------------------------------------------------------------------------
// A(p,q)

struct ApqOptions {
  VerifyOptions verify;                 // for D(A_0) and the quotient
  ApqOptions() { verify.mode = Mode::Modular; }
};

struct ApqPipeline {
  ScriptAParams params;
  FiniteGroupTable G = cyclic_group(1);
  std::shared_ptr<const DoubleAlgebra> dd;      // D(A_0)
  NamedElement chi;                             // chi(e_g) = delta(g, b), chi(x) = w; dual coordinates on A_0
  NamedElement x_base;                          // sum_g e_g#x in A_0
  QuotientMap qm;
  std::map<std::string, Element> named;         // x, y, z_k, e(g), chi, g, h, k
  Report report{"A(p,q)"};

  const HopfAlgebra& A() const { return qm.quotient; }
  HopfAlgebra& A() { return qm.quotient; }
  RMatrix& Rbar() { return *qm.Rbar; }
  const Element& at(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end()) throw Error(ErrorKind::LabelResolution, "no named element '" + name + "'");
    return it->second;
  }
  std::uint32_t base_index(std::uint32_t g, std::uint32_t f) const {
    return g * static_cast<std::uint32_t>(params.q) + f;
  }
};

namespace detail {

inline std::uint32_t metacyclic_index(const FiniteGroupTable& G, std::int64_t i, std::int64_t j, std::int64_t m,
                                      std::int64_t n) {
  return G.index_of(metacyclic_label(mod_pos(i, m), mod_pos(j, n)));
}

}  // namespace detail

inline std::shared_ptr<const DoubleAlgebra> build_script_A_double(const ScriptAParams& params,
                                                                   const VerifyOptions& verify, Report* report = nullptr) {
  ScriptAParams p0 = params;
  p0.l = 0;
  Stopwatch sw;
  auto H = build_script_A(p0);
  DoubleOptions o;
  o.verify = verify;
  auto dd = std::make_shared<DoubleAlgebra>(drinfeld_double(H, o));
  if (report) {
    report->merge(dd->report, "double");
    report->add("double_built", true, "dim " + std::to_string(dd->D.dim())).seconds = sw.seconds();
  }
  return dd;
}

// Quotient of a prebuilt D(A_0) by <chi x>, with named generators resolved in A(p,q).
inline ApqPipeline build_A_pq(std::shared_ptr<const DoubleAlgebra> dd, const ScriptAParams& params,
                              const ApqOptions& opt = {}) {
  check_script_A_params(params);
  if (params.l != 0) throw Error(ErrorKind::BadParameters, "A(p,q) is built from A_0 (l = 0)");
  ApqPipeline P;
  P.params = params;
  P.G = metacyclic_group(params.p, params.q, params.t);
  P.dd = dd;
  const auto p = params.p, q = params.q;
  const auto nq = static_cast<std::uint32_t>(q);
  if (dd->base_dim != static_cast<std::uint32_t>(p * q * q))
    throw Error(ErrorKind::DimensionMismatch, "double is not over A_0(" + std::to_string(p) + "," + std::to_string(q) + ")");
  auto gi = [&](std::int64_t i, std::int64_t j) { return detail::metacyclic_index(P.G, i, j, p, q); };
  const CycNumber w = CycNumber::root_of_unity(q, 1);

  P.chi.label = "chi";
  const auto bpt = gi(0, 1);
  for (std::uint32_t f = 0; f < nq; ++f) P.chi.terms.emplace_back(P.base_index(bpt, f), w.pow(f));
  P.x_base.label = "x";
  for (std::uint32_t g = 0; g < P.G.order(); ++g) P.x_base.terms.emplace_back(P.base_index(g, 1), CycNumber(1));

  Element chix = dd->pure(P.chi, P.x_base);
  QuotientOptions qo;
  qo.verify = opt.verify;
  qo.name = "A(" + std::to_string(p) + "," + std::to_string(q) + ")";
  Stopwatch sw;
  P.qm = quotient_by_central_grouplikes(dd->D, &dd->R, {to_named("chi*x", chix)}, qo);
  P.report.merge(P.qm.report, "quotient");
  P.report.add("quotient_built", true, "dim " + std::to_string(P.A().dim())).seconds = sw.seconds();

  auto pr = [&](const Element& e) { return P.qm.project(e); };
  auto ops = exact_ops(P.A());
  auto dual = [&](std::vector<std::pair<std::uint32_t, CycNumber>> t) { return pr(dd->dual_side({"", std::move(t)})); };
  auto base = [&](std::vector<std::pair<std::uint32_t, CycNumber>> t) { return pr(dd->base_side({"", std::move(t)})); };

  P.named["x"] = pr(dd->base_side(P.x_base));
  {
    std::vector<std::pair<std::uint32_t, CycNumber>> t;
    for (std::uint32_t f = 0; f < nq; ++f) t.emplace_back(P.base_index(gi(1, 0), f), CycNumber(1));
    P.named["y"] = dual(t);
  }
  for (std::uint32_t k = 0; k < nq; ++k)
    P.named["z" + std::to_string(k)] = dual({{P.base_index(gi(0, 0), k), CycNumber(1)}});
  for (std::uint32_t g = 0; g < P.G.order(); ++g)
    P.named["e(" + P.G.label(g) + ")"] = base({{P.base_index(g, 0), CycNumber(1)}});
  P.named["chi"] = pr(dd->dual_side(P.chi));

  // Group-likes g = sum w^i z_i, h = x^-1, k = sum_{i,j} w^j e(a^i b^j).
  Element g = ops.zero(), k = ops.zero();
  for (std::uint32_t i = 0; i < nq; ++i) g = ops.add(g, ops.scale(P.named["z" + std::to_string(i)], w.pow(i)));
  for (std::int64_t i = 0; i < p; ++i)
    for (std::int64_t j = 0; j < q; ++j) k = ops.add(k, ops.scale(P.named["e(" + metacyclic_label(i, j) + ")"], w.pow(j)));
  P.named["g"] = g;
  P.named["h"] = ops.antipode(P.named["x"]);
  P.named["k"] = k;
  P.A().grouplikes = {to_named("g", g), to_named("h", P.named["h"]), to_named("k", k)};
  return P;
}

inline ApqPipeline build_A_pq(const ScriptAParams& params, const ApqOptions& opt = {}) {
  Report rep;
  auto dd = build_script_A_double(params, opt.verify, &rep);
  ApqPipeline P = build_A_pq(dd, params, opt);
  rep.merge(P.report);
  P.report = Report("A(p,q)");
  P.report.merge(rep);
  return P;
}

// Sum over (i,j,k) of w^(sjk*jk) e(a^i b^j) x^k (x) y^i z_k x^(sxj*j).
inline Element apq_r_formula(const ApqPipeline& P, int sign_jk, int sign_xj) {
  const auto& A = P.A();
  auto ops = exact_ops(A);
  const auto p = P.params.p, q = P.params.q;
  const CycNumber w = CycNumber::root_of_unity(q, 1);
  const Element& x = P.at("x");
  std::vector<Element> xp(q), yp(p);
  for (std::int64_t k = 0; k < q; ++k) xp[k] = ops.pow(x, k);
  for (std::int64_t i = 0; i < p; ++i) yp[i] = ops.pow(P.at("y"), i);
  Accumulator<ExactField> acc(A.field());
  for (std::int64_t i = 0; i < p; ++i)
    for (std::int64_t j = 0; j < q; ++j)
      for (std::int64_t k = 0; k < q; ++k) {
        Element left = ops.mul(P.at("e(" + metacyclic_label(i, j) + ")"), xp[k]);
        Element right = ops.mul(ops.mul(yp[i], P.at("z" + std::to_string(k))), xp[mod_pos(sign_xj * j, q)]);
        CycNumber c = w.pow(mod_pos(sign_jk * j * k, q));
        for (const auto& [kl, cl] : left.terms)
          for (const auto& [kr, cr] : right.terms)
            acc.add(key2(static_cast<std::uint32_t>(kl), static_cast<std::uint32_t>(kr)), c * cl * cr);
      }
  return acc.finish(2);
}

// Relations, coproducts, counits and antipodes of the generators x, y, z_i, e_g, and R-bar.
inline Report verify_Apq_presentation(const ApqPipeline& P) {
  Report r("A(p,q)-presentation");
  const auto& A = P.A();
  auto ops = exact_ops(A);
  const auto p = P.params.p, q = P.params.q, t = P.params.t;
  const auto& G = P.G;
  const Element& x = P.at("x");
  const Element& y = P.at("y");
  auto z = [&](std::int64_t i) -> const Element& { return P.at("z" + std::to_string(mod_pos(i, q))); };
  auto e = [&](std::uint32_t g) -> const Element& { return P.at("e(" + G.label(g) + ")"); };
  auto xpow = [&](std::int64_t k) { return ops.pow(x, mod_pos(k, q)); };
  auto ypow = [&](std::int64_t k) { return ops.pow(y, mod_pos(k, p)); };
  // g <| x^k for g = a^i b^j is a^(i t^k) b^j.
  auto act = [&](std::uint32_t g, std::int64_t k) {
    std::int64_t i = static_cast<std::int64_t>(g) / q, j = static_cast<std::int64_t>(g) % q;
    if (G.label(g) != metacyclic_label(i, j)) throw Error(ErrorKind::LabelResolution, "unexpected group labelling");
    return detail::metacyclic_index(G, i * pow_mod_int(t, mod_pos(k, q), p), j, p, q);
  };
  auto check = [&](const std::string& name, const Element& a, const Element& b) {
    Element diff = ops.sub(a, b);
    r.add(name, diff.empty(), diff.empty() ? "" : std::to_string(diff.size()) + " nonzero terms");
  };
  auto all = [&](const std::string& name, std::size_t n, auto&& pred) {
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) {
        if (!bad) first = "first failure at " + std::to_string(i);
        ++bad;
      }
    r.add(name, bad == 0, first);
  };
  const auto nG = G.order();
  const auto one = G.identity();

  check("yx = xy^t", ops.mul(y, x), ops.mul(x, ypow(t)));
  all("z_i x = x z_i", q, [&](std::size_t i) { return ops.equal(ops.mul(z(i), x), ops.mul(x, z(i))); });
  all("e_g x = x e_(g<|x)", nG,
      [&](std::size_t g) { return ops.equal(ops.mul(e(g), x), ops.mul(x, e(act(g, 1)))); });
  all("z_i y = y z_i", q, [&](std::size_t i) { return ops.equal(ops.mul(z(i), y), ops.mul(y, z(i))); });
  {
    const auto a = detail::metacyclic_index(G, 1, 0, p, q);
    all("e_g y = y sum_i z_i e_((a^-1 <| x^i) g a)", nG, [&](std::size_t g) {
      Element rhs = ops.zero();
      for (std::int64_t i = 0; i < q; ++i) {
        std::uint32_t h = G.mul(G.mul(act(G.inv(a), i), static_cast<std::uint32_t>(g)), a);
        rhs = ops.add(rhs, ops.mul(z(i), e(h)));
      }
      return ops.equal(ops.mul(e(g), y), ops.mul(y, rhs));
    });
  }
  all("e_g z_i = z_i e_g", std::size_t(nG) * q, [&](std::size_t n) {
    auto g = static_cast<std::uint32_t>(n / q);
    auto i = static_cast<std::int64_t>(n % q);
    return ops.equal(ops.mul(e(g), z(i)), ops.mul(z(i), e(g)));
  });
  check("x^q = 1", ops.pow(x, q), ops.unit());
  check("y^p = 1", ops.pow(y, p), ops.unit());
  all("z_i z_j = delta_ij z_i", std::size_t(q * q), [&](std::size_t n) {
    auto i = static_cast<std::int64_t>(n / q), j = static_cast<std::int64_t>(n % q);
    return ops.equal(ops.mul(z(i), z(j)), i == j ? z(i) : ops.zero());
  });
  all("e_g e_h = delta_gh e_g", std::size_t(nG) * nG, [&](std::size_t n) {
    auto g = static_cast<std::uint32_t>(n / nG), h = static_cast<std::uint32_t>(n % nG);
    return ops.equal(ops.mul(e(g), e(h)), g == h ? e(g) : ops.zero());
  });
  check("chi = x^-1", P.at("chi"), ops.antipode(x));

  // Coalgebra.
  check("Delta(x) = x (x) x", ops.delta(x), ops.tensor(x, x));
  {
    Element rhs = ops.zero(2);
    for (std::int64_t i = 0; i < q; ++i)
      rhs = ops.add(rhs, ops.tensor(ypow(pow_mod_int(t, i, p)), ops.mul(y, z(i))));
    check("Delta(y) = sum y^(t^i) (x) y z_i", ops.delta(y), rhs);
  }
  all("Delta(z_i) = sum z_j (x) z_(i-j)", q, [&](std::size_t i) {
    Element rhs = ops.zero(2);
    for (std::int64_t j = 0; j < q; ++j) rhs = ops.add(rhs, ops.tensor(z(j), z(static_cast<std::int64_t>(i) - j)));
    return ops.equal(ops.delta(z(i)), rhs);
  });
  all("Delta(e_g) = sum e_h (x) e_(h^-1 g)", nG, [&](std::size_t g) {
    Element rhs = ops.zero(2);
    for (std::uint32_t h = 0; h < nG; ++h) rhs = ops.add(rhs, ops.tensor(e(h), e(G.mul(G.inv(h), static_cast<std::uint32_t>(g)))));
    return ops.equal(ops.delta(e(g)), rhs);
  });
  r.add("eps(x) = eps(y) = 1", ops.counit(x).is_one() && ops.counit(y).is_one());
  all("eps(z_i) = delta_i0", q, [&](std::size_t i) { return ops.counit(z(i)) == CycNumber(i == 0 ? 1 : 0); });
  all("eps(e_g) = delta_g1", nG, [&](std::size_t g) { return ops.counit(e(g)) == CycNumber(g == one ? 1 : 0); });
  check("S(x) = x^-1", ops.antipode(x), xpow(-1));
  {
    Element rhs = ops.zero();
    for (std::int64_t i = 0; i < q; ++i) {
      std::int64_t tinv = pow_mod_int(t, mod_pos(-i, q), p);
      rhs = ops.add(rhs, ops.mul(ypow(-tinv), z(i)));
    }
    check("S(y) = sum y^(-t^-i) z_i", ops.antipode(y), rhs);
  }
  all("S(z_i) = z_-i", q, [&](std::size_t i) { return ops.equal(ops.antipode(z(i)), z(-static_cast<std::int64_t>(i))); });
  all("S(e_g) = e_(g^-1)", nG, [&](std::size_t g) { return ops.equal(ops.antipode(e(g)), e(G.inv(static_cast<std::uint32_t>(g)))); });

  // R-bar against the push-forward of the standard R.
  if (P.qm.Rbar) {
    const Element& Rb = P.qm.Rbar->R;
    check("Rbar = sum w^(-jk) e(a^i b^j) x^k (x) y^i z_k x^(-j)", apq_r_formula(P, -1, -1), Rb);
    // The opposite sign convention is recorded, not asserted: it differs from the push-forward.
    Element alt = ops.sub(apq_r_formula(P, 1, 1), Rb);
    r.note("sign-flipped form sum w^(jk) e(a^i b^j) x^k (x) y^i z_k x^j " +
           (alt.empty() ? std::string("also matches") : "differs in " + std::to_string(alt.size()) + " terms"));
  } else {
    r.skip("Rbar", "no R supplied to the quotient");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Identities of the dual A_0^*, with E(g;x^i) dual to e_g x^i and
//   Y = sum_j E(a;x^j), Z_i = E(1;x^i), chi = sum_j w^j E(b;x^j).

inline Report verify_script_A_dual_identities(const ScriptAParams& params) {
  ScriptAParams p0 = params;
  p0.l = 0;
  const HopfAlgebra Hd = dual_hopf(build_script_A(p0));
  Report r("A_0-dual");
  auto ops = exact_ops(Hd);
  const auto p = p0.p, q = p0.q, t = p0.t;
  const auto G = metacyclic_group(p, q, t);
  const auto nG = G.order();
  const CycNumber w = CycNumber::root_of_unity(q, 1);
  auto gi = [&](std::int64_t i, std::int64_t j) { return detail::metacyclic_index(G, i, j, p, q); };
  auto E = [&](std::uint32_t g, std::int64_t f) { return ops.basis(g * static_cast<std::uint32_t>(q) + static_cast<std::uint32_t>(mod_pos(f, q))); };
  auto act = [&](std::uint32_t g, std::int64_t k) {
    std::int64_t i = static_cast<std::int64_t>(g) / q, j = static_cast<std::int64_t>(g) % q;
    return gi(i * pow_mod_int(t, mod_pos(k, q), p), j);
  };
  Element Y = ops.zero(), chi = ops.zero();
  std::vector<Element> Z(q);
  for (std::int64_t j = 0; j < q; ++j) {
    Y = ops.add(Y, E(gi(1, 0), j));
    chi = ops.add(chi, ops.scale(E(gi(0, 1), j), w.pow(j)));
    Z[j] = E(G.identity(), j);
  }
  auto z = [&](std::int64_t i) -> const Element& { return Z[mod_pos(i, q)]; };
  auto Ypow = [&](std::int64_t k) { return ops.pow(Y, mod_pos(k, p)); };
  auto all = [&](const std::string& name, std::size_t n, auto&& pred) {
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) {
        if (!bad) first = "first failure at " + std::to_string(i);
        ++bad;
      }
    r.add(name, bad == 0, first);
  };
  auto check = [&](const std::string& name, const Element& a, const Element& b) { r.add(name, ops.equal(a, b)); };
  const std::size_t nq = static_cast<std::size_t>(q);

  all("E(g;x^i) E(h;x^j) = delta_ij E(gh;x^i)", std::size_t(nG) * nG * nq * nq, [&](std::size_t n) {
    auto j = static_cast<std::int64_t>(n % nq), i = static_cast<std::int64_t>((n / nq) % nq);
    auto h = static_cast<std::uint32_t>((n / nq / nq) % nG), g = static_cast<std::uint32_t>(n / nq / nq / nG);
    return ops.equal(ops.mul(E(g, i), E(h, j)), i == j ? E(G.mul(g, h), i) : ops.zero());
  });
  all("Delta E(g;x^i) = sum_j E(g;x^j) (x) E(g<|x^j;x^(i-j))", std::size_t(nG) * nq, [&](std::size_t n) {
    auto g = static_cast<std::uint32_t>(n / nq);
    auto i = static_cast<std::int64_t>(n % nq);
    Element rhs = ops.zero(2);
    for (std::int64_t j = 0; j < q; ++j) rhs = ops.add(rhs, ops.tensor(E(g, j), E(act(g, j), i - j)));
    return ops.equal(ops.delta(E(g, i)), rhs);
  });
  all("E(a^i b^j;x^k) = w^(-jk) Y^i chi^j Z_k", std::size_t(p * q * q), [&](std::size_t n) {
    auto k = static_cast<std::int64_t>(n % nq), j = static_cast<std::int64_t>((n / nq) % nq);
    auto i = static_cast<std::int64_t>(n / nq / nq);
    Element rhs = ops.scale(ops.mul(ops.mul(Ypow(i), ops.pow(chi, j)), z(k)), w.pow(mod_pos(-j * k, q)));
    return ops.equal(E(gi(i, j), k), rhs);
  });

  all("Z_i Y = Y Z_i", nq, [&](std::size_t i) { return ops.equal(ops.mul(z(i), Y), ops.mul(Y, z(i))); });
  check("chi Y = Y^t chi", ops.mul(chi, Y), ops.mul(Ypow(t), chi));
  all("chi Z_i = Z_i chi", nq, [&](std::size_t i) { return ops.equal(ops.mul(chi, z(i)), ops.mul(z(i), chi)); });
  check("Y^p = 1", Ypow(p), ops.unit());
  check("chi^q = 1", ops.pow(chi, q), ops.unit());
  all("Z_i Z_j = delta_ij Z_i", nq * nq, [&](std::size_t n) {
    auto i = static_cast<std::int64_t>(n / nq), j = static_cast<std::int64_t>(n % nq);
    return ops.equal(ops.mul(z(i), z(j)), i == j ? z(i) : ops.zero());
  });
  {
    Element rhs = ops.zero(2);
    for (std::int64_t i = 0; i < q; ++i) rhs = ops.add(rhs, ops.tensor(ops.mul(Y, z(i)), Ypow(pow_mod_int(t, i, p))));
    check("Delta(Y) = sum Y Z_i (x) Y^(t^i)", ops.delta(Y), rhs);
  }
  all("Delta(Z_i) = sum Z_j (x) Z_(i-j)", nq, [&](std::size_t i) {
    Element rhs = ops.zero(2);
    for (std::int64_t j = 0; j < q; ++j) rhs = ops.add(rhs, ops.tensor(z(j), z(static_cast<std::int64_t>(i) - j)));
    return ops.equal(ops.delta(z(i)), rhs);
  });
  check("Delta(chi) = chi (x) chi", ops.delta(chi), ops.tensor(chi, chi));
  r.add("eps(Y) = eps(chi) = 1", ops.counit(Y).is_one() && ops.counit(chi).is_one());
  all("eps(Z_i) = delta_i0", nq, [&](std::size_t i) { return ops.counit(z(i)) == CycNumber(i == 0 ? 1 : 0); });
  {
    Element rhs = ops.zero();
    for (std::int64_t i = 0; i < q; ++i) rhs = ops.add(rhs, ops.mul(Ypow(-pow_mod_int(t, mod_pos(-i, q), p)), z(i)));
    check("S(Y) = sum Y^(-t^-i) Z_i", ops.antipode(Y), rhs);
  }
  all("S(Z_i) = Z_-i", nq, [&](std::size_t i) { return ops.equal(ops.antipode(z(i)), z(-static_cast<std::int64_t>(i))); });
  check("S(chi) = chi^-1", ops.antipode(chi), ops.pow(chi, q - 1));
  return r;
}

// ---------------------------------------------------------------------------
// Taft_n: D(Taft_n) / <chibar g> with chibar = chi (rank one, so chibar(g) = chi(g)).

struct TaftPipeline {
  std::shared_ptr<const HopfAlgebra> base;
  std::shared_ptr<const DoubleAlgebra> dd;
  QuotientMap qm;
  std::map<std::string, Element> in_double;  // x, y, chi, g in D(Taft_n)
  std::map<std::string, Element> named;      // images in the quotient
  Report report{"taft-pipeline"};

  const HopfAlgebra& K() const { return qm.quotient; }
  HopfAlgebra& K() { return qm.quotient; }
  RMatrix& Rbar() { return *qm.Rbar; }
};

inline TaftPipeline build_taft_pipeline(long n, long q_exponent = 1, const VerifyOptions& verify = {}) {
  TaftPipeline T;
  const CycNumber qv = CycNumber::root_of_unity(n, q_exponent);
  T.base = std::make_shared<HopfAlgebra>(build_taft(n, qv, verify));
  const auto& H = *T.base;
  DoubleOptions o;
  o.verify = verify;
  T.dd = std::make_shared<DoubleAlgebra>(drinfeld_double(H, o));
  const auto& dd = *T.dd;
  T.report.merge(dd.report, "double");

  auto idx = [&](long i, long j) { return static_cast<std::uint32_t>(i * n + j); };
  const NamedElement& chi = H.characters.at(0);
  NamedElement g{"g", {{idx(0, 1), CycNumber(1)}}};
  NamedElement x{"x", {{idx(1, 0), CycNumber(1)}}};
  // y = the functional dual to x on the PBW basis: sum_j E^{x g^j}.
  NamedElement y{"y", {}};
  for (long j = 0; j < n; ++j) y.terms.emplace_back(idx(1, j), CycNumber(1));
  T.in_double["x"] = dd.base_side(x);
  T.in_double["g"] = dd.base_side(g);
  T.in_double["y"] = dd.dual_side(y);
  T.in_double["chi"] = dd.dual_side(chi);

  Element chig = dd.pure(chi, g);
  QuotientOptions qo;
  qo.verify = verify;
  qo.name = "D(" + H.name + ")/<chi*g>";
  T.qm = quotient_by_central_grouplikes(dd.D, &dd.R, {to_named("chi*g", chig)}, qo);
  T.report.merge(T.qm.report, "quotient");
  for (const auto& [k, v] : T.in_double) T.named[k] = T.qm.project(v);
  return T;
}

// ---------------------------------------------------------------------------
// Doubles of group algebras.

inline std::shared_ptr<const DoubleAlgebra> build_group_double(const FiniteGroupTable& G, const std::string& name,
                                                                const VerifyOptions& verify = {}) {
  auto H = group_algebra(G, name);
  DoubleOptions o;
  o.verify = verify;
  return std::make_shared<DoubleAlgebra>(drinfeld_double(H, o));
}

}  // namespace hopfkit
