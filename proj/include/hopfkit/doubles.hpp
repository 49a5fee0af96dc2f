#pragma once

// Drinfeld double D(H) = (H*)^cop (x) H with its standard R-matrix, quotients
// by ideals generated by central group-likes, and the push-forward of R.
//
// Basis index a*d + j is E^a (x) b_j. Multiplication:
//   (f (x) h)(f' (x) k) = f [h1 -> f' <- S^-1(h3)] (x) h2 k,
// with (h -> f <- h')(x) = f(h' x h).

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfkit/antipode.hpp"
#include "hopfkit/dual.hpp"
#include "hopfkit/grouplikes.hpp"
#include "hopfkit/quasitri.hpp"
#include "hopfkit/verify.hpp"

namespace hopfkit {

enum class REmbedding {
  BaseFirst,  // R = sum (eps (x) b_i) (x) (E^i (x) 1)
  DualFirst,  // R = sum (E^i (x) 1) (x) (eps (x) b_i)
};

struct DoubleOptions {
  VerifyOptions verify;
  std::uint32_t antipode_crosscheck_limit = 200;  // solve-based antipode check up to this dim(D)
  bool verify_r = true;
};

struct DoubleAlgebra {
  HopfAlgebra D;
  RMatrix R;
  REmbedding embedding = REmbedding::BaseFirst;
  std::string base_name;
  std::uint32_t base_dim = 0;
  std::vector<CycNumber> base_counit;  // eps of H, i.e. the unit of H* in dual coordinates
  std::vector<Term<CycNumber>> base_unit;
  Report report{"drinfeld-double"};

  std::uint32_t index(std::uint32_t a, std::uint32_t j) const { return a * base_dim + j; }

  // f (x) 1 for f given by dual coordinates on H.
  Element dual_side(const NamedElement& f) const {
    Accumulator<ExactField> acc(D.field());
    for (const auto& [a, c] : f.terms)
      for (const auto& u : base_unit) acc.add(key1(index(a, u.index)), c * u.coeff);
    return acc.finish(1);
  }
  // eps (x) h for h an element of H.
  Element base_side(const NamedElement& h) const {
    Accumulator<ExactField> acc(D.field());
    for (std::uint32_t a = 0; a < base_dim; ++a)
      if (!base_counit[a].is_zero())
        for (const auto& [j, c] : h.terms) acc.add(key1(index(a, j)), base_counit[a] * c);
    return acc.finish(1);
  }
  // f (x) h = (f (x) 1)(eps (x) h).
  Element pure(const NamedElement& f, const NamedElement& h) const {
    Accumulator<ExactField> acc(D.field());
    for (const auto& [a, c] : f.terms)
      for (const auto& [j, e] : h.terms) acc.add(key1(index(a, j)), c * e);
    return acc.finish(1);
  }
};

namespace detail {

inline Element standard_r(const DoubleAlgebra& dd, REmbedding emb) {
  const auto d = dd.base_dim;
  Accumulator<ExactField> acc(dd.D.field());
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t a = 0; a < d; ++a) {
      if (dd.base_counit[a].is_zero()) continue;
      std::uint32_t base_leg = dd.index(a, i);  // eps (x) b_i, term a
      for (const auto& u : dd.base_unit) {
        std::uint32_t dual_leg = dd.index(i, u.index);  // E^i (x) 1, term u
        CycNumber c = dd.base_counit[a] * u.coeff;
        acc.add(emb == REmbedding::BaseFirst ? key2(base_leg, dual_leg) : key2(dual_leg, base_leg), c);
      }
    }
  return acc.finish(2);
}

}  // namespace detail

inline DoubleAlgebra drinfeld_double(const HopfAlgebra& H, const DoubleOptions& opt = {}) {
  if (!H.certified) throw Error(ErrorKind::IllPosed, H.name + " is not certified");
  const std::uint32_t d = H.dim();
  if (std::uint64_t(d) * d >= kMaxDim) throw Error(ErrorKind::TooLarge, "double dimension exceeds index packing");
  ExactField f = H.field();
  auto ops = exact_ops(H);
  Stopwatch sw;

  DoubleAlgebra dd;
  dd.base_name = H.name;
  dd.base_dim = d;
  dd.base_counit = H.s.counit;
  dd.base_unit = H.s.unit;

  HopfAlgebra Hc = dual_hopf(H, DualVariant::Cop);  // (H*)^cop
  auto Sinv = inverse_antipode(H.s, f);

  // W(r, p)[y] = S^-1(b_r) b_y b_p, cached per (r, p).
  std::unordered_map<std::uint64_t, std::vector<SparseVec<CycNumber>>> wcache;
  auto W = [&](std::uint32_t r, std::uint32_t p) -> const std::vector<SparseVec<CycNumber>>& {
    std::uint64_t key = std::uint64_t(r) * d + p;
    auto it = wcache.find(key);
    if (it != wcache.end()) return it->second;
    std::vector<SparseVec<CycNumber>> rows(d);
    Accumulator<ExactField> sr(f);
    for (const auto& t : Sinv[r]) sr.add(key1(t.index), t.coeff);
    Element left = sr.finish(1);
    Element bp = ops.basis(p);
    for (std::uint32_t y = 0; y < d; ++y) {
      Element z = ops.mul(ops.mul(left, ops.basis(y)), bp);
      for (const auto& [k, c] : z.terms) rows[y].emplace_back(static_cast<std::uint32_t>(k), c);
    }
    return wcache.emplace(key, std::move(rows)).first->second;
  };

  // T[j][c]: (y, q, coeff) with (b_j -> E^c) part: h1 -> E^c <- S^-1(h3) (x) h2 = sum coeff E^y (x) b_q.
  struct TEntry {
    std::uint32_t y, q;
    CycNumber c;
  };
  std::vector<std::vector<std::vector<TEntry>>> T(d, std::vector<std::vector<TEntry>>(d));
  for (std::uint32_t j = 0; j < d; ++j) {
    Element d2 = ops.delta_leg(ops.delta(ops.basis(j)), 0);  // (p, q, r)
    std::map<std::pair<std::uint32_t, std::uint64_t>, CycNumber> acc;  // (c, (y,q)) -> coeff
    for (const auto& [k, coef] : d2.terms) {
      std::uint32_t p = leg(k, 0), q = leg(k, 1), r = leg(k, 2);
      const auto& w = W(r, p);
      for (std::uint32_t y = 0; y < d; ++y)
        for (const auto& [c, v] : w[y]) {
          auto [it, ins] = acc.try_emplace({c, (std::uint64_t(y) << 32) | q}, coef * v);
          if (!ins) it->second += coef * v;
        }
    }
    for (auto& [key, v] : acc)
      if (!v.is_zero())
        T[j][key.first].push_back({static_cast<std::uint32_t>(key.second >> 32),
                                   static_cast<std::uint32_t>(key.second & 0xffffffffu), v});
  }
  wcache.clear();

  StructureBuilder<ExactField> b(d * d, f);
  // (E^a (x) b_j)(E^c (x) b_l) = sum_T coeff (E^a E^y) (x) (b_q b_l).
  for (std::uint32_t j = 0; j < d; ++j)
    for (std::uint32_t c = 0; c < d; ++c)
      for (const auto& t : T[j][c])
        for (std::uint32_t a = 0; a < d; ++a) {
          auto [lo, hi] = Hc.s.product(a, t.y);
          if (lo == hi) continue;
          for (std::uint32_t l = 0; l < d; ++l) {
            auto [lo2, hi2] = H.s.product(t.q, l);
            for (auto x = lo; x != hi; ++x) {
              CycNumber c1 = t.c * x->coeff;
              for (auto y = lo2; y != hi2; ++y) b.add_mult(a * d + j, c * d + l, x->k * d + y->k, c1 * y->coeff);
            }
          }
        }
  T.clear();

  // Coalgebra (H*)^cop (x) H.
  for (std::uint32_t a = 0; a < d; ++a)
    for (const auto& da : Hc.s.comult[a])
      for (std::uint32_t j = 0; j < d; ++j)
        for (const auto& dj : H.s.comult[j])
          b.add_comult(a * d + j, da.j * d + dj.j, da.k * d + dj.k, da.coeff * dj.coeff);
  std::vector<CycNumber> unit_coord(d, f.zero());
  for (const auto& u : H.s.unit) unit_coord[u.index] = u.coeff;
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t j = 0; j < d; ++j) b.set_counit(a * d + j, unit_coord[a] * H.s.counit[j]);
  for (std::uint32_t a = 0; a < d; ++a)
    if (!H.s.counit[a].is_zero())
      for (const auto& u : H.s.unit) b.add_unit(a * d + u.index, H.s.counit[a] * u.coeff);
  Structure<CycNumber> s = b.finish();

  // S(f (x) h) = (eps (x) S(h)) (S*(f) (x) 1) with S* the antipode of (H*)^cop.
  {
    Ops<ExactField> dops(s, f);
    std::vector<std::vector<Term<CycNumber>>> anti(d * d);
    parallel_for(std::size_t(d) * d, [&](std::size_t idx) {
      std::uint32_t a = static_cast<std::uint32_t>(idx / d), j = static_cast<std::uint32_t>(idx % d);
      Accumulator<ExactField> left(f), right(f);
      for (const auto& sj : H.s.antipode[j])
        for (std::uint32_t e = 0; e < d; ++e)
          if (!H.s.counit[e].is_zero()) left.add(key1(e * d + sj.index), H.s.counit[e] * sj.coeff);
      for (const auto& sa : Hc.s.antipode[a])
        for (const auto& u : H.s.unit) right.add(key1(sa.index * d + u.index), sa.coeff * u.coeff);
      Element prod = dops.mul(left.finish(1), right.finish(1));
      for (const auto& [k, c] : prod.terms) anti[idx].push_back({static_cast<std::uint32_t>(k), c});
    });
    s.antipode = std::move(anti);
  }

  dd.D.name = "D(" + H.name + ")";
  dd.D.conductor = H.conductor;
  dd.D.s = std::move(s);
  dd.D.labels.reserve(std::size_t(d) * d);
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t j = 0; j < d; ++j) dd.D.labels.push_back(dual_label(H.labels[a]) + "*" + H.labels[j]);
  // chi (x) g for known characters chi of H and group-likes g of H.
  for (const auto& chi : H.characters)
    for (const auto& g : H.grouplikes)
      dd.D.grouplikes.push_back(to_named(chi.label + "*" + g.label, dd.pure(chi, g)));
  dd.report.add("construct", true, "dim " + std::to_string(std::size_t(d) * d)).seconds = sw.seconds();

  Report cert = certify(dd.D, opt.verify);
  dd.report.merge(cert, "hopf");
  if (!cert.ok()) throw Error(ErrorKind::IllPosed, "double failed certification\n" + cert.to_text());

  if (dd.D.dim() <= opt.antipode_crosscheck_limit) {
    auto S = solve_antipode(dd.D.s, f);
    dd.report.add("antipode_closed_form_matches_solver", S == dd.D.s.antipode);
  } else {
    dd.report.skip("antipode_closed_form_matches_solver",
                   "solver cross-check runs up to dim " + std::to_string(opt.antipode_crosscheck_limit));
  }

  if (opt.verify_r) {
    for (REmbedding emb : {REmbedding::BaseFirst, REmbedding::DualFirst}) {
      RMatrix R = verify_quasitriangular(dd.D, detail::standard_r(dd, emb), opt.verify);
      dd.R = std::move(R);
      dd.embedding = emb;
      if (dd.R.verified) break;
    }
    dd.report.merge(dd.R.report, "R");
    if (!dd.R.verified) throw Error(ErrorKind::NotRMatrix, "standard R failed in both embeddings");
    if (dd.embedding == REmbedding::DualFirst) dd.report.note("standard R verified with the dual leg first");
  } else {
    dd.R.ambient = dd.D.name;
    dd.R.ambient_dim = dd.D.dim();
    dd.R.R = detail::standard_r(dd, REmbedding::BaseFirst);
    dd.R.Rinv = exact_ops(dd.D).antipode(dd.R.R, 0);
  }
  return dd;
}

// ---------------------------------------------------------------------------
// Quotients by central group-likes.

struct QuotientMap {
  std::string source_name;
  std::uint32_t source_dim = 0;
  std::vector<SparseVec<CycNumber>> ideal;      // reduced row echelon basis of I
  std::vector<std::uint32_t> representatives;   // source indices forming the quotient basis
  std::vector<SparseVec<CycNumber>> projection;  // projection[i] = pi(b_i) in quotient coordinates
  std::size_t group_order = 0;
  HopfAlgebra quotient;
  std::optional<RMatrix> Rbar;
  Report report{"quotient"};

  Element project(const Element& x) const {
    if (x.degree < 1 || x.degree > 3) throw Error(ErrorKind::DimensionMismatch, "bad degree");
    ExactField f{quotient.conductor};
    Accumulator<ExactField> acc(f);
    for (const auto& [k, c] : x.terms) project_term(k, x.degree, 0, 0, c, acc);
    return acc.finish(x.degree);
  }

 private:
  void project_term(std::uint64_t key, int degree, int l, std::uint64_t out, const CycNumber& c,
                    Accumulator<ExactField>& acc) const {
    if (l == degree) {
      acc.add(out, c);
      return;
    }
    for (const auto& [n, v] : projection[leg(key, l)])
      project_term(key, degree, l + 1, out | (std::uint64_t(n) << (kLegBits * l)), c * v, acc);
  }
};

struct QuotientOptions {
  VerifyOptions verify;
  std::string name;  // default "source/<G>"
};

inline QuotientMap quotient_by_central_grouplikes(const HopfAlgebra& H, const RMatrix* R,
                                                  const std::vector<NamedElement>& G,
                                                  const QuotientOptions& opt = {}) {
  const auto d = H.dim();
  ExactField f = H.field();
  auto ops = exact_ops(H);
  QuotientMap q;
  q.source_name = H.name;
  q.source_dim = d;
  if (R) require_ambient(H, *R);
  Stopwatch sw;

  std::vector<Element> gens;
  for (const auto& g : G) {
    Element x = to_element(g);
    if (!is_group_like(H, x)) throw Error(ErrorKind::NotGroupLike, g.label + " is not group-like");
    if (!is_central(H, x)) throw Error(ErrorKind::NotCentral, g.label + " is not central");
    gens.push_back(std::move(x));
  }
  auto group = group_like_closure(H, G);
  q.group_order = group.order();
  q.report.add("generated_group", true, "order " + std::to_string(q.group_order));

  // Spanning set b_i (g - 1) over generators g (central, so a two-sided ideal).
  std::vector<Element> spanning;
  for (const auto& g : gens) {
    Element gm1 = ops.sub(g, ops.unit());
    if (gm1.empty()) continue;
    for (std::uint32_t i = 0; i < d; ++i) spanning.push_back(ops.mul(ops.basis(i), gm1));
  }
  Echelon<ExactField> ech(d, f);
  for (const auto& x : spanning) ech.insert(detail::element_to_vec(x));
  ech.make_reduced();
  q.report.add("ideal_rank", true, std::to_string(ech.rank()));

  std::vector<long> pos(d, -1);
  for (std::uint32_t c = 0; c < d; ++c)
    if (!ech.is_pivot(c)) {
      pos[c] = static_cast<long>(q.representatives.size());
      q.representatives.push_back(c);
    }
  const auto n = static_cast<std::uint32_t>(q.representatives.size());
  q.projection.resize(d);
  for (std::uint32_t c = 0; c < d; ++c) {
    if (!ech.is_pivot(c)) {
      q.projection[c].emplace_back(static_cast<std::uint32_t>(pos[c]), f.one());
      continue;
    }
    for (const auto& [col, v] : ech.pivot_row(c))
      if (col != c) q.projection[c].emplace_back(static_cast<std::uint32_t>(pos[col]), -v);
  }
  for (std::uint32_t p : ech.pivot_columns()) q.ideal.push_back(ech.pivot_row(p));
  std::sort(q.ideal.begin(), q.ideal.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });

  bool dim_ok = q.group_order * n == d;
  q.report.add("dimension_multiplicative", dim_ok,
               std::to_string(q.group_order) + " * " + std::to_string(n) + " vs " + std::to_string(d));
  if (!dim_ok)
    throw Error(ErrorKind::IdealMismatch, "|<G>| * dim(quotient) != dim(source): " + std::to_string(q.group_order) +
                                              " * " + std::to_string(n) + " != " + std::to_string(d));

  // Hopf ideal checks on the spanning set.
  {
    std::vector<char> eps_bad(spanning.size()), delta_bad(spanning.size()), s_bad(spanning.size());
    parallel_for(spanning.size(), [&](std::size_t t) {
      const Element& x = spanning[t];
      eps_bad[t] = !ops.counit(x).is_zero();
      delta_bad[t] = !q.project(ops.delta(x)).empty();
      s_bad[t] = !q.project(ops.antipode(x)).empty();
    });
    auto count = [](const std::vector<char>& v) { return std::count(v.begin(), v.end(), 1); };
    q.report.add("counit_vanishes_on_ideal", count(eps_bad) == 0);
    q.report.add("ideal_is_coideal", count(delta_bad) == 0,
                 count(delta_bad) ? std::to_string(count(delta_bad)) + " generators fail" : "");
    q.report.add("ideal_antipode_stable", count(s_bad) == 0);
    if (count(eps_bad) || count(delta_bad) || count(s_bad))
      throw Error(ErrorKind::IdealMismatch, "generated ideal is not a Hopf ideal\n" + q.report.to_text());
  }

  // Projected structure on representatives.
  StructureBuilder<ExactField> b(n, f);
  std::vector<Element> prod_rows(n), comult_rows(n), anti_rows(n);
  parallel_for(n, [&](std::size_t u) {
    std::uint32_t i = q.representatives[u];
    Accumulator<ExactField> acc(f);
    for (const auto& t : H.s.mult[i]) {
      if (pos[t.j] < 0) continue;
      for (const auto& [m, v] : q.projection[t.k]) acc.add(key2(static_cast<std::uint32_t>(pos[t.j]), m), t.coeff * v);
    }
    prod_rows[u] = acc.finish(2);
    Element bi = ops.basis(i);
    comult_rows[u] = q.project(ops.delta(bi));
    anti_rows[u] = q.project(ops.antipode(bi));
  });
  for (std::uint32_t u = 0; u < n; ++u) {
    for (const auto& [k, c] : prod_rows[u].terms) b.add_mult(u, leg(k, 0), leg(k, 1), c);
    for (const auto& [k, c] : comult_rows[u].terms) b.add_comult(u, leg(k, 0), leg(k, 1), c);
    for (const auto& [k, c] : anti_rows[u].terms) b.add_antipode(u, leg(k, 0), c);
    b.set_counit(u, H.s.counit[q.representatives[u]]);
  }
  for (const auto& [k, c] : q.project(ops.unit()).terms) b.add_unit(leg(k, 0), c);

  HopfAlgebra& Q = q.quotient;
  Q.s = b.finish();
  Q.conductor = H.conductor;
  if (opt.name.empty()) {
    std::string gl;
    for (const auto& g : G) gl += (gl.empty() ? "" : ",") + g.label;
    Q.name = H.name + "/<" + gl + ">";
  } else {
    Q.name = opt.name;
  }
  for (auto i : q.representatives) Q.labels.push_back("[" + H.labels[i] + "]");
  {
    std::map<std::string, bool> seen;
    for (const auto& g : H.grouplikes) {
      Element pg = q.project(to_element(g));
      auto key = element_key(pg);
      if (seen.count(key)) continue;
      seen[key] = true;
      Q.grouplikes.push_back(to_named("[" + g.label + "]", pg));
    }
  }
  q.report.add("project", true).seconds = sw.seconds();

  Report cert = certify(Q, opt.verify);
  q.report.merge(cert, "hopf");
  if (!cert.ok()) throw Error(ErrorKind::IllPosed, "quotient failed certification\n" + cert.to_text());

  if (R) {
    Element Rb = q.project(R->R);
    RMatrix rb = verify_quasitriangular(Q, Rb, opt.verify);
    q.report.merge(rb.report, "Rbar");
    q.Rbar = std::move(rb);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Cross relations x_i y_j - y_j x_i = delta_ij (chi_i - g_i).

struct DoubleRelation {
  std::string name;
  Element x, y, chi, g;
};

inline Report verify_double_relations(const HopfAlgebra& D, const std::vector<DoubleRelation>& rels) {
  Report r("double-relations");
  auto ops = exact_ops(D);
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < rels.size(); ++j) {
      Element lhs = ops.sub(ops.mul(rels[i].x, rels[j].y), ops.mul(rels[j].y, rels[i].x));
      if (i == j) lhs = ops.sub(lhs, ops.sub(rels[i].chi, rels[i].g));
      std::string name = "x_" + rels[i].name + " y_" + rels[j].name;
      r.add(name, lhs.empty(), lhs.empty() ? "" : std::to_string(lhs.size()) + " nonzero terms");
    }
  return r;
}

}  // namespace hopfkit
