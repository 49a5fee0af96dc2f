// Acceptance run: one PASS/FAIL line per criterion, sub-checks indented below it.
// Usage: acceptance [-v] [--known-failure NAME]... [criterion ...]
// Exit 0 iff every failing sub-check is listed as a known failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/builders.hpp"
#include "hopfkit/datum.hpp"
#include "hopfkit/doubles.hpp"
#include "hopfkit/dual.hpp"
#include "hopfkit/pipelines.hpp"
#include "hopfkit/presented.hpp"
#include "hopfkit/serialize.hpp"

using namespace hopfkit;

namespace {

struct Sub {
  std::string name;
  bool pass;
  std::string detail;
};

struct Criterion {
  std::vector<Sub> subs;
  void add(const std::string& name, bool pass, const std::string& detail = "") { subs.push_back({name, pass, detail}); }
  bool pass() const {
    return std::all_of(subs.begin(), subs.end(), [](const Sub& s) { return s.pass; });
  }
};

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

std::string corpus(const std::string& file) {
  std::ifstream in(std::string(HOPFKIT_CORPUS_DIR) + "/" + file);
  if (!in) throw Error(ErrorKind::Io, "missing corpus file " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks())
    if (c.status == Status::Fail) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return "";
}

// Numerator of a coverage string "k/d indices"; checks without coverage count as global.
std::optional<std::size_t> covered(const Check& c) {
  if (c.coverage.empty()) return std::nullopt;
  return std::stoul(c.coverage.substr(0, c.coverage.find('/')));
}

std::vector<NamedElement> candidates(const GroupLikeSearch& gl) {
  std::vector<NamedElement> out;
  for (std::size_t i = 0; i < gl.elements.size(); ++i) out.push_back(to_named("l" + std::to_string(i), gl.elements[i]));
  return out;
}

// Results shared between criteria within one run.
struct Shared {
  std::shared_ptr<const DoubleAlgebra> d_a0;
  double d_a0_seconds = 0;
  std::vector<std::pair<std::string, bool>> s4;     // (pair, S^4 = g(-)g^-1)
  std::vector<std::pair<std::string, bool>> dims;   // (quotient, dim D = |G| dim K)
} shared;

void record_s4(const std::string& name, const RibbonCertificate& cert) {
  const Check* c = cert.report.find("S4_is_conjugation_by_g");
  shared.s4.emplace_back(name, c && c->status == Status::Pass);
}

void record_quotient(const std::string& name, const HopfAlgebra& D, const QuotientMap& qm) {
  const Check* c = qm.report.find("dimension_multiplicative");
  bool ok = c && c->status == Status::Pass && D.dim() == qm.group_order * qm.quotient.dim();
  shared.dims.emplace_back(name, ok);
}

const ScriptAParams kA0{7, 3, 2, 0};

std::shared_ptr<const DoubleAlgebra> double_of_A0() {
  if (!shared.d_a0) {
    Stopwatch sw;
    VerifyOptions vo;
    vo.mode = Mode::Modular;
    shared.d_a0 = build_script_A_double(kA0, vo);
    shared.d_a0_seconds = sw.seconds();
  }
  return shared.d_a0;
}

// ---------------------------------------------------------------------------

Criterion criterion1() {
  Criterion c;
  HopfAlgebra H = build_script_A(kA0);
  c.add("dim 63", H.dim() == 63, std::to_string(H.dim()));
  VerifyOptions vo;
  vo.mode = Mode::Exact;
  Stopwatch sw;
  Report r = verify_hopf_axioms(H, vo);
  const double t = sw.seconds();
  bool full = true;
  for (const auto& ch : r.checks())
    if (auto k = covered(ch); k && *k != H.dim()) full = false;
  c.add("exact axiom suite", r.ok() && full, r.ok() ? (full ? "all indices" : "budget cut indices") : first_failure(r));
  c.add("axiom suite under 5 s", t < 5.0, secs(t));
  Report mp = validate_matched_pair(script_A_matched_pair(kA0));
  c.add("matched-pair identities", mp.ok(), mp.ok() ? std::to_string(mp.checks().size()) + " checks" : first_failure(mp));
  return c;
}

Criterion criterion2() {
  Criterion c;
  Report r = verify_script_A_dual_identities(kA0);
  c.add("dual identities", r.ok(), r.ok() ? std::to_string(r.checks().size()) + " checks" : first_failure(r));
  return c;
}

Criterion criterion3() {
  Criterion c;
  Stopwatch total;
  auto dd = double_of_A0();
  const HopfAlgebra& D = dd->D;
  c.add("dim 3969", D.dim() == 3969, std::to_string(D.dim()) + ", built and certified in " + secs(shared.d_a0_seconds));
  c.add("double certified", D.certified);

  VerifyOptions mod;
  mod.mode = Mode::Modular;
  RMatrix qm = verify_quasitriangular(D, dd->R.R, mod);
  bool full = true;
  for (const auto& ch : qm.report.checks())
    if (auto k = covered(ch); k && *k != D.dim()) full = false;
  c.add("QT axioms, modular, every index", qm.verified && full, qm.verified ? qm.backend : first_failure(qm.report));

  VerifyOptions smp;
  smp.mode = Mode::Sampled;
  smp.samples = 200;
  smp.exact_budget = 1e12;  // keep every sampled index
  RMatrix qs = verify_quasitriangular(D, dd->R.R, smp);
  std::size_t least = D.dim();
  for (const auto& ch : qs.report.checks())
    if (auto k = covered(ch)) least = std::min(least, *k);
  c.add("QT axioms, exact on >= 200 samples", qs.verified && least >= 200,
        qs.verified ? "fewest indices per check " + std::to_string(least) : first_failure(qs.report));

  RMatrix R = dd->R;
  Stopwatch sw;
  auto fr = is_factorizable(D, R, Backend::Modular);
  c.add("monodromy rank 3969 (modular)", fr.factorizable && fr.rank == 3969,
        std::to_string(fr.rank) + " via " + fr.certificate + " in " + secs(sw.seconds()));
  const double t = total.seconds();
  c.add("total under 10 min", t < 600, secs(t));
  return c;
}

Criterion criterion4() {
  Criterion c;
  auto dd = double_of_A0();
  ApqPipeline P = build_A_pq(dd, kA0);
  HopfAlgebra& A = P.A();
  c.add("dim 1323", A.dim() == 1323, std::to_string(A.dim()));
  c.add("quotient certified with R-bar", A.certified && P.qm.Rbar && P.Rbar().verified, first_failure(P.report));
  record_quotient("A(7,3)", dd->D, P.qm);

  Report pres = verify_Apq_presentation(P);
  // R-bar is checked against sum w^(-jk) e(a^i b^j) x^k (x) y^i z_k x^(-j); the sign-flipped
  // form is reported alongside, not asserted.
  const std::size_t flipped = exact_ops(A).sub(apq_r_formula(P, 1, 1), P.Rbar().R).size();
  c.add("relations, Delta, eps, S and R-bar exact", pres.ok(),
        (pres.ok() ? std::to_string(pres.checks().size()) + " checks" : first_failure(pres)) +
            "; sign-flipped R-bar form " + (flipped ? "differs in " + std::to_string(flipped) + " terms" : "also matches"));

  auto G = group_like_closure(A, A.grouplikes);
  c.add("closure of <g,h,k> has order 27", G.order() == 27, std::to_string(G.order()));

  // (chi x)^i for i = 1..q in D(A_0); the closed form is w^(2ij).
  const auto q = kA0.q;
  auto ops = exact_ops(dd->D);
  Element chix = dd->pure(P.chi, P.x_base);
  std::vector<NamedElement> gens;
  std::vector<std::vector<CycNumber>> expected(q, std::vector<CycNumber>(q));
  for (std::int64_t i = 1; i <= q; ++i) {
    gens.push_back(to_named("(chi x)^" + std::to_string(i), ops.pow(chix, i)));
    for (std::int64_t j = 1; j <= q; ++j) expected[i - 1][j - 1] = CycNumber::root_of_unity(q, 2 * i * j);
  }
  auto mp = central_pairing_solve_modular(dd->D, dd->R, gens, expected);
  const bool nondeg = square_matrix_invertible(expected, dd->D.field());
  auto lattice = unique_solution_check(ZModSystem({{2}}, {q}));
  c.add("pairing (w^2ij) nondegenerate", mp.matches_expected && nondeg && lattice.unique,
        std::string(mp.matches_expected ? "solve matches closed form" : "solve differs from closed form") + " (" +
            mp.backend + "); exponent 2 mod 3 has " + lattice.count.get_str() + " solution");

  RibbonCertificate cert = drinfeld_element(A, P.Rbar());
  std::vector<NamedElement> cands;
  for (std::size_t i = 0; i < G.order(); ++i) cands.push_back(to_named(G.labels[i], G.elements[i]));
  kr_ribbon_search(A, P.Rbar(), cert, cands, false);
  record_s4("A(7,3)", cert);
  c.add("KR search finds a ribbon element", !cert.ribbons.empty(),
        std::to_string(cert.ribbons.size()) + " of " + std::to_string(cands.size()) + " group-likes admissible");
  return c;
}

Criterion criterion5() {
  Criterion c;
  auto T = build_taft_pipeline(3);
  auto& K = T.K();
  c.add("Taft_3 -> D (dim 81) -> quotient (dim 27)", T.base->dim() == 9 && T.dd->D.dim() == 81 && K.dim() == 27,
        std::to_string(T.base->dim()) + " -> " + std::to_string(T.dd->D.dim()) + " -> " + std::to_string(K.dim()));
  c.add("quotient certified with R-bar", K.certified && T.qm.Rbar && T.Rbar().verified, first_failure(T.report));
  record_quotient("D(Taft_3)/<chi g>", T.dd->D, T.qm);

  auto fr = is_factorizable(K, T.Rbar(), Backend::Exact);
  c.add("exact rank 27", fr.factorizable && fr.rank == 27, std::to_string(fr.rank) + " (" + fr.certificate + ")");

  auto gl = find_group_likes(K);
  auto cert = drinfeld_element(K, T.Rbar());
  kr_ribbon_search(K, T.Rbar(), cert, candidates(gl), gl.complete);
  record_s4("D(Taft_3)/<chi g>", cert);
  c.add("exactly one admissible l", gl.complete && cert.admissible.size() == 1 && cert.unique,
        std::to_string(cert.admissible.size()) + " of " + std::to_string(gl.elements.size()) +
            (gl.complete ? " (complete list)" : " (incomplete list)"));
  auto ops = exact_ops(K);
  Element g_inv2 = ops.pow(ops.antipode(T.named["g"]), 2);
  bool v_ok = cert.admissible.size() == 1 && ops.equal(cert.ribbons[0], ops.mul(g_inv2, cert.u));
  c.add("v = g^-2 u", v_ok);

  Report rel = verify_double_relations(
      T.dd->D, {{"1", T.in_double["x"], T.in_double["y"], T.in_double["chi"], T.in_double["g"]}});
  c.add("xy - yx = chi - g in D(Taft_3)", rel.ok(), first_failure(rel));
  return c;
}

// Permutation expansion; independent of the elimination-based determinant.
mpz_class leibniz_det(const LongMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Criterion criterion6() {
  Criterion c;
  int mismatches = 0;
  std::string first;
  for (long n = 2; n <= 100; ++n) {
    bool ok = determinant_conditions(h_omega_datum(n), 2 * n).ok();
    if (ok != (std::gcd(n, 21L) == 1)) {
      if (!mismatches) first = "n = " + std::to_string(n);
      ++mismatches;
    }
  }
  c.add("H(w,n) conditions hold iff gcd(n,21) = 1, n in [2,100]", mismatches == 0,
        mismatches ? std::to_string(mismatches) + " mismatches, first " + first : "99 values");

  const LongMatrix M = standard_pairing_matrix(h_omega_datum(5), 10);
  LongMatrix S = M;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) S[i][j] = M[i][j] + M[j][i];
  auto snf_abs = [](const LongMatrix& m) {
    mpz_class p = 1;
    for (const auto& d : smith_normal_form(to_int_matrix(m)).diagonal) p *= d;
    return p;
  };
  // |ker(x -> xM)| on Z_189^2 is |det M| once every invariant factor divides 189.
  auto cokernel = [](const LongMatrix& m) { return kernel_size_brute(ZModSystem(m, {189, 189})).first; };
  const mpz_class dM = abs(determinant(to_int_matrix(M))), dS = abs(determinant(to_int_matrix(S)));
  bool m_ok = dM == 7 && snf_abs(M) == 7 && abs(leibniz_det(M)) == 7 && cokernel(M) == 7;
  bool s_ok = dS == 27 && snf_abs(S) == 27 && abs(leibniz_det(S)) == 27 && cokernel(S) == 27;
  c.add("det M = 7 (SNF, elimination, expansion, kernel count)", m_ok,
        "SNF " + snf_abs(M).get_str() + ", kernel " + cokernel(M).get_str());
  c.add("det(M + M^t) = 27 (SNF, elimination, expansion, kernel count)", s_ok,
        "SNF " + snf_abs(S).get_str() + ", kernel " + cokernel(S).get_str());

  bool agree = true;
  for (long n : {5L, 7L, 11L}) {
    auto D = k_alpha_datum(n);
    Report r = reduced_datum_conditions(D);
    PairingSystem ps = reduced_pairing_system(D);
    auto [count, witness] = kernel_size_brute(ZModSystem(ps.M, ps.n));
    const Check* u = r.find("unique_solution");
    const bool solver_unique = u && u->status == Status::Pass;
    if (solver_unique != (count == 1)) agree = false;
    std::string detail = "brute-force solutions " + count.get_str();
    if (!r.ok()) detail += "; " + first_failure(r);
    c.add("k_alpha_" + std::to_string(n), r.ok(), detail);
  }
  c.add("solver agrees with brute force on K(alpha,n)", agree);
  return c;
}

ZModSystem random_system(std::mt19937_64& rng) {
  while (true) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<long> n(m);
    long prod = 1;
    for (auto& x : n) x = 1 + static_cast<long>(rng() % 16), prod *= x;
    if (prod > 10000) continue;
    LongMatrix M(m, std::vector<long>(m));
    // Multiples of n_j / gcd(n_i, n_j) keep x -> xM well defined.
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) M[i][j] = n[j] / std::gcd(n[i], n[j]) * (static_cast<long>(rng() % 41) - 20);
    return ZModSystem(M, n);
  }
}

Criterion criterion7() {
  Criterion c;
  std::mt19937_64 rng(7001);
  int disagree = 0, unique = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ZModSystem S = random_system(rng);
    const mpz_class brute = kernel_size_brute(S).first;
    auto sol = unique_solution_check(S, 0);  // brute force is compared separately
    if (kernel_size_local(S) != brute || kernel_size_lattice(S) != brute || sol.unique != (brute == 1)) ++disagree;
    if (brute == 1) ++unique;
  }
  c.add("solver agrees with brute force on 1000 systems", disagree == 0,
        std::to_string(disagree) + " disagreements; " + std::to_string(unique) + " unique");
  return c;
}

Criterion criterion8() {
  Criterion c;

  {
    std::vector<HopfAlgebra> hs;
    hs.push_back(group_algebra(metacyclic_group(7, 3, 2)));
    hs.push_back(dual_group_algebra(metacyclic_group(7, 3, 2)));
    for (long n : {2L, 3L, 4L, 5L}) hs.push_back(build_taft(n, CycNumber::root_of_unity(n, 1)));
    hs.push_back(build_script_A(kA0));
    hs.push_back(build_script_A({7, 3, 2, 1}));
    std::string bad;
    for (const auto& H : hs)
      if (!structures_equal(dual_hopf(dual_hopf(H)).s, H.s)) bad += H.name + " ";
    c.add("dual involution", bad.empty(), bad.empty() ? std::to_string(hs.size()) + " algebras" : bad);
  }

  {
    auto pair_s4 = [](const std::string& name, const HopfAlgebra& H, RMatrix R) {
      if (!R.verified) return;
      record_s4(name, drinfeld_element(H, R));
    };
    for (long n : {2L, 3L, 5L}) {
      auto dd = build_group_double(cyclic_group(n, "g"), "kZ" + std::to_string(n));
      pair_s4(dd->D.name, dd->D, dd->R);
    }
    {
      auto dd = build_group_double(metacyclic_group(3, 2, 2), "kS3");
      pair_s4(dd->D.name, dd->D, dd->R);
    }
    for (long n : {2L, 3L, 4L}) {
      auto T = build_taft_pipeline(n);
      pair_s4(T.dd->D.name, T.dd->D, T.dd->R);
      if (T.qm.Rbar) pair_s4(T.K().name, T.K(), T.Rbar());
      record_quotient(T.K().name, T.dd->D, T.qm);
    }
    std::string bad;
    for (const auto& [name, ok] : shared.s4)
      if (!ok) bad += name + " ";
    c.add("S^4 = g(-)g^-1 on every verified QT pair", bad.empty() && !shared.s4.empty(),
          bad.empty() ? std::to_string(shared.s4.size()) + " pairs" : bad);
  }

  {
    for (long n : {2L, 3L, 4L, 6L}) {
      auto dd = build_group_double(cyclic_group(n, "g"), "kZ" + std::to_string(n));
      const auto& D = dd->D;
      // chi * g with chi(g) = w: central because the double of an abelian group is commutative.
      NamedElement chi{"chi", {}};
      for (long j = 0; j < n; ++j) chi.terms.emplace_back(static_cast<std::uint32_t>(j), CycNumber::root_of_unity(n, j));
      Element chig = dd->pure(chi, NamedElement{"g", {{1, CycNumber(1)}}});
      QuotientOptions qo;
      qo.name = D.name + "/<chi g>";
      auto qm = quotient_by_central_grouplikes(D, &dd->R, {to_named("chi*g", chig)}, qo);
      record_quotient(qo.name, D, qm);
    }
    std::string bad;
    for (const auto& [name, ok] : shared.dims)
      if (!ok) bad += name + " ";
    c.add("dimension multiplicativity on every quotient", bad.empty(),
          bad.empty() ? std::to_string(shared.dims.size()) + " quotients" : bad);
  }

  {
    auto P = parse_presentation(corpus("taft.halg"), {{"n", 4}});
    RewriteSystem rs(P);
    std::mt19937_64 rng(8001);
    std::uniform_int_distribution<int> len(0, 9), gen(0, 1), coef(-5, 5), nterms(1, 4);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Lin expr;
      for (int t = nterms(rng); t > 0; --t) {
        Word w;
        for (int l = len(rng); l > 0; --l) w.push_back(static_cast<std::uint16_t>(gen(rng)));
        if (int k = coef(rng)) detail::lin_add(expr, w, CycNumber(k) * CycNumber::root_of_unity(4, t));
      }
      Lin a = rs.normal_form(expr, Strategy::Leftmost);
      bool same = true;
      for (std::uint64_t s = 1; s <= 3; ++s) same = same && rs.normal_form(expr, Strategy::Random, s + 17 * trial) == a;
      for (const auto& [w, k] : a) same = same && rs.is_normal(w);
      if (!same) ++bad;
    }
    c.add("strategy-independent normal forms, 100 Taft expressions", bad == 0, std::to_string(bad) + " differ");
  }

  {
    std::string bad;
    for (long n : {2L, 3L, 4L, 5L}) {
      HopfAlgebra P = realize_presentation(parse_presentation(corpus("taft.halg"), {{"n", n}}));
      HopfAlgebra T = build_taft(n, CycNumber::root_of_unity(n, 1));
      for (HopfAlgebra* H : {&P, &T}) {
        H->name.clear();
        H->grouplikes.clear();
        H->characters.clear();
      }
      if (write_hopf(P) != write_hopf(T)) bad += "n=" + std::to_string(n) + " ";
    }
    c.add("presented Taft byte-identical to direct build", bad.empty(), bad.empty() ? "n = 2..5" : bad);
  }
  return c;
}

Criterion criterion9() {
  Criterion c;
  Stopwatch sw;
  auto dd = build_group_double(metacyclic_group(7, 3, 2), "kG(7,3)");
  const HopfAlgebra& D = dd->D;
  c.add("dim 441, certified", D.dim() == 441 && D.certified && dd->R.verified, std::to_string(D.dim()));
  RMatrix R = dd->R;
  auto fr = is_factorizable(D, R, Backend::Exact);
  c.add("factorizable, exact rank 441", fr.factorizable && fr.rank == 441, std::to_string(fr.rank));
  auto gl = find_group_likes(D);
  auto cert = drinfeld_element(D, R);
  kr_ribbon_search(D, R, cert, candidates(gl), gl.complete);
  record_s4(D.name, cert);
  auto ops = exact_ops(D);
  bool v_is_u = false;
  for (const auto& v : cert.ribbons) v_is_u = v_is_u || ops.equal(v, cert.u);
  c.add("ribbon v = u found by search", v_is_u,
        std::to_string(cert.ribbons.size()) + " ribbon elements among " + std::to_string(gl.elements.size()) + " group-likes");
  const double t = sw.seconds();
  c.add("under 60 s", t < 60, secs(t));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Criterion()>>> all = {
      {1, {"A_0(7,3) axioms and matched pair", criterion1}},
      {2, {"dual identities of A_0(7,3)", criterion2}},
      {3, {"D(A_0): quasitriangular and factorizable", criterion3}},
      {4, {"A(7,3) presentation, group-likes, pairing, ribbon", criterion4}},
      {5, {"Taft_3 pipeline", criterion5}},
      {6, {"datum analyzer", criterion6}},
      {7, {"unique-solution solver vs brute force", criterion7}},
      {8, {"property suites", criterion8}},
      {9, {"D(kG_(7,3)) ribbon factorizable", criterion9}},
  };
  std::vector<int> selected;
  std::set<std::string> known;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-v") {
      verbose = true;
    } else if (a == "--known-failure" && i + 1 < argc) {
      known.insert(argv[++i]);
    } else if (a.find_first_not_of("0123456789") == std::string::npos && all.count(std::stoi(a))) {
      selected.push_back(std::stoi(a));
    } else {
      std::cerr << "usage: acceptance [-v] [--known-failure NAME]... [1-9 ...]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const auto& [k, v] : all) selected.push_back(k);

  bool unexpected = false;
  for (int k : selected) {
    const auto& [title, fn] = all.at(k);
    Stopwatch sw;
    Criterion c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.add("exception", false, e.what());
    }
    std::vector<std::string> known_hits;
    for (const auto& s : c.subs) {
      if (s.pass) continue;
      if (known.count(s.name)) {
        known_hits.push_back(s.name);
      } else {
        unexpected = true;
      }
    }
    std::cout << "criterion " << k << ": " << (c.pass() ? "PASS" : "FAIL") << "  " << title << "  (" << secs(sw.seconds())
              << ")";
    if (!known_hits.empty()) {
      std::cout << "  known failure:";
      for (const auto& h : known_hits) std::cout << " " << h;
    }
    std::cout << "\n";
    for (const auto& s : c.subs)
      if (verbose || !s.pass)
        std::cout << "    [" << (s.pass ? "ok" : "FAIL") << "] " << s.name << (s.detail.empty() ? "" : "  " + s.detail)
                  << "\n";
    std::cout.flush();
  }
  return unexpected ? 1 : 0;
}
