#pragma once

// Hopf-axiom certification over structure constants. Every check is phrased
// per basis index i so that the three modes (exact, modular, sampled) share one
// implementation: exact and modular run every index (subject to a work budget),
// sampled runs a seeded subset exactly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/hopf_algebra.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/parallel.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

enum class Mode { Auto, Exact, Modular, Sampled };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Exact: return "exact";
    case Mode::Modular: return "modular";
    case Mode::Sampled: return "sampled";
  }
  return "?";
}

inline Mode parse_mode(const std::string& s) {
  if (s == "auto") return Mode::Auto;
  if (s == "exact") return Mode::Exact;
  if (s == "modular") return Mode::Modular;
  if (s == "sampled") return Mode::Sampled;
  throw Error(ErrorKind::BadParameters, "unknown mode '" + s + "'");
}

struct VerifyOptions {
  Mode mode = Mode::Auto;
  std::uint64_t seed = 20240601;
  std::size_t samples = 32;          // indices per check in sampled mode
  double exact_budget = 4e7;         // elementary term operations per check
  double modular_budget = 5e9;
  std::uint32_t exact_limit = 200;   // Auto: exact up to this dimension
  std::uint32_t modular_limit = 5000;
  bool allow_large = false;
};

namespace detail {

inline std::string key_str(std::uint64_t key, int degree) {
  std::ostringstream os;
  os << "(";
  for (int l = 0; l < degree; ++l) os << (l ? "," : "") << leg(key, l);
  os << ")";
  return os.str();
}

template <class F>
std::optional<std::string> first_nonzero(const Accumulator<F>& acc, const F& f, int degree) {
  std::optional<std::uint64_t> best;
  for (const auto& [k, v] : acc.raw())
    if (!f.is_zero(v) && (!best || k < *best)) best = k;
  if (!best) return std::nullopt;
  return "term " + key_str(*best, degree);
}

}  // namespace detail

// Checks one Hopf axiom family at one primary index.
template <class F>
class AxiomChecker {
 public:
  using V = typename F::value_type;

  AxiomChecker(const Structure<V>& s, F f) : s_(s), f_(std::move(f)), col_(s.dim), rev_(s.dim) {
    for (std::uint32_t j = 0; j < s.dim; ++j) {
      for (const auto& t : s.mult[j]) col_[t.k].push_back({j, t.j, t.coeff});
      for (const auto& t : s.comult[j]) rev_[t.j].push_back({j, t.k, t.coeff});
    }
  }

  const F& field() const { return f_; }
  std::uint32_t dim() const { return s_.dim; }

  double work_associativity(std::uint32_t i) const {
    double w = 1;
    for (const auto& t : s_.mult[i]) w += double(s_.mult[t.k].size()) + double(col_[t.j].size());
    return w;
  }
  double work_comult_mult(std::uint32_t i) const {
    double w = 1;
    for (const auto& t : s_.mult[i]) w += double(s_.comult[t.k].size());
    for (const auto& d : s_.comult[i])
      for (const auto& m : s_.mult[d.j]) w += double(rev_[m.j].size()) * 2;
    return w;
  }
  double work_default(std::uint32_t i) const {
    double w = 1;
    for (const auto& t : s_.comult[i]) w += double(s_.comult[t.j].size() + s_.comult[t.k].size() + s_.antipode[t.j].size() + s_.antipode[t.k].size());
    return w + double(s_.unit.size()) * 2;
  }

  // (b_i b_j) b_k = b_i (b_j b_k) for all j, k.
  std::optional<std::string> associativity(std::uint32_t i) const {
    Accumulator<F> acc(f_);
    for (const auto& t : s_.mult[i])  // b_i b_j -> c b_p with p = t.k
      for (const auto& u : s_.mult[t.k]) acc.add(key3(t.j, u.j, u.k), f_.mul(t.coeff, u.coeff));
    for (const auto& t : s_.mult[i])  // b_i b_q -> c b_r with q = t.j
      for (const auto& u : col_[t.j])  // b_j b_k -> c' b_q, stored as (j, k, c')
        acc.sub(key3(u.j, u.k, t.k), f_.mul(t.coeff, u.coeff));
    auto w = detail::first_nonzero(acc, f_, 3);
    if (w) return "i=" + std::to_string(i) + " (j,k,result) " + *w;
    return std::nullopt;
  }

  std::optional<std::string> unit(std::uint32_t i) const {
    Accumulator<F> left(f_), right(f_);
    for (const auto& u : s_.unit) {
      auto [lo, hi] = s_.product(u.index, i);
      for (auto it = lo; it != hi; ++it) left.add(it->k, f_.mul(u.coeff, it->coeff));
      auto [lo2, hi2] = s_.product(i, u.index);
      for (auto it = lo2; it != hi2; ++it) right.add(it->k, f_.mul(u.coeff, it->coeff));
    }
    left.sub(i, f_.one());
    right.sub(i, f_.one());
    if (!left.all_zero()) return "1*b_" + std::to_string(i) + " != b_" + std::to_string(i);
    if (!right.all_zero()) return "b_" + std::to_string(i) + "*1 != b_" + std::to_string(i);
    return std::nullopt;
  }

  std::optional<std::string> coassociativity(std::uint32_t i) const {
    Accumulator<F> acc(f_);
    for (const auto& t : s_.comult[i]) {
      for (const auto& u : s_.comult[t.j]) acc.add(key3(u.j, u.k, t.k), f_.mul(t.coeff, u.coeff));
      for (const auto& u : s_.comult[t.k]) acc.sub(key3(t.j, u.j, u.k), f_.mul(t.coeff, u.coeff));
    }
    auto w = detail::first_nonzero(acc, f_, 3);
    if (w) return "i=" + std::to_string(i) + " " + *w;
    return std::nullopt;
  }

  std::optional<std::string> counit(std::uint32_t i) const {
    Accumulator<F> left(f_), right(f_);
    for (const auto& t : s_.comult[i]) {
      left.add(t.k, f_.mul(t.coeff, s_.counit[t.j]));
      right.add(t.j, f_.mul(t.coeff, s_.counit[t.k]));
    }
    left.sub(i, f_.one());
    right.sub(i, f_.one());
    if (!left.all_zero()) return "(eps x id)Delta(b_" + std::to_string(i) + ") != b_" + std::to_string(i);
    if (!right.all_zero()) return "(id x eps)Delta(b_" + std::to_string(i) + ") != b_" + std::to_string(i);
    return std::nullopt;
  }

  // Delta(b_i b_j) = Delta(b_i) Delta(b_j) for all j.
  std::optional<std::string> comult_multiplicative(std::uint32_t i) const {
    Accumulator<F> acc(f_);
    for (const auto& t : s_.mult[i])
      for (const auto& d : s_.comult[t.k]) acc.add(key3(t.j, d.j, d.k), f_.mul(t.coeff, d.coeff));
    for (const auto& d : s_.comult[i]) {          // b_p (x) b_q
      for (const auto& m : s_.mult[d.j]) {        // b_p b_s -> b_x
        V c1 = f_.mul(d.coeff, m.coeff);
        for (const auto& r : rev_[m.j]) {         // Delta(b_j) has b_s (x) b_t
          auto [lo, hi] = s_.product(d.k, r.k);   // b_q b_t -> b_y
          if (lo == hi) continue;
          V c2 = f_.mul(c1, r.coeff);
          for (auto it = lo; it != hi; ++it) acc.sub(key3(r.j, m.k, it->k), f_.mul(c2, it->coeff));
        }
      }
    }
    auto w = detail::first_nonzero(acc, f_, 3);
    if (w) return "i=" + std::to_string(i) + " (j,left,right) " + *w;
    return std::nullopt;
  }

  // eps(b_i b_j) = eps(b_i) eps(b_j) for all j.
  std::optional<std::string> counit_multiplicative(std::uint32_t i) const {
    Accumulator<F> acc(f_);
    for (const auto& t : s_.mult[i]) acc.add(t.j, f_.mul(t.coeff, s_.counit[t.k]));
    if (!f_.is_zero(s_.counit[i]))
      for (std::uint32_t j = 0; j < s_.dim; ++j) acc.sub(j, f_.mul(s_.counit[i], s_.counit[j]));
    auto w = detail::first_nonzero(acc, f_, 1);
    if (w) return "i=" + std::to_string(i) + " j" + *w;
    return std::nullopt;
  }

  std::optional<std::string> antipode(std::uint32_t i) const {
    Accumulator<F> left(f_), right(f_);
    for (const auto& t : s_.comult[i]) {
      for (const auto& a : s_.antipode[t.j]) {
        auto [lo, hi] = s_.product(a.index, t.k);
        for (auto it = lo; it != hi; ++it) left.add(it->k, f_.mul(f_.mul(t.coeff, a.coeff), it->coeff));
      }
      for (const auto& a : s_.antipode[t.k]) {
        auto [lo, hi] = s_.product(t.j, a.index);
        for (auto it = lo; it != hi; ++it) right.add(it->k, f_.mul(f_.mul(t.coeff, a.coeff), it->coeff));
      }
    }
    if (!f_.is_zero(s_.counit[i]))
      for (const auto& u : s_.unit) {
        left.sub(u.index, f_.mul(s_.counit[i], u.coeff));
        right.sub(u.index, f_.mul(s_.counit[i], u.coeff));
      }
    if (!left.all_zero()) return "m(S x id)Delta(b_" + std::to_string(i) + ") != eps*1";
    if (!right.all_zero()) return "m(id x S)Delta(b_" + std::to_string(i) + ") != eps*1";
    return std::nullopt;
  }

  // eps o S = eps and Delta o S = (S x S) o Delta^op at b_i.
  std::optional<std::string> antipode_anticoalgebra(std::uint32_t i) const {
    V e = f_.zero();
    for (const auto& a : s_.antipode[i]) f_.add_to(e, f_.mul(a.coeff, s_.counit[a.index]));
    if (!f_.eq(e, s_.counit[i])) return "eps(S(b_" + std::to_string(i) + ")) != eps(b_" + std::to_string(i) + ")";
    Accumulator<F> acc(f_);
    for (const auto& a : s_.antipode[i])
      for (const auto& d : s_.comult[a.index]) acc.add(key2(d.j, d.k), f_.mul(a.coeff, d.coeff));
    for (const auto& d : s_.comult[i])
      for (const auto& x : s_.antipode[d.k])
        for (const auto& y : s_.antipode[d.j]) acc.sub(key2(x.index, y.index), f_.mul(d.coeff, f_.mul(x.coeff, y.coeff)));
    auto w = detail::first_nonzero(acc, f_, 2);
    if (w) return "Delta(S(b_" + std::to_string(i) + ")) differs at " + *w;
    return std::nullopt;
  }

  std::optional<std::string> global_unit_checks() const {
    // Delta(1) = 1 (x) 1 and eps(1) = 1.
    Accumulator<F> acc(f_);
    V e = f_.zero();
    for (const auto& u : s_.unit) {
      f_.add_to(e, f_.mul(u.coeff, s_.counit[u.index]));
      for (const auto& d : s_.comult[u.index]) acc.add(key2(d.j, d.k), f_.mul(u.coeff, d.coeff));
    }
    for (const auto& a : s_.unit)
      for (const auto& b : s_.unit) acc.sub(key2(a.index, b.index), f_.mul(a.coeff, b.coeff));
    if (!acc.all_zero()) return std::string("Delta(1) != 1 (x) 1");
    if (!f_.is_one(e)) return std::string("eps(1) != 1");
    return std::nullopt;
  }

  std::size_t antipode_rank() const {
    std::vector<SparseVec<V>> rows(s_.dim);
    for (std::uint32_t i = 0; i < s_.dim; ++i)
      for (const auto& a : s_.antipode[i]) rows[i].emplace_back(a.index, a.coeff);
    return sparse_rank(rows, s_.dim, f_);
  }

 private:
  const Structure<V>& s_;
  F f_;
  std::vector<std::vector<PairTerm<V>>> col_;  // col_[q]: (j, k, c) with b_j b_k containing c b_q
  std::vector<std::vector<PairTerm<V>>> rev_;  // rev_[s]: (j, t, c) with Delta(b_j) containing c b_s (x) b_t
};

namespace detail {

// Picks the indices to visit: all of `base`, or a seeded subset whose summed
// work fits the budget.
template <class WorkFn>
std::vector<std::uint32_t> budgeted_indices(const std::vector<std::uint32_t>& base, double budget, std::uint64_t seed,
                                            WorkFn work) {
  double total = 0;
  for (auto i : base) total += work(i);
  if (total <= budget) return base;
  std::vector<std::uint32_t> order = base;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint32_t> out;
  double acc = 0;
  for (auto i : order) {
    double w = work(i);
    if (acc + w > budget && !out.empty()) continue;
    acc += w;
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class F, class CheckFn>
Check run_indexed_check(const std::string& name, const std::string& backend, const std::vector<std::uint32_t>& indices,
                        std::uint32_t dim, CheckFn check) {
  Stopwatch sw;
  std::vector<std::optional<std::string>> results(indices.size());
  parallel_for(indices.size(), [&](std::size_t n) { results[n] = check(indices[n]); });
  Check c;
  c.name = name;
  c.backend = backend;
  c.coverage = std::to_string(indices.size()) + "/" + std::to_string(dim) + " indices";
  std::size_t failures = 0;
  for (auto& r : results) {
    if (!r) continue;
    ++failures;
    if (c.witnesses.size() < 5) c.witnesses.push_back(*r);
  }
  c.status = failures ? Status::Fail : Status::Pass;
  if (failures) c.detail = std::to_string(failures) + " failing indices";
  c.seconds = sw.seconds();
  return c;
}

}  // namespace detail

// Runs the full axiom family in one field. `indices` selects primary indices.
template <class F>
Report run_axioms(const Structure<typename F::value_type>& s, const F& f, const std::string& backend,
                  const std::vector<std::uint32_t>& indices, double budget, std::uint64_t seed,
                  bool check_bijective = true) {
  Report r("hopf-axioms");
  AxiomChecker<F> ck(s, f);
  auto d = s.dim;
  auto idx_assoc = detail::budgeted_indices(indices, budget, seed, [&](auto i) { return ck.work_associativity(i); });
  auto idx_cm = detail::budgeted_indices(indices, budget, seed + 1, [&](auto i) { return ck.work_comult_mult(i); });
  auto idx_def = detail::budgeted_indices(indices, budget, seed + 2, [&](auto i) { return ck.work_default(i); });
  r.add(detail::run_indexed_check<F>("associativity", backend, idx_assoc, d, [&](auto i) { return ck.associativity(i); }));
  r.add(detail::run_indexed_check<F>("unit", backend, idx_def, d, [&](auto i) { return ck.unit(i); }));
  r.add(detail::run_indexed_check<F>("coassociativity", backend, idx_def, d, [&](auto i) { return ck.coassociativity(i); }));
  r.add(detail::run_indexed_check<F>("counit", backend, idx_def, d, [&](auto i) { return ck.counit(i); }));
  r.add(detail::run_indexed_check<F>("comult_multiplicative", backend, idx_cm, d,
                                     [&](auto i) { return ck.comult_multiplicative(i); }));
  r.add(detail::run_indexed_check<F>("counit_multiplicative", backend, idx_def, d,
                                     [&](auto i) { return ck.counit_multiplicative(i); }));
  {
    auto w = ck.global_unit_checks();
    r.add("unit_is_grouplike", !w, w ? *w : "", backend);
  }
  r.add(detail::run_indexed_check<F>("antipode", backend, idx_def, d, [&](auto i) { return ck.antipode(i); }));
  r.add(detail::run_indexed_check<F>("antipode_anticoalgebra", backend, idx_def, d,
                                     [&](auto i) { return ck.antipode_anticoalgebra(i); }));
  if (check_bijective) {
    Stopwatch sw;
    auto rank = ck.antipode_rank();
    auto& c = r.add("antipode_bijective", rank == d, "rank " + std::to_string(rank) + "/" + std::to_string(d), backend);
    c.seconds = sw.seconds();
  }
  return r;
}

// Specializes H into F_ell, retrying with fresh primes on bad denominators.
template <class Fn>
auto with_specialization(std::int64_t conductor, std::uint64_t seed, Fn fn) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0;; ++attempt) {
    PrimeSpecialization spec = choose_specialization(conductor, rng);
    try {
      return fn(ModField{spec});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadDenominator || attempt >= 4) throw;
    }
  }
}

inline std::vector<std::uint32_t> all_indices(std::uint32_t d) {
  std::vector<std::uint32_t> v(d);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

inline std::vector<std::uint32_t> sample_indices(std::uint32_t d, std::size_t k, std::uint64_t seed) {
  auto v = all_indices(d);
  if (k >= d) return v;
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(k);
  std::sort(v.begin(), v.end());
  return v;
}

inline std::string modular_backend_name(const ModField& f) { return "modular(" + std::to_string(f.p()) + ")"; }

inline Report verify_structure(const Structure<CycNumber>& s, std::int64_t conductor, const VerifyOptions& opt) {
  Mode mode = opt.mode;
  if (mode == Mode::Auto) {
    if (s.dim <= opt.exact_limit)
      mode = Mode::Exact;
    else if (s.dim <= opt.modular_limit || opt.allow_large)
      mode = Mode::Modular;
    else
      throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(s.dim) + " above the modular limit");
  }
  Report report("hopf-axioms");
  if (mode == Mode::Exact) {
    report.merge(run_axioms(s, ExactField{conductor}, "exact", all_indices(s.dim), opt.exact_budget, opt.seed));
  } else if (mode == Mode::Sampled) {
    auto idx = sample_indices(s.dim, opt.samples, opt.seed);
    report.merge(run_axioms(s, ExactField{conductor}, "sampled(" + std::to_string(idx.size()) + ")", idx,
                            opt.exact_budget, opt.seed, s.dim <= opt.modular_limit));
  } else {
    Report mod = with_specialization(conductor, opt.seed, [&](const ModField& f) {
      auto ms = map_structure(s, f);
      return run_axioms(ms, f, modular_backend_name(f), all_indices(s.dim), opt.modular_budget, opt.seed);
    });
    report.merge(mod);
    if (opt.mode == Mode::Auto) {
      auto idx = sample_indices(s.dim, opt.samples, opt.seed);
      Report ex = run_axioms(s, ExactField{conductor}, "sampled(" + std::to_string(idx.size()) + ")", idx,
                             opt.exact_budget, opt.seed, false);
      report.merge(ex, "exact_sample");
    }
  }
  return report;
}

inline Report verify_hopf_axioms(const HopfAlgebra& H, const VerifyOptions& opt = {}) {
  return verify_structure(H.s, H.conductor, opt);
}

// Verifies and records the outcome on H.
inline Report certify(HopfAlgebra& H, const VerifyOptions& opt = {}) {
  Report r = verify_hopf_axioms(H, opt);
  H.certified = r.ok();
  std::string backends;
  for (const auto& c : r.checks())
    if (backends.find(c.backend) == std::string::npos) backends += (backends.empty() ? "" : ",") + c.backend;
  H.certification = backends;
  return r;
}

}  // namespace hopfkit
