#pragma once

// Presented algebras: a small DSL of generators, oriented relations, a declared
// normal-word basis and coalgebra data on generators, compiled to structure
// constants by rewriting. Confluence is certified on all overlaps before use.
//
// Grammar (line oriented, '#' starts a comment):
//   algebra NAME(n=3, k=1)          integer parameters, overridable by callers
//   conductor EXPR                  integer expression in the parameters
//   scalar q = EXPR                 scalar-valued expression (z is zeta_N, z_M is zeta_M)
//   gens x, g                       declared order, smallest first
//   weights: u=3, v=3               optional positive generator weights (default 1)
//   relations:                      then lines  WORD = EXPR
//   basis: x^[0..n) * g^[0..n)      normal words, first factor most significant
//   coalgebra:                      then lines  delta a = A (x) B + ...  and  eps a = EXPR
//   antipode:                       then lines  S a = EXPR
// In delta lines the token sequence "(x)" always separates tensor legs.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/antipode.hpp"
#include "hopfkit/builders.hpp"
#include "hopfkit/verify.hpp"

namespace hopfkit {

using Word = std::vector<std::uint16_t>;
using Lin = std::map<Word, CycNumber>;                        // linear combination of words
using Lin2 = std::map<std::pair<Word, Word>, CycNumber>;      // element of the tensor square

struct Rule {
  Word lhs;
  Lin rhs;
  int line = 0;
};

struct BasisFactor {
  std::uint16_t gen = 0;
  long lo = 0, hi = 0;  // exponents in [lo, hi)
};

struct Presentation {
  std::string name;
  std::vector<std::pair<std::string, long>> int_params;
  std::vector<std::pair<std::string, CycNumber>> scalars;
  std::int64_t conductor = 1;
  std::vector<std::string> gens;
  std::vector<long> weights;  // per generator, positive
  std::vector<Rule> rules;
  std::vector<BasisFactor> basis;
  std::vector<std::optional<Lin2>> delta;
  std::vector<std::optional<CycNumber>> eps;
  std::vector<std::optional<Lin>> antipode;

  std::string word_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!s.empty()) s += "*";
      s += gens[w[i]];
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }
  std::string lin_string(const Lin& x) const {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : x) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + word_string(w);
    }
    return s;
  }
};

// Degree-lexicographic order: shorter words first, then lexicographic in generator order.
inline bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Weighted variant: total weight first, then length, then lexicographic. Positive
// weights keep the order a well-order compatible with concatenation.
inline bool deglex_less(const Word& a, const Word& b, const std::vector<long>& weights) {
  auto wt = [&](const Word& w) {
    long t = 0;
    for (auto g : w) t += g < weights.size() ? weights[g] : 1;
    return t;
  };
  const long wa = wt(a), wb = wt(b);
  if (wa != wb) return wa < wb;
  return deglex_less(a, b);
}

namespace detail {

inline void lin_add(Lin& acc, const Word& w, const CycNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline Lin lin_mul(const Lin& a, const Lin& b) {
  Lin out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      lin_add(out, w, c * d);
    }
  return out;
}

inline Lin lin_scalar(const CycNumber& c) {
  Lin out;
  lin_add(out, Word{}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Tokenizer and recursive-descent parser.

struct Token {
  enum Kind { Ident, Number, Sym, Tensor, End } kind = End;
  std::string text;
  int col = 0;
};

class LineParser {
 public:
  LineParser(const std::string& text, int line, const Presentation& P, const std::map<std::string, long>& ints)
      : line_(line), P_(P), ints_(ints) {
    tokenize(text);
  }

  bool at_end() const { return peek().kind == Token::End; }
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(const std::string& sym) {
    if (peek().kind == Token::Sym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "'");
  }
  std::string ident() {
    if (peek().kind != Token::Ident) fail("expected a name");
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }
  [[noreturn]] void fail(const std::string& why, ErrorKind kind = ErrorKind::Syntax) const {
    throw Error(kind, "line " + std::to_string(line_) + ", column " + std::to_string(peek().col) + ": " + why);
  }

  // intexpr := ['-'] intatom (('+'|'-'|'*') intatom)*
  long int_expr() {
    long v = int_term();
    for (;;) {
      if (accept("+")) v += int_term();
      else if (accept("-")) v -= int_term();
      else return v;
    }
  }

  // sum := ['-'] product (('+'|'-') product)*, one tensor leg.
  Lin sum() {
    Lin out;
    bool neg = accept("-");
    for (;;) {
      Lin t = product();
      for (const auto& [w, c] : t) lin_add(out, w, neg ? -c : c);
      if (accept("+")) neg = false;
      else if (accept("-")) neg = true;
      else return out;
    }
  }

  // tensor_sum := ['-'] product (x) product (('+'|'-') product (x) product)*
  Lin2 tensor_sum() {
    Lin2 out;
    bool neg = accept("-");
    for (;;) {
      Lin a = product();
      if (peek().kind != Token::Tensor) fail("expected '(x)' between tensor legs");
      ++pos_;
      Lin b = product();
      for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) {
          CycNumber e = neg ? -(c * d) : c * d;
          if (e.is_zero()) continue;
          auto key = std::make_pair(u, v);
          auto [it, ins] = out.try_emplace(key, e);
          if (!ins) {
            it->second += e;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      if (accept("+")) neg = false;
      else if (accept("-")) neg = true;
      else return out;
    }
  }

  Lin product() {
    Lin out = power();
    while (accept("*")) out = lin_mul(out, power());
    return out;
  }

 private:
  int line_;
  const Presentation& P_;
  const std::map<std::string, long>& ints_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  void tokenize(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size()) {
      char ch = s[i];
      int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
      } else if (s.compare(i, 3, "(x)") == 0) {
        toks_.push_back({Token::Tensor, "(x)", col});
        i += 3;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        toks_.push_back({Token::Ident, s.substr(i, j - i), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks_.push_back({Token::Number, s.substr(i, j - i), col});
        i = j;
      } else if (s.compare(i, 2, "..") == 0) {
        toks_.push_back({Token::Sym, "..", col});
        i += 2;
      } else if (std::string("+-*^/()=,[]:").find(ch) != std::string::npos) {
        toks_.push_back({Token::Sym, std::string(1, ch), col});
        ++i;
      } else {
        throw Error(ErrorKind::Syntax, "line " + std::to_string(line_) + ", column " + std::to_string(col) +
                                           ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
    toks_.push_back({Token::End, "end of line", static_cast<int>(s.size()) + 1});
  }

  long int_term() {
    long v = int_atom();
    while (accept("*")) v *= int_atom();
    return v;
  }

  long int_atom() {
    if (accept("-")) return -int_atom();
    if (accept("(")) {
      long v = int_expr();
      expect(")");
      return v;
    }
    if (peek().kind == Token::Number) return std::stol(next().text);
    if (peek().kind == Token::Ident) {
      auto it = ints_.find(peek().text);
      if (it == ints_.end()) fail("unknown integer parameter '" + peek().text + "'", ErrorKind::UnknownSymbol);
      ++pos_;
      return it->second;
    }
    fail("expected an integer");
  }

  Lin power() {
    Lin base = atom();
    if (!accept("^")) return base;
    long e = int_atom();
    if (e < 0) {
      if (base.size() != 1 || !base.begin()->first.empty()) fail("negative powers apply to scalars only");
      return lin_scalar(base.begin()->second.pow(e));
    }
    Lin out = lin_scalar(CycNumber(1));
    for (long k = 0; k < e; ++k) out = lin_mul(out, base);
    return out;
  }

  Lin atom() {
    if (accept("(")) {
      Lin v = sum();
      expect(")");
      return v;
    }
    if (peek().kind == Token::Number) {
      long num = std::stol(next().text);
      if (accept("/")) {
        if (peek().kind != Token::Number) fail("expected a denominator");
        long den = std::stol(next().text);
        if (den == 0) fail("zero denominator");
        return lin_scalar(CycNumber(num) * CycNumber(den).inverse());
      }
      return lin_scalar(CycNumber(num));
    }
    if (peek().kind != Token::Ident) fail("expected a generator, parameter or number");
    const std::string name = next().text;
    for (std::size_t g = 0; g < P_.gens.size(); ++g)
      if (P_.gens[g] == name) return Lin{{Word{static_cast<std::uint16_t>(g)}, CycNumber(1)}};
    for (const auto& [n, c] : P_.scalars)
      if (n == name) return lin_scalar(c);
    if (auto it = ints_.find(name); it != ints_.end()) return lin_scalar(CycNumber(it->second));
    const auto N = P_.conductor;
    if (name == "z") return lin_scalar(CycNumber::root_of_unity(N, 1));
    if (name.size() > 2 && name.compare(0, 2, "z_") == 0 &&
        std::all_of(name.begin() + 2, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      long M = std::stol(name.substr(2));
      if (M <= 0 || N % M != 0)
        fail("root order " + std::to_string(M) + " does not divide conductor " + std::to_string(N),
             ErrorKind::ConductorMismatch);
      return lin_scalar(CycNumber::root_of_unity(N, N / M));
    }
    fail("unknown symbol '" + name + "'", ErrorKind::UnknownSymbol);
  }
};

inline std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline bool starts_with_word(const std::string& s, const std::string& w) {
  if (s.compare(0, w.size(), w) != 0) return false;
  return s.size() == w.size() || !(std::isalnum(static_cast<unsigned char>(s[w.size()])) || s[w.size()] == '_');
}

inline Word single_word(const Lin& x, LineParser& lp) {
  if (x.size() != 1 || !x.begin()->second.is_one()) lp.fail("left-hand side must be a single word");
  return x.begin()->first;
}

}  // namespace detail

// Parses DSL text; `overrides` replaces declared integer parameters by name.
inline Presentation parse_presentation(const std::string& text, const std::map<std::string, long>& overrides = {}) {
  Presentation P;
  std::map<std::string, long> ints;
  enum class Section { Header, Relations, Coalgebra, Antipode } sec = Section::Header;
  bool have_conductor = false, have_gens = false;
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto nl = text.find('\n', start);
      if (nl == std::string::npos) nl = text.size();
      lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }
  auto require_gens = [&](detail::LineParser& lp) {
    if (!have_gens) lp.fail("generators must be declared first");
  };
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string raw = lines[ln];
    if (auto h = raw.find('#'); h != std::string::npos) raw = raw.substr(0, h);
    std::string s = detail::trim(raw);
    if (s.empty()) continue;
    const int line = static_cast<int>(ln) + 1;
    // Keyword blanked out so reported columns refer to the original line.
    auto body = [&](std::size_t skip) {
      std::string t = raw;
      t.replace(t.find_first_not_of(" \t"), skip, std::string(skip, ' '));
      return t;
    };

    if (detail::starts_with_word(s, "algebra")) {
      detail::LineParser lp(body(7), line, P, ints);
      P.name = lp.ident();
      if (lp.accept("(")) {
        if (!lp.accept(")")) {
          do {
            std::string n = lp.ident();
            lp.expect("=");
            long v = lp.int_expr();
            if (auto it = overrides.find(n); it != overrides.end()) v = it->second;
            P.int_params.emplace_back(n, v);
            ints[n] = v;
          } while (lp.accept(","));
          lp.expect(")");
        }
      }
      lp.expect_end();
      for (const auto& [n, v] : overrides)
        if (!ints.count(n)) throw Error(ErrorKind::UnknownSymbol, "override of undeclared parameter '" + n + "'");
      sec = Section::Header;
    } else if (detail::starts_with_word(s, "conductor")) {
      detail::LineParser lp(body(9), line, P, ints);
      P.conductor = lp.int_expr();
      lp.expect_end();
      if (P.conductor < 1) lp.fail("conductor must be positive");
      have_conductor = true;
      sec = Section::Header;
    } else if (detail::starts_with_word(s, "scalar")) {
      detail::LineParser lp(body(6), line, P, ints);
      if (!have_conductor) lp.fail("conductor must precede scalars");
      std::string n = lp.ident();
      lp.expect("=");
      Lin v = lp.sum();
      lp.expect_end();
      if (v.size() > 1 || (v.size() == 1 && !v.begin()->first.empty())) lp.fail("scalar must not involve generators");
      P.scalars.emplace_back(n, v.empty() ? CycNumber(0) : v.begin()->second);
      sec = Section::Header;
    } else if (detail::starts_with_word(s, "gens")) {
      detail::LineParser lp(body(4), line, P, ints);
      do {
        std::string g = lp.ident();
        if (std::find(P.gens.begin(), P.gens.end(), g) != P.gens.end()) lp.fail("duplicate generator '" + g + "'");
        P.gens.push_back(g);
      } while (lp.accept(","));
      lp.expect_end();
      have_gens = true;
      P.delta.assign(P.gens.size(), std::nullopt);
      P.eps.assign(P.gens.size(), std::nullopt);
      P.antipode.assign(P.gens.size(), std::nullopt);
      P.weights.assign(P.gens.size(), 1);
      sec = Section::Header;
    } else if (detail::starts_with_word(s, "weights")) {
      detail::LineParser lp(body(7), line, P, ints);
      require_gens(lp);
      lp.expect(":");
      do {
        std::string g = lp.ident();
        auto it = std::find(P.gens.begin(), P.gens.end(), g);
        if (it == P.gens.end()) lp.fail("unknown generator '" + g + "'", ErrorKind::UnknownSymbol);
        lp.expect("=");
        long w = lp.int_expr();
        if (w < 1) lp.fail("weights must be positive");
        P.weights[it - P.gens.begin()] = w;
      } while (lp.accept(","));
      lp.expect_end();
      sec = Section::Header;
    } else if (s == "relations:") {
      sec = Section::Relations;
    } else if (s == "coalgebra:") {
      sec = Section::Coalgebra;
    } else if (s == "antipode:") {
      sec = Section::Antipode;
    } else if (detail::starts_with_word(s, "basis")) {
      detail::LineParser lp(body(5), line, P, ints);
      require_gens(lp);
      lp.expect(":");
      do {
        std::string g = lp.ident();
        auto it = std::find(P.gens.begin(), P.gens.end(), g);
        if (it == P.gens.end()) lp.fail("unknown generator '" + g + "'", ErrorKind::UnknownSymbol);
        lp.expect("^");
        lp.expect("[");
        BasisFactor f;
        f.gen = static_cast<std::uint16_t>(it - P.gens.begin());
        f.lo = lp.int_expr();
        lp.expect("..");
        f.hi = lp.int_expr();
        lp.expect(")");
        if (f.lo < 0 || f.hi <= f.lo) lp.fail("empty or negative exponent range");
        P.basis.push_back(f);
      } while (lp.accept("*"));
      lp.expect_end();
      sec = Section::Header;
    } else if (sec == Section::Relations) {
      detail::LineParser lp(raw, line, P, ints);
      require_gens(lp);
      Lin lhs = lp.product();
      lp.expect("=");
      Rule r;
      r.lhs = detail::single_word(lhs, lp);
      if (r.lhs.empty()) lp.fail("left-hand side must be a nonempty word");
      r.rhs = lp.sum();
      r.line = line;
      lp.expect_end();
      P.rules.push_back(std::move(r));
    } else if (sec == Section::Coalgebra) {
      detail::LineParser lp(raw, line, P, ints);
      require_gens(lp);
      std::string kw = lp.ident();
      std::string g = lp.ident();
      auto it = std::find(P.gens.begin(), P.gens.end(), g);
      if (it == P.gens.end()) lp.fail("unknown generator '" + g + "'", ErrorKind::UnknownSymbol);
      auto gi = static_cast<std::size_t>(it - P.gens.begin());
      lp.expect("=");
      if (kw == "delta") {
        P.delta[gi] = lp.tensor_sum();
      } else if (kw == "eps") {
        Lin v = lp.sum();
        if (v.size() > 1 || (v.size() == 1 && !v.begin()->first.empty())) lp.fail("counit values are scalars");
        P.eps[gi] = v.empty() ? CycNumber(0) : v.begin()->second;
      } else {
        lp.fail("expected 'delta' or 'eps'");
      }
      lp.expect_end();
    } else if (sec == Section::Antipode) {
      detail::LineParser lp(raw, line, P, ints);
      require_gens(lp);
      if (lp.ident() != "S") lp.fail("expected 'S'");
      std::string g = lp.ident();
      auto it = std::find(P.gens.begin(), P.gens.end(), g);
      if (it == P.gens.end()) lp.fail("unknown generator '" + g + "'", ErrorKind::UnknownSymbol);
      lp.expect("=");
      P.antipode[static_cast<std::size_t>(it - P.gens.begin())] = lp.sum();
      lp.expect_end();
    } else {
      throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column 1: unexpected line outside a section");
    }
  }
  if (!have_gens) throw Error(ErrorKind::Syntax, "no generators declared");
  return P;
}

// ---------------------------------------------------------------------------
// Rewriting.

enum class Strategy { Leftmost, Random };

class RewriteSystem {
 public:
  explicit RewriteSystem(const Presentation& P, std::size_t step_bound = 1000000)
      : P_(&P), step_bound_(step_bound) {}

  const Presentation& presentation() const { return *P_; }
  std::size_t step_bound() const { return step_bound_; }

  // First (position, rule) match in the word, or nullopt when the word is normal.
  std::optional<std::pair<std::size_t, std::size_t>> leftmost_match(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t r = 0; r < P_->rules.size(); ++r)
        if (matches(w, pos, P_->rules[r].lhs)) return std::make_pair(pos, r);
    return std::nullopt;
  }

  std::vector<std::pair<std::size_t, std::size_t>> all_matches(const Word& w) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t r = 0; r < P_->rules.size(); ++r)
        if (matches(w, pos, P_->rules[r].lhs)) out.emplace_back(pos, r);
    return out;
  }

  bool is_normal(const Word& w) const { return !leftmost_match(w); }

  // Replaces the occurrence of rule r's left side at pos.
  Lin apply(const Word& w, std::size_t pos, std::size_t r, const CycNumber& c) const {
    const auto& rule = P_->rules[r];
    Lin out;
    for (const auto& [v, d] : rule.rhs) {
      Word u(w.begin(), w.begin() + static_cast<long>(pos));
      u.insert(u.end(), v.begin(), v.end());
      u.insert(u.end(), w.begin() + static_cast<long>(pos + rule.lhs.size()), w.end());
      detail::lin_add(out, u, c * d);
    }
    return out;
  }

  Lin normal_form(const Lin& x, Strategy strategy = Strategy::Leftmost, std::uint64_t seed = 1) const {
    std::mt19937_64 rng(seed);
    Lin pending = x, done;
    std::size_t steps = 0;
    while (!pending.empty()) {
      auto it = pending.begin();
      if (strategy == Strategy::Random && pending.size() > 1)
        std::advance(it, static_cast<long>(rng() % pending.size()));
      Word w = it->first;
      CycNumber c = it->second;
      pending.erase(it);
      std::optional<std::pair<std::size_t, std::size_t>> m;
      if (strategy == Strategy::Leftmost) {
        m = leftmost_match(w);
      } else {
        auto all = all_matches(w);
        if (!all.empty()) m = all[rng() % all.size()];
      }
      if (!m) {
        detail::lin_add(done, w, c);
        continue;
      }
      if (++steps > step_bound_)
        throw Error(ErrorKind::StepLimit, "more than " + std::to_string(step_bound_) + " reductions");
      for (const auto& [v, d] : apply(w, m->first, m->second, c)) detail::lin_add(pending, v, d);
    }
    return done;
  }

 private:
  const Presentation* P_;
  std::size_t step_bound_;

  static bool matches(const Word& w, std::size_t pos, const Word& lhs) {
    if (pos + lhs.size() > w.size()) return false;
    return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos));
  }
};

// Termination order and all overlaps of left-hand sides.
inline Report check_confluence(const RewriteSystem& rs) {
  const auto& P = rs.presentation();
  Report rep("confluence");
  std::size_t order_bad = 0;
  std::string order_witness;
  for (const auto& r : P.rules)
    for (const auto& [w, c] : r.rhs)
      if (!deglex_less(w, r.lhs, P.weights)) {
        if (!order_bad) order_witness = "line " + std::to_string(r.line) + ": " + P.word_string(w) + " is not below " + P.word_string(r.lhs);
        ++order_bad;
      }
  rep.add("rules_decrease_deglex", order_bad == 0, order_witness);

  std::size_t resolved = 0;
  std::vector<std::string> unresolved;
  auto compare = [&](const Word& w, const Lin& a, const Lin& b) {
    Lin na = rs.normal_form(a), nb = rs.normal_form(b);
    if (na == nb) {
      ++resolved;
    } else {
      unresolved.push_back(P.word_string(w) + ": " + P.lin_string(na) + " vs " + P.lin_string(nb));
    }
  };
  const CycNumber one(1);
  for (std::size_t i = 0; i < P.rules.size(); ++i)
    for (std::size_t j = 0; j < P.rules.size(); ++j) {
      const Word& A = P.rules[i].lhs;
      const Word& B = P.rules[j].lhs;
      // Proper overlaps: suffix of A equals prefix of B.
      for (std::size_t k = 1; k < A.size() && k < B.size(); ++k) {
        if (!std::equal(A.end() - static_cast<long>(k), A.end(), B.begin())) continue;
        Word w = A;
        w.insert(w.end(), B.begin() + static_cast<long>(k), B.end());
        compare(w, rs.apply(w, 0, i, one), rs.apply(w, A.size() - k, j, one));
      }
      // Inclusions: B inside A.
      if (i == j || B.size() > A.size()) continue;
      for (std::size_t pos = 0; pos + B.size() <= A.size(); ++pos)
        if (std::equal(B.begin(), B.end(), A.begin() + static_cast<long>(pos)))
          compare(A, rs.apply(A, 0, i, one), rs.apply(A, pos, j, one));
    }
  Check c;
  c.name = "overlaps_resolve";
  c.status = unresolved.empty() ? Status::Pass : Status::Fail;
  c.backend = "exact";
  c.coverage = std::to_string(resolved) + "/" + std::to_string(resolved + unresolved.size()) + " overlaps";
  c.witnesses = unresolved;
  rep.add(std::move(c));
  return rep;
}

// ---------------------------------------------------------------------------
// Realization.

struct RealizeOptions {
  VerifyOptions verify;
  std::size_t step_bound = 1000000;
  std::uint32_t max_dim = 5000;
};

namespace detail {

inline std::vector<Word> enumerate_basis(const Presentation& P) {
  std::vector<Word> out{Word{}};
  for (const auto& f : P.basis) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (long e = f.lo; e < f.hi; ++e) {
        Word v = w;
        v.insert(v.end(), static_cast<std::size_t>(e), f.gen);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline std::string basis_label(const Presentation& P, const Word& w) {
  std::vector<std::pair<std::string, long>> parts;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    parts.emplace_back(P.gens[w[i]], static_cast<long>(j - i));
    i = j;
  }
  return monomial_label(parts);
}

}  // namespace detail

inline HopfAlgebra realize_presentation(const Presentation& P, const RealizeOptions& opt = {}, Report* report = nullptr) {
  RewriteSystem rs(P, opt.step_bound);
  Report rep("realize");
  Report conf = check_confluence(rs);
  rep.merge(conf);
  if (!conf.ok()) throw Error(ErrorKind::IllPosed, "presentation is not confluent\n" + conf.to_text());
  for (std::size_t g = 0; g < P.gens.size(); ++g)
    if (!P.delta[g] || !P.eps[g])
      throw Error(ErrorKind::IllPosed, "generator '" + P.gens[g] + "' lacks coalgebra data");

  const std::vector<Word> basis = detail::enumerate_basis(P);
  if (P.basis.empty()) throw Error(ErrorKind::IncompleteInput, "presentation declares no basis");
  if (basis.size() > opt.max_dim) throw Error(ErrorKind::TooLarge, "declared basis exceeds " + std::to_string(opt.max_dim));
  const auto d = static_cast<std::uint32_t>(basis.size());
  std::map<Word, std::uint32_t> index;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (!rs.is_normal(basis[i]))
      throw Error(ErrorKind::IllPosed, "declared basis word " + P.word_string(basis[i]) + " is reducible");
    if (!index.emplace(basis[i], i).second)
      throw Error(ErrorKind::IllPosed, "declared basis word " + P.word_string(basis[i]) + " repeats");
  }
  ExactField f{P.conductor};
  auto to_basis = [&](const Lin& x) {
    Lin nf = rs.normal_form(x);
    std::vector<std::pair<std::uint32_t, CycNumber>> out;
    for (const auto& [w, c] : nf) {
      auto it = index.find(w);
      if (it == index.end()) throw Error(ErrorKind::EscapesBasis, "normal word " + P.word_string(w) + " is not a basis word");
      out.emplace_back(it->second, c);
    }
    return out;
  };

  // Right multiplication by generators, then full products letter by letter.
  const auto ng = P.gens.size();
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, CycNumber>>>> by_gen(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    by_gen[i].resize(ng);
    for (std::size_t g = 0; g < ng; ++g) {
      Word w = basis[i];
      w.push_back(static_cast<std::uint16_t>(g));
      by_gen[i][g] = to_basis(Lin{{w, CycNumber(1)}});
    }
  }
  auto times_word = [&](std::vector<std::pair<std::uint32_t, CycNumber>> x, const Word& w) {
    for (auto g : w) {
      Accumulator<ExactField> acc(f);
      for (const auto& [i, c] : x)
        for (const auto& [k, e] : by_gen[i][g]) acc.add(key1(k), c * e);
      Element y = acc.finish(1);
      x.clear();
      for (const auto& [k, c] : y.terms) x.emplace_back(static_cast<std::uint32_t>(k), c);
    }
    return x;
  };

  StructureBuilder<ExactField> b(d, f);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      for (const auto& [k, c] : times_word({{i, CycNumber(1)}}, basis[j])) b.add_mult(i, j, k, c);
  for (const auto& [k, c] : to_basis(Lin{{Word{}, CycNumber(1)}})) b.add_unit(k, c);

  HopfAlgebra H;
  H.name = P.name;
  H.conductor = P.conductor;
  for (const auto& w : basis) H.labels.push_back(detail::basis_label(P, w));
  {
    // Provisional algebra for products inside the tensor square.
    StructureBuilder<ExactField> bm = b;
    for (std::uint32_t i = 0; i < d; ++i) bm.set_counit(i, CycNumber(0));
    H.s = bm.finish();
  }
  auto ops = exact_ops(H);
  auto lin_to_element = [&](const Lin& x) {
    Element e = ops.zero();
    for (const auto& [k, c] : to_basis(x)) e = ops.add(e, ops.scale(ops.basis(k), c));
    return e;
  };
  std::vector<Element> gen_delta(ng), gen_s(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    Accumulator<ExactField> acc(f);
    for (const auto& [uv, c] : *P.delta[g]) {
      Element a = lin_to_element(Lin{{uv.first, CycNumber(1)}});
      Element bb = lin_to_element(Lin{{uv.second, CycNumber(1)}});
      for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : bb.terms)
          acc.add(key2(static_cast<std::uint32_t>(ka), static_cast<std::uint32_t>(kb)), c * ca * cb);
    }
    gen_delta[g] = acc.finish(2);
    if (P.antipode[g]) gen_s[g] = lin_to_element(*P.antipode[g]);
  }
  const bool have_s = std::all_of(P.antipode.begin(), P.antipode.end(), [](const auto& s) { return s.has_value(); });
  std::vector<Element> S_words(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    Element D = ops.unit_n(2);
    CycNumber e(1);
    Element Sw = ops.unit();
    for (auto g : basis[i]) {
      D = ops.mul(D, gen_delta[g]);
      e = e * *P.eps[g];
      if (have_s) Sw = ops.mul(gen_s[g], Sw);
    }
    for (const auto& [k, c] : D.terms) b.add_comult(i, leg(k, 0), leg(k, 1), c);
    b.set_counit(i, e);
    S_words[i] = Sw;
  }
  H.s = b.finish();
  // Antipode: anti-multiplicative extension, checked against the solved antipode.
  auto solved = solve_antipode(H.s, f);
  if (have_s) {
    std::vector<std::vector<Term<CycNumber>>> ext(d);
    for (std::uint32_t i = 0; i < d; ++i)
      for (const auto& [k, c] : S_words[i].terms) ext[i].push_back({static_cast<std::uint32_t>(k), c});
    bool same = ext == solved;
    rep.add("antipode_extension_matches_solver", same);
    if (!same) rep.note("warning: declared antipode disagrees with the solved antipode; the solved one is used");
  } else {
    rep.skip("antipode_extension_matches_solver", "no antipode declared");
  }
  H.s.antipode = std::move(solved);
  Report cert = certify(H, opt.verify);
  rep.merge(cert, "hopf");
  if (report) report->merge(rep);
  if (!cert.ok()) throw Error(ErrorKind::AxiomFailure, "realized algebra fails certification\n" + cert.to_text());
  return H;
}

}  // namespace hopfkit
