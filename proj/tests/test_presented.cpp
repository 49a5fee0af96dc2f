#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hopfkit/presented.hpp"

using namespace hopfkit;

namespace {

std::string corpus(const std::string& file) {
  std::ifstream in(std::string(HOPFKIT_CORPUS_DIR) + "/" + file);
  if (!in) throw std::runtime_error("missing corpus file " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  if (pos == std::string::npos) throw std::runtime_error("pattern not found: " + from);
  return s.replace(pos, from.size(), to);
}

Word word(const Presentation& P, const std::string& letters) {
  Word w;
  for (char c : letters) {
    auto it = std::find(P.gens.begin(), P.gens.end(), std::string(1, c));
    w.push_back(static_cast<std::uint16_t>(it - P.gens.begin()));
  }
  return w;
}

Lin single(const Word& w, const CycNumber& c = CycNumber(1)) { return Lin{{w, c}}; }

const char* kGroupZ6 =
    "algebra Z6()\n"
    "conductor 6\n"
    "gens g\n"
    "relations:\n"
    "  g^6 = 1\n"
    "basis: g^[0..6)\n"
    "coalgebra:\n"
    "  delta g = g (x) g\n"
    "  eps g = 1\n"
    "antipode:\n"
    "  S g = g^5\n";

}  // namespace

TEST(PresentedParse, TaftCorpusFile) {
  auto P = parse_presentation(corpus("taft.halg"));
  EXPECT_EQ(P.gens, (std::vector<std::string>{"x", "g"}));
  EXPECT_EQ(P.conductor, 3);
  EXPECT_EQ(P.rules.size(), 3u);
  ASSERT_EQ(P.basis.size(), 2u);
  EXPECT_EQ(P.basis[0].hi, 3);
  for (std::size_t g = 0; g < P.gens.size(); ++g) {
    EXPECT_TRUE(P.delta[g].has_value());
    EXPECT_TRUE(P.eps[g].has_value());
    EXPECT_TRUE(P.antipode[g].has_value());
  }
}

TEST(PresentedParse, OverridesChangeParameters) {
  auto P = parse_presentation(corpus("taft.halg"), {{"n", 5}});
  EXPECT_EQ(P.conductor, 5);
  EXPECT_EQ(P.basis[1].hi, 5);
  EXPECT_THROW(parse_presentation(corpus("taft.halg"), {{"m", 5}}), Error);
}

TEST(PresentedParse, TruncatedRelationIsSyntaxError) {
  std::string text = replace_once(corpus("taft.halg"), "g*x = q*x*g", "g*x =");
  try {
    parse_presentation(text);
    FAIL() << "expected a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
  }
}

TEST(PresentedParse, UnknownGeneratorAndConductorMismatch) {
  std::string text = replace_once(corpus("taft.halg"), "g*x = q*x*g", "g*y = q*x*g");
  try {
    parse_presentation(text);
    FAIL() << "expected UnknownSymbol";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSymbol) << e.what();
  }
  text = replace_once(corpus("taft.halg"), "scalar q = z^k", "scalar q = z_4");
  try {
    parse_presentation(text);
    FAIL() << "expected ConductorMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConductorMismatch) << e.what();
  }
}

TEST(PresentedRewrite, TaftNormalForms) {
  auto P = parse_presentation(corpus("taft.halg"));
  RewriteSystem rs(P);
  const CycNumber q = CycNumber::root_of_unity(3, 1);

  EXPECT_EQ(rs.normal_form(single(word(P, "gx"))), single(word(P, "xg"), q));
  EXPECT_TRUE(rs.normal_form(single(word(P, "xxx"))).empty());
  EXPECT_EQ(rs.normal_form(single(word(P, "ggg"))), single(Word{}));
  // g^2 x = q^2 x g^2
  EXPECT_EQ(rs.normal_form(single(word(P, "ggx"))), single(word(P, "xgg"), q * q));

  Lin normal = single(word(P, "xxg"), CycNumber(7));
  EXPECT_TRUE(rs.is_normal(word(P, "xxg")));
  EXPECT_EQ(rs.normal_form(normal), normal);
}

TEST(PresentedRewrite, StepBoundIsEnforced) {
  auto P = parse_presentation(corpus("taft.halg"));
  RewriteSystem rs(P, 3);
  try {
    rs.normal_form(single(word(P, "gxgxgx")));
    FAIL() << "expected the step bound to trip";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepLimit);
  }
}

TEST(PresentedConfluence, TaftRulesResolveAllOverlaps) {
  auto P = parse_presentation(corpus("taft.halg"));
  Report r = check_confluence(RewriteSystem(P));
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(PresentedConfluence, SquaredRootInCommutationRuleStaysConsistent) {
  // q^2 is again a primitive cube root, so g^3 x still reduces to x both ways and
  // the presentation is Taft at q^2.
  std::string text = replace_once(corpus("taft.halg"), "g*x = q*x*g", "g*x = q^2*x*g");
  auto P = parse_presentation(text);
  Report r = check_confluence(RewriteSystem(P));
  EXPECT_TRUE(r.ok()) << r.to_text();
  auto H = realize_presentation(P);
  auto T = build_taft(3, CycNumber::root_of_unity(3, 2));
  EXPECT_TRUE(structures_equal(H.s, T.s));
}

TEST(PresentedConfluence, NonRootCommutationScalarLeavesOverlapUnresolved) {
  // g^3 x reduces to x through g^3 = 1 and to 8 x through three commutations.
  std::string text = replace_once(corpus("taft.halg"), "g*x = q*x*g", "g*x = 2*x*g");
  auto P = parse_presentation(text);
  Report r = check_confluence(RewriteSystem(P));
  EXPECT_FALSE(r.ok());
  const Check* c = r.find("overlaps_resolve");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  ASSERT_FALSE(c->witnesses.empty());
  EXPECT_THROW(realize_presentation(P), Error);
}

TEST(PresentedConfluence, MutualInverseRulesResolve) {
  const char* text =
      "algebra Inv()\n"
      "conductor 1\n"
      "gens x, y\n"
      "relations:\n"
      "  x*y = 1\n"
      "  y*x = 1\n";
  Report r = check_confluence(RewriteSystem(parse_presentation(text)));
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(PresentedConfluence, IncreasingRuleIsRejected) {
  std::string text = replace_once(corpus("taft.halg"), "g*x = q*x*g", "x*g = q^(-1)*g*x");
  auto P = parse_presentation(text);
  Report r = check_confluence(RewriteSystem(P));
  const Check* c = r.find("rules_decrease_deglex");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
}

TEST(PresentedRealize, SquareRelationGivesGroupAlgebraOfOrderTwo) {
  const char* text =
      "algebra Z2()\n"
      "conductor 2\n"
      "gens g\n"
      "relations:\n"
      "  g^2 = 1\n"
      "basis: g^[0..2)\n"
      "coalgebra:\n"
      "  delta g = g (x) g\n"
      "  eps g = 1\n"
      "antipode:\n"
      "  S g = g\n";
  auto H = realize_presentation(parse_presentation(text));
  auto K = group_algebra(cyclic_group(2, "g"));
  EXPECT_TRUE(structures_equal(H.s, K.s));
}

TEST(PresentedRealize, CyclicGroupMatchesGroupAlgebra) {
  auto H = realize_presentation(parse_presentation(kGroupZ6));
  auto K = group_algebra(cyclic_group(6, "g"));
  EXPECT_EQ(H.dim(), 6u);
  EXPECT_TRUE(structures_equal(H.s, K.s));
  EXPECT_EQ(H.labels, (std::vector<std::string>{"1", "g", "g^2", "g^3", "g^4", "g^5"}));
}

TEST(PresentedRealize, TaftIsIdenticalToDirectBuild) {
  for (long n : {2, 3, 5}) {
    auto H = realize_presentation(parse_presentation(corpus("taft.halg"), {{"n", n}}));
    auto T = build_taft(n, CycNumber::root_of_unity(n, 1));
    EXPECT_EQ(H.dim(), static_cast<std::uint32_t>(n * n));
    EXPECT_TRUE(structures_equal(H.s, T.s)) << "n=" << n;
    EXPECT_EQ(H.labels, T.labels) << "n=" << n;
    EXPECT_EQ(H.conductor, T.conductor);
  }
}

TEST(PresentedRealize, TaftWithOtherRootOfUnity) {
  auto H = realize_presentation(parse_presentation(corpus("taft.halg"), {{"n", 5}, {"k", 2}}));
  auto T = build_taft(5, CycNumber::root_of_unity(5, 2));
  EXPECT_TRUE(structures_equal(H.s, T.s));
}

TEST(PresentedRealize, RankOneLiftingWithNonzeroMu) {
  Report rep;
  auto H = realize_presentation(parse_presentation(corpus("rank1_u.halg")), {}, &rep);
  EXPECT_EQ(H.dim(), 18u);
  EXPECT_TRUE(rep.ok()) << rep.to_text();
  // x^3 = 1 - g^3 is visible in the structure: x * x^2 is not zero.
  auto ops = exact_ops(H);
  Element x = ops.basis(H.index_of("x"));
  Element x3 = ops.pow(x, 3);
  Element expect = ops.sub(ops.unit(), ops.basis(H.index_of("g^3")));
  EXPECT_TRUE(ops.equal(x3, expect));
}

TEST(PresentedRealize, RankTwoDoubleAtMinusOne) {
  RealizeOptions opt;
  opt.verify.mode = Mode::Modular;
  Report rep;
  auto H = realize_presentation(parse_presentation(corpus("drin_b_minus1.halg")), opt, &rep);
  EXPECT_EQ(H.dim(), 256u);
  EXPECT_TRUE(rep.ok()) << rep.to_text();
}

TEST(PresentedRealize, UniformAnticommutationIsNotAHopfAlgebra) {
  // x1 y2 + y2 x1 = 0 with the same coproducts: the algebra stays confluent once the
  // derived rules are adjusted, but Delta fails to be multiplicative.
  std::string text = corpus("drin_b_minus1.halg");
  text = replace_once(text, "  y2*x1 = x1*y2\n", "  y2*x1 = -x1*y2\n");
  text = replace_once(text, "  y2*u = -u*y2 - 2*x1*k2\n", "  y2*u = u*y2 - 2*x1\n");
  text = replace_once(text, "  v*x1 = -x1*v - 2*y2*k1\n", "  v*x1 = x1*v + 2*y2\n");
  text = replace_once(text, "  v*u = -u*v + 2 - 2*k1*k2\n", "  v*u = u*v - 4*x1*y1 - 4*x2*y2 + 4 - 2*k1 - 2*k2\n");
  auto P = parse_presentation(text);
  ASSERT_TRUE(check_confluence(RewriteSystem(P)).ok());
  RealizeOptions opt;
  opt.verify.mode = Mode::Modular;
  try {
    realize_presentation(P, opt);
    FAIL() << "expected certification to fail";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomFailure);
    EXPECT_NE(std::string(e.what()).find("comult_multiplicative"), std::string::npos);
  }
}

TEST(PresentedProperty, NormalFormsAreStrategyIndependent) {
  auto P = parse_presentation(corpus("taft.halg"), {{"n", 4}});
  RewriteSystem rs(P);
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> len(0, 9), gen(0, 1), coef(-5, 5), nterms(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Lin expr;
    for (int t = nterms(rng); t > 0; --t) {
      Word w;
      for (int l = len(rng); l > 0; --l) w.push_back(static_cast<std::uint16_t>(gen(rng)));
      int c = coef(rng);
      if (c != 0) detail::lin_add(expr, w, CycNumber(c) * CycNumber::root_of_unity(4, t));
    }
    Lin a = rs.normal_form(expr, Strategy::Leftmost);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Lin b = rs.normal_form(expr, Strategy::Random, seed + 17 * trial);
      ASSERT_EQ(a, b) << "trial " << trial << ": " << P.lin_string(expr);
    }
    for (const auto& [w, c] : a) EXPECT_TRUE(rs.is_normal(w));
  }
}
