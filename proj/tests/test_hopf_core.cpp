#include <gtest/gtest.h>

#include "hopfkit/antipode.hpp"
#include "hopfkit/builders.hpp"
#include "hopfkit/dual.hpp"
#include "hopfkit/grouplikes.hpp"
#include "hopfkit/verify.hpp"

using namespace hopfkit;

namespace {

const Check& check(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  EXPECT_NE(c, nullptr) << name;
  return *c;
}

HopfAlgebra taft3() { return build_taft(3, CycNumber::root_of_unity(3, 1)); }

}  // namespace

TEST(Axioms, GroupAlgebraZ2PassesExactly) {
  auto H = group_algebra(cyclic_group(2));
  VerifyOptions opt;
  opt.mode = Mode::Exact;
  Report r = verify_hopf_axioms(H, opt);
  EXPECT_TRUE(r.ok()) << r.to_text();
  for (const auto& c : r.checks()) EXPECT_EQ(c.backend, "exact");
}

TEST(Axioms, ZeroAntipodeIsCaughtWithWitness) {
  auto H = group_algebra(cyclic_group(2));
  for (auto& row : H.s.antipode) row.clear();
  Report r = verify_hopf_axioms(H);
  const Check& c = check(r, "antipode");
  EXPECT_EQ(c.status, Status::Fail);
  bool names_generator = false;
  for (const auto& w : c.witnesses) names_generator |= w.find("b_1") != std::string::npos;
  EXPECT_TRUE(names_generator) << r.to_text();
}

TEST(Axioms, CorruptedProductBreaksAssociativity) {
  auto H = group_algebra(cyclic_group(3));
  H.s.mult[1][0].coeff = CycNumber(2);  // g * 1 = 2g
  EXPECT_EQ(check(verify_hopf_axioms(H), "associativity").status, Status::Fail);
}

TEST(Axioms, SampledAndModularAgreeOnTaft) {
  auto H = taft3();
  for (Mode m : {Mode::Exact, Mode::Modular, Mode::Sampled}) {
    VerifyOptions opt;
    opt.mode = m;
    opt.samples = 4;
    EXPECT_TRUE(verify_hopf_axioms(H, opt).ok()) << mode_name(m);
  }
}

TEST(Elements, UnitGroupLikeAndAntipode) {
  auto H = group_algebra(cyclic_group(3));
  auto ops = exact_ops(H);
  Element g = ops.basis(1);
  EXPECT_TRUE(ops.equal(ops.mul(ops.unit(), g), g));
  EXPECT_TRUE(ops.equal(ops.delta(g), ops.tensor(g, g)));
  EXPECT_TRUE(ops.equal(ops.antipode(g), ops.basis(2)));
  EXPECT_EQ(ops.counit(g), CycNumber(1));
  EXPECT_THROW(ops.mul(g, ops.tensor(g, g)), Error);
}

TEST(Elements, TensorProductIsComponentwise) {
  auto H = taft3();
  auto ops = exact_ops(H);
  Element x = ops.basis(H.index_of("x")), g = ops.basis(H.index_of("g"));
  Element a = ops.tensor(x, g), b = ops.tensor(g, x);
  // (x (x) g)(g (x) x) = xg (x) gx
  EXPECT_TRUE(ops.equal(ops.mul(a, b), ops.tensor(ops.mul(x, g), ops.mul(g, x))));
}

TEST(Dual, InvolutionOnStructureConstants) {
  std::vector<HopfAlgebra> hs;
  hs.push_back(group_algebra(metacyclic_group(7, 3, 2)));
  hs.push_back(taft3());
  hs.push_back(build_script_A({7, 3, 2, 0}));
  hs.push_back(build_script_A({7, 3, 2, 1}));
  for (const auto& H : hs) {
    auto DD = dual_hopf(dual_hopf(H));
    EXPECT_TRUE(structures_equal(DD.s, H.s)) << H.name;
    for (auto v : {DualVariant::Op, DualVariant::Cop}) {
      auto Dv = dual_hopf(H, v);
      EXPECT_TRUE(verify_hopf_axioms(Dv).ok()) << H.name << " " << dual_variant_name(v);
    }
  }
}

TEST(Dual, DualOfGroupAlgebraIsFunctionAlgebra) {
  auto G = metacyclic_group(7, 3, 2);
  auto a = dual_group_algebra(G);
  auto b = dual_hopf(group_algebra(G));
  EXPECT_TRUE(structures_equal(a.s, b.s));
}

TEST(Dual, TaftDualSatisfiesAxioms) {
  auto D = dual_hopf(taft3());
  EXPECT_TRUE(verify_hopf_axioms(D).ok());
  EXPECT_EQ(D.labels[0], "E(1)");
  // The character chi of Taft becomes a group-like of the dual.
  ASSERT_EQ(D.grouplikes.size(), 1u);
  EXPECT_TRUE(is_group_like(D, to_element(D.grouplikes[0])));
}

TEST(SolveAntipode, GroupAlgebraGivesInversePermutation) {
  auto G = metacyclic_group(7, 3, 2);
  auto H = group_algebra(G);
  auto S = solve_antipode(H.s, H.field());
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    ASSERT_EQ(S[g].size(), 1u);
    EXPECT_EQ(S[g][0].index, G.inv(g));
    EXPECT_TRUE(S[g][0].coeff.is_one());
  }
}

TEST(SolveAntipode, MatchesClosedFormsOfBuilders) {
  for (const auto& H : {taft3(), build_script_A({7, 3, 2, 0}), build_script_A({7, 3, 2, 2}),
                        build_taft(4, CycNumber::root_of_unity(4, 1))}) {
    auto S = solve_antipode(H.s, H.field());
    EXPECT_TRUE(S == H.s.antipode) << H.name;
  }
}

TEST(SolveAntipode, ModularBackendAgreesWithSpecializedExact) {
  auto H = taft3();
  with_specialization(H.conductor, 7, [&](const ModField& f) {
    auto ms = map_structure(H.s, f);
    auto S = solve_antipode(ms, f);
    EXPECT_TRUE(S == ms.antipode);
    return 0;
  });
}

TEST(SolveAntipode, InconsistentSystemThrows) {
  // Bialgebra k[x]/(x^2) with x primitive is Hopf; make x group-like instead: no antipode.
  StructureBuilder<ExactField> b(2, ExactField{1});
  b.add_mult(0, 0, 0, 1);
  b.add_mult(0, 1, 1, 1);
  b.add_mult(1, 0, 1, 1);
  b.add_unit(0, 1);
  b.add_comult(0, 0, 0, 1);
  b.add_comult(1, 1, 1, 1);
  b.set_counit(0, 1);
  b.set_counit(1, 1);
  auto s = b.finish();
  EXPECT_THROW(solve_antipode(s, ExactField{1}), Error);
}

TEST(Properties, AntipodeInvertibleAndAnticoalgebraOnBuilders) {
  std::vector<HopfAlgebra> hs{group_algebra(metacyclic_group(7, 3, 2)), dual_group_algebra(cyclic_group(4)), taft3(),
                              build_taft(5, CycNumber::root_of_unity(5, 2)), build_script_A({7, 3, 2, 0})};
  for (const auto& H : hs) {
    ASSERT_LE(H.dim(), 100u);
    auto ops = exact_ops(H);
    EXPECT_NO_THROW(inverse_antipode(H.s, H.field())) << H.name;
    for (std::uint32_t i = 0; i < H.dim(); ++i) {
      Element b = ops.basis(i);
      EXPECT_EQ(ops.counit(ops.antipode(b)), ops.counit(b)) << H.name << " " << i;
      Element lhs = ops.delta(ops.antipode(b));
      Element rhs = ops.antipode(ops.flip(ops.delta(b)));
      EXPECT_TRUE(ops.equal(lhs, rhs)) << H.name << " " << i;
    }
  }
}

TEST(GroupLikes, MembershipExamples) {
  auto H = taft3();
  auto ops = exact_ops(H);
  EXPECT_TRUE(is_group_like(H, ops.unit()));
  EXPECT_TRUE(is_central(H, ops.unit()));
  Element x = ops.basis(H.index_of("x"));
  EXPECT_FALSE(is_group_like(H, x));
  EXPECT_FALSE(is_central(H, x));
  Element g = ops.basis(H.index_of("g"));
  EXPECT_TRUE(is_group_like(H, g));
  EXPECT_FALSE(is_central(H, g));
}

TEST(GroupLikes, Closure) {
  auto H = taft3();
  auto trivial = group_like_closure(H, {{"1", {{0, CycNumber(1)}}}});
  EXPECT_EQ(trivial.order(), 1u);
  auto cyc = group_like_closure(H, {H.grouplikes[1]});
  EXPECT_EQ(cyc.order(), 3u);
  EXPECT_THROW(group_like_closure(H, {{"x", {{static_cast<std::uint32_t>(H.index_of("x")), CycNumber(1)}}}}), Error);
  auto G = metacyclic_group(7, 3, 2);
  auto kG = group_algebra(G);
  auto full = group_like_closure(kG, {kG.grouplikes[G.index_of("a^1 b^0")], kG.grouplikes[G.index_of("a^0 b^1")]});
  EXPECT_EQ(full.order(), 21u);
  // table is a group law: row of the unit is the identity permutation
  for (std::uint32_t i = 0; i < full.order(); ++i) EXPECT_EQ(full.table[0][i], i);
}

TEST(GroupLikes, SearchOnSmallExamples) {
  auto kZ3 = group_algebra(cyclic_group(3));
  auto r1 = find_group_likes(kZ3);
  EXPECT_EQ(r1.elements.size(), 3u);
  EXPECT_TRUE(r1.complete);

  auto fZ3 = dual_group_algebra(cyclic_group(3));
  auto r2 = find_group_likes(fZ3);
  EXPECT_EQ(r2.elements.size(), 3u);
  EXPECT_TRUE(r2.complete);
  for (const auto& e : r2.elements) EXPECT_TRUE(is_group_like(fZ3, e));

  auto T = taft3();
  auto r3 = find_group_likes(T);
  EXPECT_EQ(r3.elements.size(), 3u);
  EXPECT_TRUE(r3.complete);

  auto nonab = group_algebra(metacyclic_group(7, 3, 2));
  auto r4 = find_group_likes(nonab);
  EXPECT_EQ(r4.elements.size(), 21u);
  EXPECT_TRUE(r4.complete);
}

TEST(GroupLikes, SearchResultIsClosedUnderProductAndAntipode) {
  auto H = dual_hopf(build_script_A({7, 3, 2, 0}));
  auto r = find_group_likes(H);
  ASSERT_FALSE(r.elements.empty());
  auto ops = exact_ops(H);
  auto contains = [&](const Element& x) {
    for (const auto& e : r.elements)
      if (ops.equal(e, x)) return true;
    return false;
  };
  for (const auto& a : r.elements) {
    EXPECT_TRUE(contains(ops.antipode(a)));
    for (const auto& b : r.elements) EXPECT_TRUE(contains(ops.mul(a, b)));
  }
}
