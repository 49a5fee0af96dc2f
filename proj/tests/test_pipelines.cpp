#include <gtest/gtest.h>

#include "hopfkit/pipelines.hpp"

using namespace hopfkit;

TEST(ScriptADual, IdentitiesAndRelationsHoldExactly) {
  Report r = verify_script_A_dual_identities({7, 3, 2, 0});
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_GE(r.checks().size(), 15u);
}

TEST(TaftPipeline, QuotientIsFactorizableWithUniqueRibbon) {
  auto T = build_taft_pipeline(3);
  auto& K = T.K();
  ASSERT_EQ(T.dd->D.dim(), 81u);
  ASSERT_EQ(K.dim(), 27u);
  EXPECT_EQ(T.qm.group_order, 3u);
  ASSERT_TRUE(T.qm.Rbar && T.Rbar().verified) << T.qm.report.to_text();

  auto fr = is_factorizable(K, T.Rbar(), Backend::Exact);
  EXPECT_TRUE(fr.factorizable);
  EXPECT_EQ(fr.rank, 27u);

  auto gl = find_group_likes(K);
  ASSERT_TRUE(gl.complete);
  std::vector<NamedElement> cands;
  for (std::size_t i = 0; i < gl.elements.size(); ++i) cands.push_back(to_named("l" + std::to_string(i), gl.elements[i]));
  auto cert = drinfeld_element(K, T.Rbar());
  kr_ribbon_search(K, T.Rbar(), cert, cands, gl.complete);
  ASSERT_EQ(cert.admissible.size(), 1u) << cert.report.to_text();
  EXPECT_TRUE(cert.unique);

  auto ops = exact_ops(K);
  Element g_inv2 = ops.pow(ops.antipode(T.named["g"]), 2);
  EXPECT_TRUE(ops.equal(to_element(cert.admissible[0]), g_inv2));
  EXPECT_TRUE(ops.equal(cert.ribbons[0], ops.mul(g_inv2, cert.u)));
}

TEST(TaftPipeline, RibbonTemplatesPredictTheSearchResult) {
  auto T = build_taft_pipeline(3);
  auto& K = T.K();
  auto gl = find_group_likes(K);
  ASSERT_TRUE(gl.complete);
  std::vector<NamedElement> cands;
  for (std::size_t i = 0; i < gl.elements.size(); ++i) cands.push_back(to_named("l" + std::to_string(i), gl.elements[i]));
  auto cert = drinfeld_element(K, T.Rbar());
  kr_ribbon_search(K, T.Rbar(), cert, cands, gl.complete);
  auto ts = ribbon_templates(K, T.Rbar(), cert, cands, gl.complete);
  ASSERT_EQ(ts.size(), 3u);
  // S^2 eigenvalues are cube roots of unity: 2r - 1 = 3.
  EXPECT_EQ(ts[1].status, Status::Pass) << ts[1].detail;
  EXPECT_EQ(ts[1].predicted_form, "g^-2 u");
  EXPECT_TRUE(ts[1].prediction_holds);
  // |G(K)| = 3 = 2m - 1.
  EXPECT_EQ(ts[0].status, Status::Pass) << ts[0].detail;
  EXPECT_EQ(ts[0].predicted_form, "g^-2 u");
  EXPECT_TRUE(ts[0].prediction_holds);
  for (const auto& t : ts) {
    if (t.status == Status::Pass) {
      EXPECT_TRUE(t.prediction_holds) << t.name;
    }
  }

  auto incomplete = ribbon_templates(K, T.Rbar(), cert, cands, false);
  for (const auto& t : incomplete) EXPECT_EQ(t.status, Status::Skipped);
}

TEST(TaftPipeline, CrossRelationInDouble) {
  auto T = build_taft_pipeline(3);
  auto r = verify_double_relations(T.dd->D, {{"1", T.in_double["x"], T.in_double["y"], T.in_double["chi"], T.in_double["g"]}});
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(GroupDouble, Metacyclic21IsFactorizableRibbonWithTrivialL) {
  auto dd = build_group_double(metacyclic_group(7, 3, 2), "kG(7,3)");
  ASSERT_EQ(dd->D.dim(), 441u);
  EXPECT_TRUE(dd->D.certified);
  RMatrix R = dd->R;
  auto fr = is_factorizable(dd->D, R, Backend::Exact);
  EXPECT_EQ(fr.rank, 441u);

  auto gl = find_group_likes(dd->D);
  std::vector<NamedElement> cands;
  for (std::size_t i = 0; i < gl.elements.size(); ++i) cands.push_back(to_named("l" + std::to_string(i), gl.elements[i]));
  auto cert = drinfeld_element(dd->D, R);
  kr_ribbon_search(dd->D, R, cert, cands, gl.complete);
  auto ops = exact_ops(dd->D);
  bool v_is_u = false;
  for (const auto& v : cert.ribbons) v_is_u = v_is_u || ops.equal(v, cert.u);
  EXPECT_TRUE(v_is_u) << cert.report.to_text();
}
