#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hopfkit/datum.hpp"

using namespace hopfkit;

namespace {

void expect_smith_invariants(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M);
  EXPECT_EQ(mat_mul(mat_mul(s.U, M), s.V), s.D);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
  for (std::size_t i = 0; i < s.D.size(); ++i)
    for (std::size_t j = 0; j < s.D[i].size(); ++j)
      if (i != j) {
        EXPECT_EQ(s.D[i][j], 0);
      }
  for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
    EXPECT_GE(s.diagonal[k], 0);
    if (s.diagonal[k] != 0) {
      EXPECT_EQ(s.diagonal[k + 1] % s.diagonal[k], 0);
    } else {
      EXPECT_EQ(s.diagonal[k + 1], 0);
    }
  }
}

ZModSystem random_system(std::mt19937_64& rng) {
  while (true) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<long> n(m);
    long prod = 1;
    for (auto& x : n) x = 1 + static_cast<long>(rng() % 16), prod *= x;
    if (prod > 10000) continue;
    LongMatrix M(m, std::vector<long>(m));
    // Entries in multiples of n_j / gcd(n_i, n_j) keep x -> xM well defined.
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        long step = n[j] / std::gcd(n[i], n[j]);
        M[i][j] = step * (static_cast<long>(rng() % 41) - 20);
      }
    return ZModSystem(M, n);
  }
}

}  // namespace

TEST(Smith, DiagonalExample) {
  SmithForm s = smith_normal_form(to_int_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.diagonal, (std::vector<mpz_class>{1, 6}));
}

TEST(Smith, RankTwoPairingMatrix) {
  SmithForm s = smith_normal_form(to_int_matrix({{-3, 1}, {2, -3}}));
  EXPECT_EQ(s.diagonal, (std::vector<mpz_class>{1, 7}));
  EXPECT_EQ(determinant(to_int_matrix({{-3, 1}, {2, -3}})), 7);
  EXPECT_EQ(determinant(to_int_matrix({{-6, 3}, {3, -6}})), 27);
}

TEST(Smith, ZeroMatrix) {
  SmithForm s = smith_normal_form(to_int_matrix({{0, 0}, {0, 0}}));
  EXPECT_EQ(s.diagonal, (std::vector<mpz_class>{0, 0}));
  EXPECT_EQ(s.U, identity_matrix(2));
  EXPECT_EQ(s.V, identity_matrix(2));
}

TEST(Smith, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    LongMatrix M(r, std::vector<long>(c));
    for (auto& row : M)
      for (auto& v : row) v = static_cast<long>(rng() % 31) - 15;
    expect_smith_invariants(to_int_matrix(M));
  }
}

TEST(Smith, DeterminantAgreesWithDiagonal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    LongMatrix M(n, std::vector<long>(n));
    for (auto& row : M)
      for (auto& v : row) v = static_cast<long>(rng() % 21) - 10;
    SmithForm s = smith_normal_form(to_int_matrix(M));
    mpz_class prod = 1;
    for (const auto& d : s.diagonal) prod *= d;
    EXPECT_EQ(abs(determinant(to_int_matrix(M))), prod);
  }
}

TEST(UniqueSolution, SpecExamples) {
  auto a = unique_solution_check(ZModSystem({{2}}, {3}));
  EXPECT_TRUE(a.unique);
  EXPECT_EQ(a.count, 1);

  auto b = unique_solution_check(ZModSystem({{2, 0}, {0, 2}}, {6, 6}));
  EXPECT_FALSE(b.unique);
  EXPECT_EQ(b.count, 4);

  auto c = unique_solution_check(ZModSystem({{1, 1}, {1, 1}}, {2, 2}));
  EXPECT_FALSE(c.unique);
  EXPECT_EQ(c.count, 2);
  EXPECT_EQ(c.witness, (std::vector<long>{1, 1}));
}

TEST(UniqueSolution, IllDefinedRowIsRejected) {
  // x in Z_2 cannot map to 1 mod 3.
  EXPECT_THROW((void)ZModSystem({{1, 1}, {0, 1}}, {2, 3}), Error);
  EXPECT_NO_THROW((void)ZModSystem({{1, 0}, {0, 1}}, {2, 3}));
}

TEST(UniqueSolution, EliminationAgreesWithBruteForceOnRandomSystems) {
  std::mt19937_64 rng(20240611);
  int disagreements = 0, unique = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ZModSystem S = random_system(rng);
    const mpz_class local = kernel_size_local(S);
    const mpz_class brute = kernel_size_brute(S).first;
    const mpz_class lattice = kernel_size_lattice(S);
    if (local != brute || lattice != brute) ++disagreements;
    if (brute == 1) ++unique;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(unique, 50);  // both outcomes are exercised
  EXPECT_LT(unique, 950);
}

TEST(CartanDatum, TaftRankOne) {
  Report r = check_cartan_datum(taft_datum(3));
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(root_orders(taft_datum(3)), (std::vector<long>{3}));
}

TEST(CartanDatum, A2BraidingCompatible) {
  for (long n : {2, 5, 9}) {
    auto D = a2_datum(n);
    auto q = braiding_exponents(D.group_orders, D.g, D.chi);
    const long E = 2 * n;
    EXPECT_EQ(mod_floor(q[0][1] + q[1][0], E), mod_floor(-q[0][0], E));  // a_12 = -1
    EXPECT_EQ(mod_floor(q[0][1] + q[1][0], E), mod_floor(-q[1][1], E));  // a_21 = -1
    const Check* c = check_cartan_datum(D).find("braiding_compatible");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Pass);
  }
}

TEST(CartanDatum, PerturbedCharacterFailsWithWitness) {
  auto D = a2_datum(5);
  D.chi[0][1] += 1;
  Report r = check_cartan_datum(D);
  const Check* c = r.find("braiding_compatible");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_FALSE(c->witnesses.empty());
}

TEST(DoubleQuotientHypotheses, TaftDatum) {
  Report r = double_quotient_hypotheses(taft_datum(3));
  EXPECT_TRUE(r.ok()) << r.to_text();
  auto chibar = solve_chibar({3}, {{1}}, {{1}});
  ASSERT_TRUE(chibar);
  EXPECT_EQ(*chibar, (LongMatrix{{1}}));
}

TEST(DoubleQuotientHypotheses, A2ChibarSolvedMod2n) {
  for (long n : {2, 4, 5, 9}) {
    auto D = a2_datum(n);
    auto chibar = solve_chibar(D.group_orders, D.g, D.chi);
    ASSERT_TRUE(chibar) << n;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        EXPECT_EQ(pairing_exponent(D.group_orders, (*chibar)[i], D.g[j]), pairing_exponent(D.group_orders, D.chi[j], D.g[i]));
  }
}

TEST(DoubleQuotientHypotheses, EvenOrderAgainstDetTwoFails) {
  CartanDatum D{1, {{2}}, {4}, {{1}}, {{1}}};
  Report r = double_quotient_hypotheses(D);
  const Check* c = r.find("gcd(ord(chi_i g_i), det A) = 1");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
}

TEST(ReducedConditions, KAlphaFiveHolds) {
  auto D = k_alpha_datum(5);
  Report r = reduced_datum_conditions(D);
  EXPECT_TRUE(r.ok()) << r.to_text();
  const Check* c = r.find("unique_solution");
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->backend.find("brute-force"), std::string::npos);
}

TEST(ReducedConditions, KAlphaSevenFailsAndBruteForceAgrees) {
  auto D = k_alpha_datum(7);
  Report r = reduced_datum_conditions(D);
  EXPECT_FALSE(r.ok());
  PairingSystem ps = reduced_pairing_system(D);
  auto [count, witness] = kernel_size_brute(ZModSystem(ps.M, ps.n));
  EXPECT_EQ(count, 3);
  EXPECT_EQ(r.find("characters_generate_dual")->status, Status::Fail);
}

TEST(ReducedConditions, TrivialPairingIsNotUnique) {
  // chi(g) = -1 on Z_4, so chi(g) chi(g) = 1.
  ReducedDatum D{1, {4}, {{1}}, {{1}}, {{2}}};
  Report r = reduced_datum_conditions(D);
  const Check* c = r.find("unique_solution");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
}

TEST(ReducedConditions, TaftDoubleDatumIsUnique) {
  ReducedDatum D{1, {3}, {{1}}, {{1}}, {{1}}};
  PairingSystem ps = reduced_pairing_system(D);
  EXPECT_EQ(ps.M, (LongMatrix{{2}}));
  EXPECT_EQ(ps.n, (std::vector<long>{3}));
  EXPECT_TRUE(reduced_datum_conditions(D).ok());
}

TEST(DeterminantConditions, HOmegaSweepMatchesGcdWith21) {
  for (long n = 2; n <= 100; ++n) {
    bool ok = determinant_conditions(h_omega_datum(n), 2 * n).ok();
    EXPECT_EQ(ok, std::gcd(n, 21L) == 1) << "n=" << n;
  }
}

TEST(DeterminantConditions, HOmegaMatrixAndDeterminants) {
  auto D = h_omega_datum(5);
  EXPECT_EQ(standard_pairing_matrix(D, 10), (LongMatrix{{-3, 1}, {2, -3}}));
  Report r = determinant_conditions(D, 10);
  EXPECT_TRUE(r.ok()) << r.to_text();
  Report r7 = determinant_conditions(h_omega_datum(7), 14);
  EXPECT_EQ(r7.find("gcd(det M, n) = 1")->status, Status::Fail);
}

TEST(DeterminantConditions, ReducedFMatchesClosedForm) {
  // With 7 n0 = 1 mod 2n: f_1 = g_1^{5 n0} g_2^{-3 n0}, f_2 = g_1^{3 n0} g_2^{8 n0}.
  for (long n : {2, 4, 5, 8, 10, 11}) {
    const long N = 2 * n;
    long n0 = 1;
    while ((7 * n0) % N != 1) ++n0;
    auto D = h_omega_datum(n);
    ASSERT_EQ(D.f.size(), 2u) << n;
    EXPECT_EQ(D.f[0], (std::vector<long>{mod_floor(5 * n0, N), mod_floor(-3 * n0, N)}));
    EXPECT_EQ(D.f[1], (std::vector<long>{mod_floor(3 * n0, N), mod_floor(8 * n0, N)}));
  }
  EXPECT_TRUE(h_omega_datum(7).f.empty());
}

TEST(DeterminantConditions, IdentityPairingPassesIffOdd) {
  for (long n : {3, 4, 5, 6, 9}) {
    ReducedDatum D{2, {n, n}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    EXPECT_EQ(determinant_conditions(D, n).ok(), n % 2 == 1) << n;
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(matrix_connected({{2, 1}, {1, 2}}));
  EXPECT_FALSE(matrix_connected({{2, 0}, {0, 2}}));
  EXPECT_TRUE(matrix_connected({{-3, 1}, {2, -3}}));
  EXPECT_FALSE(matrix_connected({{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}));
}
