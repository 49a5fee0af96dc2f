#include <gtest/gtest.h>

#include <random>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/modular.hpp"

using namespace hopfkit;

namespace {

CycNumber random_cyc(std::int64_t N, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(euler_phi(N));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return CycNumber::from_coeffs(N, c);
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST(Cyclotomic, SmallExamples) {
  auto z4 = CycNumber::root_of_unity(4, 1);
  EXPECT_EQ(z4 * z4, CycNumber(-1));
  auto z3 = CycNumber::root_of_unity(3, 1);
  EXPECT_EQ((CycNumber(1) + z3).inverse(), -z3);
  EXPECT_EQ(z3 + z3 * z3, CycNumber(-1));
}

TEST(Cyclotomic, PolynomialsByDivisionOracle) {
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (std::vector<Integer>{1, 0, 1}));
  // Phi_21 * Phi_1 * Phi_3 * Phi_7 must equal x^21 - 1.
  auto p = cyclotomic_poly(21);
  ASSERT_EQ(p.size(), 13u);
  auto prod = poly_mul(poly_mul(poly_mul(p, cyclotomic_poly(1)), cyclotomic_poly(3)), cyclotomic_poly(7));
  std::vector<Integer> target(22, 0);
  target[0] = -1;
  target[21] = 1;
  EXPECT_EQ(prod, target);
}

TEST(Cyclotomic, RootIsZeroOfItsPolynomial) {
  for (std::int64_t N = 1; N <= 128; ++N) {
    auto z = CycNumber::root_of_unity(N, 1);
    auto p = cyclotomic_poly(N);
    CycNumber acc = CycNumber::zero(N);
    CycNumber power = CycNumber::one(N);
    for (const auto& c : p) {
      acc += power * CycNumber(Rational(c), N);
      power *= z;
    }
    EXPECT_TRUE(acc.is_zero()) << "N=" << N;
  }
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (std::int64_t N : {1, 3, 4, 12, 21}) {
    for (int t = 0; t < 25; ++t) {
      auto a = random_cyc(N, rng), b = random_cyc(N, rng), c = random_cyc(N, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycNumber::one(N));
      }
      if (!b.is_zero()) {
        EXPECT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(Cyclotomic, EmbeddingIsAHomomorphism) {
  EXPECT_EQ(CycNumber::root_of_unity(3, 1).embed(6), CycNumber::root_of_unity(6, 2));
  EXPECT_EQ(CycNumber(Rational(5, 2)).embed(12), CycNumber(Rational(5, 2)));
  auto z3 = CycNumber::root_of_unity(3, 1);
  auto lhs = z3.embed(6).embed(12), rhs = z3.embed(12);
  EXPECT_EQ(lhs.terms(), rhs.terms());
  EXPECT_THROW(z3.embed(4), Error);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto a = random_cyc(4, rng), b = random_cyc(4, rng);
    EXPECT_EQ((a * b).embed(12), a.embed(12) * b.embed(12));
    EXPECT_EQ((a + b).embed(12), a.embed(12) + b.embed(12));
    if (a != b) {
      EXPECT_NE(a.embed(12), b.embed(12));
    }
  }
}

TEST(Cyclotomic, MixedConductorsUnify) {
  auto z3 = CycNumber::root_of_unity(3, 1);
  auto z4 = CycNumber::root_of_unity(4, 1);
  auto p = z3 * z4;
  EXPECT_EQ(p.conductor(), 12);
  EXPECT_EQ(p, CycNumber::root_of_unity(12, 7));
  EXPECT_THROW(CycNumber::root_of_unity(2000003, 1), Error);
}

TEST(Cyclotomic, DivisionByZeroThrows) {
  EXPECT_THROW(CycNumber::zero(5).inverse(), Error);
}

TEST(Cyclotomic, LiteralRoundTrip) {
  auto x = parse_scalar("-1/2*z^5+3", 12);
  EXPECT_EQ(parse_scalar(x.to_string(), 12), x);
  EXPECT_EQ(parse_scalar("z^3", 3), CycNumber(1));
  EXPECT_EQ(parse_scalar("1*z^1+1*z^2", 3), CycNumber(-1));
  EXPECT_EQ(parse_scalar("z_3^1", 6), CycNumber::root_of_unity(6, 2));
  EXPECT_THROW(parse_scalar("z_4", 6), Error);
  EXPECT_THROW(parse_scalar("1+", 3), Error);
  EXPECT_THROW(parse_scalar("", 3), Error);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = random_cyc(21, rng);
    auto s = a.to_string();
    EXPECT_EQ(parse_scalar(s, 21), a);
    EXPECT_EQ(parse_scalar(s, 21).to_string(), s);
  }
}

TEST(Specialization, PrimeAndRootInvariants) {
  std::mt19937_64 rng(99);
  for (std::int64_t N : {1, 2, 3, 12, 21}) {
    auto s = choose_specialization(N, rng);
    EXPECT_EQ((s.ell - 1) % N, 0u);
    EXPECT_TRUE(is_prime_u64(s.ell));
    EXPECT_EQ(powmod(s.image, N, s.ell), 1u);
    for (auto p : prime_factors(N)) EXPECT_NE(powmod(s.image, N / p, s.ell), 1u);
    EXPECT_EQ(specialize(CycNumber::one(N), s), 1u);
    EXPECT_EQ(powmod(specialize(CycNumber::root_of_unity(N, 1), s), N, s.ell), 1u);
  }
}

TEST(Specialization, IsMultiplicativeAndCompatibleWithEmbedding) {
  std::mt19937_64 rng(5);
  auto s = choose_specialization(12, rng);
  ModField f{s};
  for (int t = 0; t < 100; ++t) {
    auto a = random_cyc(12, rng), b = random_cyc(12, rng);
    EXPECT_EQ(specialize(a * b, s), f.mul(specialize(a, s), specialize(b, s)));
    EXPECT_EQ(specialize(a + b, s), f.add(specialize(a, s), specialize(b, s)));
  }
  auto c = random_cyc(4, rng);
  EXPECT_EQ(specialize(c, s), specialize(c.embed(12), s));
}

TEST(Specialization, BadDenominator) {
  std::mt19937_64 rng(1);
  auto s = choose_specialization(3, rng);
  CycNumber bad(Rational(Integer(1), Integer(s.ell)));
  EXPECT_THROW(specialize(bad, s), Error);
}
