#include <gtest/gtest.h>

#include "galmod/error.hpp"
#include "galmod/local_field.hpp"
#include "generators.hpp"

using namespace galmod;
using galmod::testing::random_cyc;
using galmod::testing::uniform;

namespace {

PuiseuxElement random_puiseux(std::mt19937_64& rng, const TameModel& m, int terms = 3) {
  PuiseuxElement x(m);
  for (int i = 0; i < terms; ++i) x += PuiseuxElement(m, random_cyc(rng, m.N), uniform(rng, -6, 6));
  return x;
}

PuiseuxElement random_monomial(std::mt19937_64& rng, const TameModel& m) {
  CycNumber c(m.N, 0);
  while (c.is_zero()) c = random_cyc(rng, m.N);
  return PuiseuxElement(m, c, uniform(rng, -6, 6));
}

}  // namespace

TEST(Filtration, DifferentValuationExamples) {
  EXPECT_EQ(different_valuation(RamFiltration({3, 1, 1})), 2);
  EXPECT_EQ(different_valuation(RamFiltration({3, 3, 1})), 4);
  EXPECT_EQ(different_valuation(RamFiltration({5, 5, 1})), 8);
  for (long e = 1; e <= 27; e += 2) {
    EXPECT_EQ(different_valuation(RamFiltration({e})), e - 1);
    EXPECT_TRUE(is_weakly_ramified(RamFiltration({e})));
  }
}

TEST(Filtration, SqrtInverseDifferent) {
  EXPECT_EQ(sqrt_inverse_different_valuation(RamFiltration({3})), -1);
  EXPECT_EQ(sqrt_inverse_different_valuation(RamFiltration({3, 3})), -2);
  EXPECT_EQ(sqrt_inverse_different_valuation(RamFiltration({1, 1})), 0);
  try {
    sqrt_inverse_different_valuation(RamFiltration({2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parity);
  }
  for (long e = 1; e <= 27; e += 2)
    for (long w : {1L, 3L, 5L})
      if (e % w == 0) {
        RamFiltration f({e, w});
        EXPECT_EQ(sqrt_inverse_different_valuation(f), -(e + w - 2) / 2);
      }
}

TEST(Filtration, WeakRamification) {
  EXPECT_TRUE(is_weakly_ramified(RamFiltration({3, 3, 1})));
  EXPECT_FALSE(is_weakly_ramified(RamFiltration({3, 3, 3, 1})));
  EXPECT_TRUE(is_weakly_ramified(RamFiltration({1, 1})));
}

TEST(Filtration, AbelianJumpRule) {
  EXPECT_TRUE(validate_abelian_filtration(RamFiltration({3, 3, 1})));
  EXPECT_FALSE(validate_abelian_filtration(RamFiltration({9, 3, 1})));
  EXPECT_TRUE(validate_abelian_filtration(RamFiltration({15, 5, 5, 5, 1})));
  EXPECT_FALSE(validate_abelian_filtration(RamFiltration({15, 5, 5, 1})));
  EXPECT_FALSE(validate_abelian_filtration(RamFiltration({15, 5, 1})));
  EXPECT_FALSE(validate_abelian_filtration(RamFiltration({15, 5, 5, 5, 5, 5, 1})));
  EXPECT_TRUE(validate_abelian_filtration(RamFiltration({15, 5, 5, 5, 5, 5, 5, 1})));
  EXPECT_TRUE(validate_abelian_filtration(RamFiltration({1})));
}

TEST(Filtration, RejectsBrokenChains) {
  EXPECT_THROW(RamFiltration({9, 2}), Error);
  EXPECT_THROW(RamFiltration({3, 0}), Error);
  EXPECT_EQ(RamFiltration::parse("3,3").orders(), (std::vector<long>{3, 3}));
  EXPECT_THROW(RamFiltration::parse("3,a"), Error);
}

TEST(Puiseux, ModelPreconditions) {
  EXPECT_THROW(TameModel(3, 3, 3), Error);
  EXPECT_THROW(TameModel(3, 7, 5), Error);
  EXPECT_THROW(TameModel(3, 4, 3), Error);
  EXPECT_NO_THROW(TameModel(3, 7, 21 / 7 * 19));
}

TEST(Puiseux, ValuationExamples) {
  TameModel m(3, 7, 3);
  EXPECT_EQ(valuation(PuiseuxElement::pi_power(m, 3)), 3);
  EXPECT_EQ(valuation(PuiseuxElement::pi_power(m, 1)), 1);
  EXPECT_EQ(valuation(PuiseuxElement(m, CycNumber(3, Rational(49, 2)), -1)), 5);
  EXPECT_EQ(valuation(PuiseuxElement(m, CycNumber(3, Rational(1, 7)), 0)), -3);
  EXPECT_EQ(valuation(PuiseuxElement(m)), kInfiniteValuation);
}

TEST(Puiseux, ValuationIsMultiplicativeAndUltrametric) {
  std::mt19937_64 rng(4);
  TameModel m(3, 7, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_monomial(rng, m), y = random_monomial(rng, m);
    EXPECT_EQ(valuation(x * y), valuation(x) + valuation(y));
    auto a = random_puiseux(rng, m), b = random_puiseux(rng, m);
    if (!a.is_zero() && !b.is_zero()) EXPECT_GE(valuation(a * b), valuation(a) + valuation(b));
    EXPECT_GE(valuation(a + b), std::min(valuation(a), valuation(b)));
  }
}

TEST(Puiseux, RingAxioms) {
  std::mt19937_64 rng(8);
  TameModel m(5, 11, 5);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_puiseux(rng, m), b = random_puiseux(rng, m), c = random_puiseux(rng, m);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Puiseux, SigmaExamples) {
  TameModel m(3, 7, 3);
  auto pi = PuiseuxElement::pi_power(m, 3);
  EXPECT_EQ(galois_sigma(pi), pi);
  EXPECT_EQ(galois_sigma(PuiseuxElement::pi_power(m, 1)), PuiseuxElement(m, root_of_unity(3, 3, 1), 1));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_puiseux(rng, m);
    auto y = x;
    for (int i = 0; i < 3; ++i) y = galois_sigma(y);
    EXPECT_EQ(y, x);
  }
}

TEST(Puiseux, PhiExamplesAndCommutator) {
  TameModel m(3, 7, 3);
  std::mt19937_64 rng(6);
  auto rational = PuiseuxElement(m, CycNumber(3, Rational(2, 5)), 2);
  EXPECT_EQ(galois_phi(rational, 5), rational);
  auto x = PuiseuxElement(m, root_of_unity(3, 3, 1), 1);
  EXPECT_EQ(galois_phi(x, 7), x);
  TameModel m2(3, 2, 21);
  for (long q : {2L, 5L}) {
    TameModel mm = q == 2 ? m2 : TameModel(3, 5, 21);
    for (int trial = 0; trial < 20; ++trial) {
      auto y = random_puiseux(rng, mm);
      auto sigma = [](const PuiseuxElement& z) { return galois_sigma(z); };
      auto phi = [q](const PuiseuxElement& z) { return galois_phi(z, q); };
      auto phi_inv = [q](const PuiseuxElement& z) { return galois_phi(z, inverse_mod(q, 21)); };
      auto sigma_inv = [](const PuiseuxElement& z) { return galois_sigma(galois_sigma(z)); };
      // phi sigma phi^{-1} sigma^{-1} = sigma^{q-1}; maps compose right to left
      auto lhs = phi(sigma(phi_inv(sigma_inv(y))));
      auto rhs = y;
      for (long i = 0; i < mod(q - 1, 3); ++i) rhs = sigma(rhs);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Puiseux, AutomorphismsRespectArithmeticAndValuation) {
  std::mt19937_64 rng(12);
  TameModel m(3, 5, 21);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_puiseux(rng, m), b = random_puiseux(rng, m);
    EXPECT_EQ(galois_sigma(a + b), galois_sigma(a) + galois_sigma(b));
    EXPECT_EQ(galois_sigma(a * b), galois_sigma(a) * galois_sigma(b));
    EXPECT_EQ(galois_phi(a * b, 2), galois_phi(a, 2) * galois_phi(b, 2));
    EXPECT_EQ(galois_phi(a + b, 2), galois_phi(a, 2) + galois_phi(b, 2));
    EXPECT_EQ(valuation(galois_sigma(a)), valuation(a));
    EXPECT_EQ(valuation(galois_phi(a, 2)), valuation(a));
  }
}

TEST(Puiseux, MonomialInverse) {
  TameModel m(3, 7, 3);
  auto x = PuiseuxElement(m, root_of_unity(3, 3, 1).scaled(5), 2);
  EXPECT_EQ(x * *x.inverse(), x.one_like());
  EXPECT_FALSE(PuiseuxElement(m).inverse().has_value());
  EXPECT_THROW((x + x.one_like()).inverse(), Error);
}

TEST(Puiseux, BaseFieldMembership) {
  TameModel m(3, 7, 57);
  EXPECT_TRUE(lies_in_base(PuiseuxElement(m, root_of_unity(57, 3, 1), 3), 7));
  EXPECT_FALSE(lies_in_base(PuiseuxElement::pi_power(m, 1), 7));
  EXPECT_FALSE(lies_in_base(PuiseuxElement(m, root_of_unity(57, 19, 1), 0), 7));
  auto trace = PuiseuxElement(m, root_of_unity(57, 19, 1) + root_of_unity(57, 19, 7) + root_of_unity(57, 19, 49), 0);
  EXPECT_TRUE(lies_in_base(trace, 7));
}
