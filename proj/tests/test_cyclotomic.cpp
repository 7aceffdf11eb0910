#include <gtest/gtest.h>

#include "galmod/cyclotomic.hpp"
#include "galmod/error.hpp"
#include "generators.hpp"

using namespace galmod;
using galmod::testing::random_cyc;

TEST(Cyclotomic, PolynomialsMatchKnownValues) {
  EXPECT_EQ(CyclotomicField::get(3)->polynomial(), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(CyclotomicField::get(9)->polynomial(), (std::vector<Integer>{1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(CyclotomicField::get(15)->polynomial(), (std::vector<Integer>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
  EXPECT_EQ(CyclotomicField::get(105)->degree(), 48);
  // 105 is the first index with a coefficient outside {-1,0,1}
  EXPECT_EQ(CyclotomicField::get(105)->polynomial()[7], -2);
}

TEST(Cyclotomic, RootOfUnityExamples) {
  EXPECT_EQ(root_of_unity(3, 3, 0), CycNumber(3, 1));
  auto z = root_of_unity(3, 3, 1);
  EXPECT_TRUE((z * z + z + CycNumber(3, 1)).is_zero());
  EXPECT_EQ(root_of_unity(9, 3, 1), CycNumber::zeta_power(9, 3));
  try {
    root_of_unity(9, 5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Conductor);
  }
}

TEST(Cyclotomic, RootOfUnityHasExactOrder) {
  for (long N : {3, 5, 9, 15, 21, 27, 45}) {
    for (long n = 1; n <= N; ++n) {
      if (N % n != 0) continue;
      auto z = root_of_unity(N, n, 1);
      auto one = CycNumber(N, 1);
      auto acc = z;
      for (long k = 1; k < n; ++k) {
        EXPECT_NE(acc, one) << N << " " << n << " " << k;
        acc *= z;
      }
      EXPECT_EQ(acc, one);
    }
  }
}

TEST(Cyclotomic, GaloisExamples) {
  std::mt19937_64 rng(1);
  auto x = random_cyc(rng, 9);
  EXPECT_EQ(galois_apply(x, 1), x);
  auto z3 = root_of_unity(3, 3, 1);
  EXPECT_EQ(galois_apply(z3, 2), -CycNumber(3, 1) - z3);
  try {
    galois_apply(x, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAutomorphism);
  }
}

TEST(Cyclotomic, GaloisComposesAndIsFieldAutomorphism) {
  std::mt19937_64 rng(7);
  for (long N : {3, 7, 9, 15, 21}) {
    auto units = CyclotomicField::get(N)->units();
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_cyc(rng, N), y = random_cyc(rng, N);
      long k = units[rng() % units.size()], k2 = units[rng() % units.size()];
      EXPECT_EQ(galois_apply(galois_apply(x, k), k2), galois_apply(x, k * k2 % N));
      EXPECT_EQ(galois_apply(x + y, k), galois_apply(x, k) + galois_apply(y, k));
      EXPECT_EQ(galois_apply(x * y, k), galois_apply(x, k) * galois_apply(y, k));
      Rational r(trial - 7, 3);
      EXPECT_EQ(galois_apply(CycNumber(N, r), k), CycNumber(N, r));
    }
  }
}

TEST(Cyclotomic, DiscreteLogExamples) {
  EXPECT_EQ(discrete_log_in_mu(CycNumber(7, 1), 7), 0);
  EXPECT_EQ(discrete_log_in_mu(root_of_unity(7, 7, 3), 7), 3);
  EXPECT_EQ(discrete_log_in_mu(root_of_unity(9, 9, 6), 9), 6);
  try {
    discrete_log_in_mu(CycNumber(9, 2), 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotARoot);
  }
  EXPECT_THROW(discrete_log_in_mu(root_of_unity(9, 9, 1), 3), Error);
}

TEST(Cyclotomic, DiscreteLogInvertsPowers) {
  for (long N : {9, 15, 21, 27}) {
    for (long n = 1; n <= N; ++n) {
      if (N % n != 0) continue;
      for (long j = 0; j < n; ++j) EXPECT_EQ(discrete_log_in_mu(root_of_unity(N, n, j), n), j);
    }
  }
}

TEST(Cyclotomic, RingAxiomsAndInverse) {
  std::mt19937_64 rng(3);
  for (long N : {1, 3, 5, 9, 15}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_cyc(rng, N), b = random_cyc(rng, N), c = random_cyc(rng, N);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        auto inv = a.inverse();
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(a * *inv, a.one_like());
      } else {
        EXPECT_FALSE(a.inverse().has_value());
      }
    }
  }
}

TEST(Cyclotomic, NormMatchesProductOfConjugates) {
  auto z = root_of_unity(7, 7, 1);
  auto one = CycNumber(7, 1);
  // N(1 - zeta_p) = p
  EXPECT_EQ((one - z).norm(), 7);
  EXPECT_EQ(CycNumber(9, Rational(2)).norm(), 64);
}

TEST(Cyclotomic, RationalsPromoteAcrossConductors) {
  auto z = root_of_unity(9, 9, 1);
  auto half = CycNumber(1, Rational(1, 2));
  EXPECT_EQ((z * half).conductor(), 9);
  EXPECT_EQ(z * half, z.scaled(Rational(1, 2)));
  EXPECT_EQ(CycNumber() + z, z);
  EXPECT_THROW(z + root_of_unity(5, 5, 1), Error);
}

TEST(Cyclotomic, TimesRootOfUnity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_cyc(rng, 15);
    for (long n : {3, 5, 15})
      for (long j = -3; j < 4; ++j) EXPECT_EQ(x.times_root_of_unity(n, j), x * root_of_unity(15, n, j));
  }
}
