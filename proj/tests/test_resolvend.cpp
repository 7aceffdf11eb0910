#include <gtest/gtest.h>

#include "galmod/certificate.hpp"
#include "galmod/resolvend.hpp"
#include "galmod/tame.hpp"
#include "galmod/transpose.hpp"
#include "generators.hpp"

using namespace galmod;
using galmod::testing::random_cyc;
using galmod::testing::uniform;

namespace {

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

GroupPtr group(const char* spec) { return std::make_shared<const FiniteAbelianGroup>(FiniteAbelianGroup::parse(spec)); }

GMap<CycNumber> random_map(std::mt19937_64& rng, const GroupPtr& g, long N) {
  GMap<CycNumber> a(g, CycNumber(N, 0));
  for (auto& v : a.values) v = random_cyc(rng, N);
  return a;
}

GMap<PuiseuxElement> random_puiseux_map(std::mt19937_64& rng, const GroupPtr& g, const TameModel& m) {
  GMap<PuiseuxElement> a(g, PuiseuxElement(m));
  for (auto& v : a.values) {
    v = PuiseuxElement(m, random_cyc(rng, m.N), uniform(rng, -4, 4)) + PuiseuxElement(m, random_cyc(rng, m.N), uniform(rng, -4, 4));
  }
  return a;
}

Resolvend<CycNumber> random_invertible(std::mt19937_64& rng, const GroupPtr& g, long N, const CharacterTable& t) {
  while (true) {
    auto r = to_resolvend(random_map(rng, g, N));
    auto v = to_character_space(r, t);
    bool ok = true;
    for (const auto& x : v.values) ok = ok && !x.is_zero();
    if (ok) return r;
  }
}

}  // namespace

TEST(Resolvend, DeltaExamples) {
  auto g = group("3,3");
  CycNumber one(3, 1);
  auto id = GMap<CycNumber>::delta(g, g->identity(), one);
  EXPECT_EQ(to_resolvend(id), group_element(g, g->identity(), one));
  GroupElement s{1, 2};
  EXPECT_EQ(to_resolvend(GMap<CycNumber>::delta(g, s, one)), group_element(g, g->negate(s), one));
  CharacterTable t(g);
  for (std::size_t c = 0; c < t.size(); ++c) {
    EXPECT_EQ(resolvent(id, t.character(c)), one);
    auto chi_s = char_value(*g, t.character(c), s, 3);
    EXPECT_EQ(resolvent(GMap<CycNumber>::delta(g, s, one), t.character(c)), *chi_s.inverse());
  }
}

TEST(Resolvend, LinearityAndRoundTrip) {
  std::mt19937_64 rng(1);
  auto g = group("9");
  CharacterTable t(g);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_map(rng, g, 9), b = random_map(rng, g, 9);
    GMap<CycNumber> sum(g, CycNumber(9, 0));
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] = a.values[i] + b.values[i];
    EXPECT_EQ(to_resolvend(sum), add(to_resolvend(a), to_resolvend(b)));
    EXPECT_EQ(from_resolvend(to_resolvend(a)), a);
    auto r = to_resolvend(a);
    EXPECT_EQ(from_character_space(to_character_space(r, t), t), r);
    EXPECT_EQ(involution(involution(r)), r);
  }
}

TEST(Resolvend, CharacterSpaceIsRingIsomorphism) {
  std::mt19937_64 rng(2);
  for (const char* spec : {"3", "3,3", "15"}) {
    auto g = group(spec);
    long N = g->exponent();
    CharacterTable t(g);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = to_resolvend(random_map(rng, g, N)), y = to_resolvend(random_map(rng, g, N));
      auto vx = to_character_space(x, t), vy = to_character_space(y, t);
      EXPECT_EQ(to_character_space(multiply(x, y), t), pointwise_product(vx, vy));
      auto vs = to_character_space(add(x, y), t);
      for (std::size_t c = 0; c < t.size(); ++c) EXPECT_EQ(vs.values[c], vx.values[c] + vy.values[c]);
      EXPECT_EQ(from_character_space(pointwise_product(vx, vy), t), multiply(x, y));
    }
  }
}

TEST(Resolvend, ConstantAndGroupElementInCharacterSpace) {
  auto g = group("3,9");
  CharacterTable t(g);
  CycNumber one(9, 1);
  auto v = to_character_space(group_element(g, g->identity(), one), t);
  for (const auto& x : v.values) EXPECT_EQ(x, one);
  GroupElement s{2, 5};
  auto vs = to_character_space(group_element(g, s, one), t);
  for (std::size_t c = 0; c < t.size(); ++c) EXPECT_EQ(vs.values[c], char_value(*g, t.character(c), s, 9));
  CharacterVector<CycNumber> ones{g, std::vector<CycNumber>(t.size(), one)};
  EXPECT_EQ(from_character_space(ones, t), group_element(g, g->identity(), one));
}

TEST(Resolvend, TracePairingIdentityCyclotomic) {
  std::mt19937_64 rng(3);
  auto g = group("3");
  CycNumber one(3, 1);
  GroupElement s{1};
  auto d = GMap<CycNumber>::delta(g, s, one);
  EXPECT_TRUE(trace_pairing_identity_check(d, d));
  EXPECT_EQ(multiply(to_resolvend(d), involution(to_resolvend(d))), group_element(g, g->identity(), one));
  for (const char* spec : {"3", "3,3", "5"}) {
    auto h = group(spec);
    for (int trial = 0; trial < 20; ++trial)
      EXPECT_TRUE(trace_pairing_identity_check(random_map(rng, h, 15), random_map(rng, h, 15)));
  }
}

TEST(Resolvend, TracePairingIdentityPuiseux) {
  std::mt19937_64 rng(4);
  TameModel m(3, 7, 3);
  auto g = group("3");
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_TRUE(trace_pairing_identity_check(random_puiseux_map(rng, g, m), random_puiseux_map(rng, g, m)));
}

TEST(Resolvend, InverseAndProductTransportExamples) {
  auto g = group("3,3");
  CharacterTable t(g);
  CycNumber one(3, 1);
  auto id = GMap<CycNumber>::delta(g, g->identity(), one);
  EXPECT_EQ(resolvend_inverse_transport(id, t), id);
  GroupElement s{1, 2};
  EXPECT_EQ(resolvend_inverse_transport(GMap<CycNumber>::delta(g, s, one), t), GMap<CycNumber>::delta(g, g->negate(s), one));
  std::mt19937_64 rng(5);
  auto a = random_map(rng, g, 3);
  EXPECT_EQ(resolvend_product_transport(id, a, t), a);
  GMap<CycNumber> zero(g, one);
  EXPECT_THROW(resolvend_inverse_transport(zero, t), Error);
}

TEST(Resolvend, ProductTransportMatchesCharacterSpace) {
  std::mt19937_64 rng(6);
  auto g = group("15");
  CharacterTable t(g);
  for (int trial = 0; trial < 5; ++trial) {
    auto a1 = from_resolvend(random_invertible(rng, g, 15, t));
    auto a2 = from_resolvend(random_invertible(rng, g, 15, t));
    auto a = resolvend_product_transport(a1, a2, t);
    auto via_chars = from_character_space(
        pointwise_product(to_character_space(to_resolvend(a1), t), to_character_space(to_resolvend(a2), t)), t);
    EXPECT_EQ(to_resolvend(a), via_chars);
    auto inv = resolvend_inverse_transport(a1, t);
    EXPECT_EQ(multiply(to_resolvend(inv), to_resolvend(a1)), group_element(g, g->identity(), CycNumber(15, 1)));
  }
}

TEST(Resolvend, ReducedEqualityModuloGroup) {
  std::mt19937_64 rng(7);
  for (const char* spec : {"3", "9", "3,3"}) {
    auto g = group(spec);
    CharacterTable t(g);
    auto basis = ahat_kernel_basis(*g);
    long N = g->exponent();
    auto r = random_invertible(rng, g, N, t);
    for (const auto& s : g->elements()) EXPECT_TRUE(reduced_equal(r, translate(r, s), basis, t));
    auto scaled = r;
    for (auto& c : scaled.coeffs) c = c.scaled(2);
    EXPECT_FALSE(reduced_equal(r, scaled, basis, t));
    auto other = random_invertible(rng, g, N, t);
    EXPECT_TRUE(reduced_equal(other, other, basis, t));
  }
}

TEST(Resolvend, ReducedEqualityPuiseux) {
  TameModel m(3, 7, 3);
  auto g = group("3");
  CharacterTable t(g);
  auto basis = ahat_kernel_basis(*g);
  auto one = PuiseuxElement::pi_power(m, 0);
  auto r1 = group_element(g, g->identity(), one);
  auto r2 = group_element(g, g->identity(), PuiseuxElement::pi_power(m, 3));
  EXPECT_FALSE(reduced_equal(r1, r2, basis, t));
  EXPECT_TRUE(reduced_equal(r1, group_element(g, GroupElement{2}, one), basis, t));
}

TEST(Resolvend, AssociatedHomOfDeltaIsTrivial) {
  TameModel m(3, 7, 3);
  auto g = group("3");
  CharacterTable t(g);
  auto a = GMap<PuiseuxElement>::delta(g, g->identity(), PuiseuxElement::pi_power(m, 0));
  for (const auto& [name, s] : associated_hom(a, tame_automorphisms(7), t)) EXPECT_EQ(s, g->identity()) << name;
}

TEST(Resolvend, AssociatedHomRejectsNonOrbit) {
  TameModel m(3, 7, 3);
  auto g = group("3");
  CharacterTable t(g);
  // r(a) = pi^{1/3}: sigma moves it by zeta_3, which is not a group element
  auto a = GMap<PuiseuxElement>::delta(g, g->identity(), PuiseuxElement::pi_power(m, 1));
  try {
    associated_hom(a, tame_automorphisms(7), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGaloisOrbit);
  }
}

TEST(Certificate, TrivialAndNonUnitCases) {
  TameModel m(1, 7, 3);
  auto g = group("3");
  CharacterTable t(g);
  auto a = GMap<PuiseuxElement>::delta(g, g->identity(), PuiseuxElement::pi_power(m, 0));
  auto rep = generator_certificate(a, 0, 7, t);
  EXPECT_TRUE(rep.membership && rep.unit && rep.overall);
  auto b = GMap<PuiseuxElement>::delta(g, g->identity(), PuiseuxElement::pi_power(m, 1));
  auto bad = generator_certificate(b, 0, 7, t);
  EXPECT_TRUE(bad.membership);
  EXPECT_FALSE(bad.unit);
  EXPECT_FALSE(bad.overall);
  EXPECT_FALSE(bad.witnesses.empty());
  GMap<PuiseuxElement> zero(g, PuiseuxElement(m));
  try {
    generator_certificate(zero, 0, 7, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularResolvend);
  }
}

TEST(Certificate, DivisionByGroupOrderNeedsUnit) {
  TameModel m(1, 3, 1);
  auto g = group("3");
  CharacterTable t(g);
  CharacterVector<PuiseuxElement> v{g, std::vector<PuiseuxElement>(3, PuiseuxElement::pi_power(m, 0))};
  try {
    from_character_space(v, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoefficientDomain);
  }
}
