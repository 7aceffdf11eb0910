#include <gtest/gtest.h>

#include <set>

#include "galmod/json_io.hpp"
#include "galmod/mutation.hpp"
#include "galmod/suite.hpp"
#include "galmod/tame.hpp"

using namespace galmod;

TEST(Json, CycNumberRoundTrip) {
  auto x = CycNumber::from_coeffs(9, {Rational(1, 3), 0, Rational(-2), 0, 0, Rational(5, 7)});
  auto j = to_json(x);
  EXPECT_EQ(j["N"], 9);
  EXPECT_EQ(j["coeffs"][0], "1/3");
  EXPECT_EQ(j["coeffs"][2], "-2");
  EXPECT_EQ(cyc_from_json(j), x);
  EXPECT_THROW(cyc_from_json(Json{{"N", 9}}), Error);
}

TEST(Json, PuiseuxRoundTrip) {
  TameModel m(3, 7, 3);
  auto x = PuiseuxElement(m, CycNumber::zeta_power(3, 1), -1) + PuiseuxElement::pi_power(m, 3);
  auto j = to_json(x);
  EXPECT_EQ(j[0]["exponent"], "-1/3");
  EXPECT_EQ(j[1]["exponent"], "1");
  EXPECT_EQ(puiseux_from_json(j, m), x);
  Json bad = Json::array({{{"exponent", "1/2"}, {"coeff", to_json(CycNumber(3, 1))}}});
  EXPECT_THROW(puiseux_from_json(bad, m), Error);
}

TEST(Json, PairingTables) {
  auto g = FiniteAbelianGroup::parse("3");
  auto j = pairing_table_json(g);
  EXPECT_EQ(j["rows"][1]["values"], Json::array({"0", "1/3", "-1/3"}));
  EXPECT_EQ(pairing_table_csv(g), "character,\"(0)\",\"(1)\",\"(2)\"\n\"(0)\",0,0,0\n\"(1)\",0,1/3,-1/3\n\"(2)\",0,-1/3,1/3\n");
  auto big = pairing_table_json(FiniteAbelianGroup::parse("3,9"));
  EXPECT_EQ(big["rows"].size(), 27u);
  std::set<std::string> dens;
  for (const auto& row : big["rows"])
    for (const auto& v : row["values"]) {
      auto s = v.get<std::string>();
      auto slash = s.find('/');
      dens.insert(slash == std::string::npos ? "1" : s.substr(slash + 1));
    }
  EXPECT_EQ(dens, (std::set<std::string>{"1", "3", "9"}));
}

TEST(Json, GMapAndCertificate) {
  auto g = std::make_shared<const FiniteAbelianGroup>(FiniteAbelianGroup::parse("3"));
  TameModel m(3, 7, 3);
  auto a = tame_generator(g, 3, 7, {1}, m);
  auto j = to_json(a);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["element"], "(1)");
  auto cert = generator_certificate(a, -1, 7, CharacterTable(g));
  EXPECT_EQ(to_json(cert)["overall"], "pass");
}

TEST(Suite, OddGroupsOracle) {
  // Abelian groups of odd order n <= 27: one per n, plus C3xC3, C5xC5, C3xC9, C3xC3xC3.
  auto groups = odd_groups_up_to(27);
  EXPECT_EQ(groups.size(), 17u);
  std::set<std::vector<long>> seen(groups.begin(), groups.end());
  EXPECT_TRUE(seen.count({3, 3}));
  EXPECT_TRUE(seen.count({3, 9}));
  EXPECT_TRUE(seen.count({3, 3, 3}));
  EXPECT_TRUE(seen.count({5, 5}));
  EXPECT_FALSE(seen.count({9, 3}));
  EXPECT_EQ(odd_groups_up_to(9).size(), 5u);
}

TEST(Suite, OptionValidation) {
  SuiteOptions o;
  o.max_order = 29;
  EXPECT_THROW(validate_suite_options(o), Error);
  o.max_order = 27;
  o.primes = {11};
  EXPECT_THROW(validate_suite_options(o), Error);
  o.primes = {3};
  o.tame_degrees = {11};
  EXPECT_THROW(validate_suite_options(o), Error);
  EXPECT_EQ(tame_residue_size(9), 19);
}

TEST(Suite, MinimalRunPassesAndIsSorted) {
  SuiteOptions o;
  o.max_order = 9;
  o.primes = {3};
  o.tame_degrees = {3};
  auto entries = run_suite(o);
  EXPECT_TRUE(all_passed(entries));
  std::set<int> criteria;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    criteria.insert(entries[i].criterion);
    if (i) {
      EXPECT_LT(entries[i - 1].check_id, entries[i].check_id);
    }
  }
  EXPECT_EQ(criteria.size(), static_cast<std::size_t>(kCriterionCount));
  auto j1 = suite_report_json(entries, false).dump();
  auto j2 = suite_report_json(run_suite(o), false).dump();
  EXPECT_EQ(j1, j2);
  EXPECT_EQ(suite_report_json(entries, true)["entries"][0].count("wall_ms"), 1u);
  EXPECT_EQ(suite_report_json(entries, false)["entries"][0].count("wall_ms"), 0u);
}

TEST(Suite, MutationsFailTheSuite) {
  SuiteOptions o;
  o.max_order = 9;
  o.primes = {3, 5};
  o.tame_degrees = {3};
  for (Mutation m : all_mutations()) {
    ScopedMutation guard(m);
    bool failed = false;
    for (int k = 1; k <= 10; ++k)
      for (const auto& e : run_criterion(k, o)) failed = failed || !e.passed;
    EXPECT_TRUE(failed) << mutation_name(m);
  }
}
