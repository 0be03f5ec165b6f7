#include <gtest/gtest.h>

#include <random>

#include "chocobar/conditions.hpp"
#include "chocobar/verify.hpp"
#include "oracle.hpp"

namespace chocobar {
namespace {

TEST(ConditionATest, ClosedFamiliesHold) {
  for (Value d : {2, 4, 6, 8, 10}) EXPECT_TRUE(check_condition_a(WidthFunction::floor_div(d), 256).holds) << d;
  const auto r = check_condition_a(WidthFunction::log2_step(), 512);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.z_max, 512u);
  EXPECT_EQ(r.i_max, 10u);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(ConditionATest, LinearCounterexample) {
  const auto r = check_condition_a(WidthFunction::linear(1), 16);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, (ConditionCounterexample{1, 0, 1}));
  EXPECT_EQ(r.i_max, 5u);
}

TEST(ConditionATest, OddDivisorsFail) {
  std::vector<Value> third;
  for (Value t = 0; t <= 64; ++t) third.push_back(t / 3);
  const auto r = check_condition_a(WidthFunction::table(third), 64);
  ASSERT_FALSE(r.holds);
  // floor(z/2) pairs {2,3} straddle a step of floor(t/3).
  EXPECT_EQ(*r.counterexample, (ConditionCounterexample{1, 2, 3}));
}

TEST(ConditionATest, WindowEdgeCases) {
  EXPECT_TRUE(check_condition_a(WidthFunction::linear(1), 0).holds);
  EXPECT_EQ(check_condition_a(WidthFunction::linear(1), 0).i_max, 0u);
  EXPECT_THROW(check_condition_a(WidthFunction::floor_div(2, 10), 11), DomainError);
}

// Random monotone tables against the quadratic definition.
TEST(ConditionATest, MatchesQuadraticDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const Value n = 1 + rng() % 40;
    std::vector<Value> values(n);
    Value acc = rng() % 3;
    for (auto& v : values) {
      if (rng() % 3 == 0) acc += rng() % 4;
      v = acc;
    }
    const auto h = WidthFunction::table(values);
    const auto r = check_condition_a(h, n - 1);
    const bool brute = oracle::condition_holds_bruteforce([&](Value t) { return values[t]; }, n - 1, r.i_max);
    ASSERT_EQ(r.holds, brute);
    if (!r.holds) {
      const auto& c = *r.counterexample;
      ASSERT_LT(c.z, c.z_prime);
      ASSERT_EQ(c.z >> c.i, c.z_prime >> c.i);
      ASSERT_NE(values[c.z] >> (c.i - 1), values[c.z_prime] >> (c.i - 1));
      // Lexicographic minimality in (i, z, z').
      for (Value i = 1; i <= c.i; ++i) {
        for (Value z = 0; z < n; ++z) {
          for (Value zp = z + 1; zp < n; ++zp) {
            const bool bad = (z >> i) == (zp >> i) && (values[z] >> (i - 1)) != (values[zp] >> (i - 1));
            const ConditionCounterexample candidate{i, z, zp};
            if (bad) {
              ASSERT_GE(candidate, c);
            }
          }
        }
      }
      // Still a counterexample on any larger window.
      std::vector<Value> longer = values;
      longer.push_back(values.back() + rng() % 5);
      ASSERT_FALSE(check_condition_a(WidthFunction::table(longer), n).holds);
    }
  }
}

TEST(ConditionATest, ReportJson) {
  const json bad = report_to_json(check_condition_a(WidthFunction::linear(1), 16));
  EXPECT_FALSE(bad.at("holds").get<bool>());
  EXPECT_EQ(bad.at("counterexample").at("z_prime").get<Value>(), 1u);
  EXPECT_EQ(bad.at("window").at("i_max").get<Value>(), 5u);
  const json good = report_to_json(check_condition_a(WidthFunction::floor_div(4), 16));
  EXPECT_TRUE(good.at("counterexample").is_null());
}

TEST(ShiftTest, Admissibility) {
  const auto h = WidthFunction::floor_div(4);
  EXPECT_TRUE(check_shift_admissible(h, 12));
  EXPECT_FALSE(check_shift_admissible(h, 5));
  EXPECT_TRUE(check_shift_admissible(h, 3));  // h(3) = 0
  EXPECT_THROW(check_shift_admissible(h, 0), ValidationError);
  EXPECT_THROW(check_shift_admissible(WidthFunction::floor_div(4, 10), 11), DomainError);
}

TEST(ShiftTest, PowerForm) {
  EXPECT_EQ(power_form(12, 3), (PowerForm{3, 2}));
  EXPECT_FALSE(power_form(12, 4).has_value());
  EXPECT_EQ(power_form(40, 0), (PowerForm{5, 3}));
  EXPECT_EQ(power_form(7, 0), (PowerForm{7, 0}));
}

TEST(ShiftTest, AdmissibleFloorShifts) {
  EXPECT_EQ(admissible_shifts_floor(2, 16), (std::vector<Value>{1, 2, 3, 4, 6, 8, 12, 16}));
  EXPECT_EQ(admissible_shifts_floor(1, 8), (std::vector<Value>{1, 2, 4, 8}));
  const auto k2 = admissible_shifts_floor(2, 16);
  EXPECT_EQ(std::count(k2.begin(), k2.end(), 5), 0);
}

TEST(ShiftTest, AdmissibilityTestsAgree) {
  for (Value k = 1; k <= 4; ++k) {
    const auto h = WidthFunction::floor_div(2 * k);
    const auto listed = admissible_shifts_floor(k, 64);
    for (Value s = 1; s <= 64; ++s) {
      const bool direct = check_shift_admissible(h, s);
      const bool power = power_form(s, h(s)).has_value();
      const bool in_list = std::binary_search(listed.begin(), listed.end(), s);
      ASSERT_EQ(direct, power) << "k=" << k << " s=" << s;
      ASSERT_EQ(direct, in_list) << "k=" << k << " s=" << s;
    }
  }
}

TEST(ShiftTest, ShiftAndUnshift) {
  const auto h = WidthFunction::floor_div(4, 300);
  const auto g = shift(h, 12);
  for (Value t = 0; t <= g.domain_max(); ++t) ASSERT_EQ(g(t), (t + 12) / 4);

  const auto back = unshift(g, 12);
  EXPECT_EQ(back.domain_max(), 300u);
  for (Value z = 0; z <= 300; ++z) ASSERT_EQ(back(z), z >= 12 ? z / 4 : 3u);

  const auto again = shift(back, 12);
  EXPECT_EQ(again.domain_max(), g.domain_max());
  for (Value t = 0; t <= g.domain_max(); ++t) ASSERT_EQ(again(t), g(t));

  const auto table = shift(WidthFunction::table({0, 0, 1, 1, 2, 2}), 2);
  const std::vector<Value> expected{1, 1, 2, 2};
  ASSERT_EQ(table.domain_max(), 3u);
  for (Value t = 0; t <= 3; ++t) EXPECT_EQ(table(t), expected[t]);

  const auto constant = unshift(WidthFunction::table({5, 5, 5}), 4);
  for (Value t = 0; t <= constant.domain_max(); ++t) EXPECT_EQ(constant(t), 5u);
}

TEST(ShiftTest, ShiftPreservesFormulaForCertifiedFunctions) {
  const Value z_max = 48;
  for (const auto& h : {WidthFunction::floor_div(2), WidthFunction::log2_step(), WidthFunction::floor_div(6)}) {
    ASSERT_TRUE(check_condition_a(h, 4 * z_max).holds);
    for (Value s = 1; s <= 32; ++s) {
      if (!check_shift_admissible(h, s)) continue;
      const auto r = verify_formula(shift(h, s), Formula::shifted(s), h(z_max + s), z_max);
      ASSERT_EQ(r.mismatches, 0u) << "s=" << s;
    }
  }
}

}  // namespace
}  // namespace chocobar
