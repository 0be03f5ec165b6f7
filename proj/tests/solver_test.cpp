#include <gtest/gtest.h>

#include "chocobar/solver.hpp"
#include "oracle.hpp"

namespace chocobar {
namespace {

TEST(Classify3Test, Examples) {
  EXPECT_EQ(classify3(WidthFunction::floor_div(4), {14, 3, 13}), Outcome::P);
  EXPECT_EQ(classify3(WidthFunction::floor_div(4), {0, 0, 0}), Outcome::P);
  EXPECT_EQ(classify3(WidthFunction::floor_div(4), {1, 0, 0}), Outcome::N);
}

TEST(Classify3Test, RefusesUncertifiedInputs) {
  EXPECT_THROW(classify3(WidthFunction::linear(1), {0, 5, 5}), PreconditionError);
  EXPECT_THROW(classify3(WidthFunction::floor_div(4), {0, 4, 13}), PreconditionError);
  const FormulaClassifier classifier(WidthFunction::floor_div(2), 16);
  EXPECT_TRUE(classifier.certificate().holds);
  EXPECT_THROW(classifier.classify({0, 0, 17}), PreconditionError);
}

TEST(Classify3SearchTest, Examples) {
  EXPECT_EQ(classify3_search(WidthFunction::floor_div(2), {0, 0, 0}), Outcome::P);
  EXPECT_EQ(classify3_search(WidthFunction::linear(1), {0, 5, 5}), Outcome::N);
  EXPECT_EQ(classify3_search(WidthFunction::floor_div(4), {14, 3, 13}), Outcome::P);
  // Non-canonical y is capped at h(z).
  EXPECT_EQ(classify3_search(WidthFunction::floor_div(4), {14, 9, 13}), Outcome::P);
}

TEST(Classify3SearchTest, MatchesBruteForceOracle) {
  const auto h = WidthFunction::linear(1, 40);
  const auto table = OutcomeTable::build(h, 10, 10);
  oracle::BruteOutcome brute([](Value t) { return t; });
  for (Value z = 0; z <= 10; ++z) {
    for (Value y = 0; y <= z; ++y) {
      for (Value x = 0; x <= 10; ++x) {
        ASSERT_EQ(table.at({x, y, z}) == Outcome::P, brute.is_p(x, y, z)) << x << ',' << y << ',' << z;
      }
    }
  }
}

TEST(Classify3SearchTest, AgreesWithFormulaOnFloorTwo) {
  const auto h = WidthFunction::floor_div(2);
  const auto table = OutcomeTable::build(h, 32, 32);
  const FormulaClassifier formula(h, 32);
  for (Value z = 0; z <= 32; ++z) {
    for (Value y = 0; y <= h(z); ++y) {
      for (Value x = 0; x <= 32; ++x) ASSERT_EQ(classify3_search(h, {x, y, z}, table), formula.classify({x, y, z}));
    }
  }
}

TEST(Classify3SearchTest, ConsistentWithGrundy) {
  for (const auto& h : {WidthFunction::linear(1), WidthFunction::log2_step(), WidthFunction::floor_div(4)}) {
    const auto outcomes = OutcomeTable::build(h, 24, 20);
    const auto grundy_table = GrundyTable::build(h, 100, 20);
    for (Value z = 0; z <= 20; ++z) {
      for (Value y = 0; y <= grundy_table.column_top(z); ++y) {
        for (Value x = 0; x <= 24; ++x) {
          const bool p = (x ^ grundy(h, {y, z}, grundy_table)) == 0;
          ASSERT_EQ(outcomes.at({x, y, z}) == Outcome::P, p);
        }
      }
    }
  }
}

TEST(Classify3SearchTest, BoundsAndFingerprint) {
  const auto h = WidthFunction::floor_div(2, 20);
  const auto table = OutcomeTable::build(h, 4, 10);
  EXPECT_THROW(table.at({5, 0, 0}), BoundsError);
  EXPECT_THROW(table.at({0, 0, 11}), BoundsError);
  EXPECT_THROW(classify3_search(WidthFunction::floor_div(4, 20), {0, 0, 1}, table), FingerprintMismatch);
  EXPECT_THROW(OutcomeTable::build(h, 4, 21), DomainError);
}

TEST(WinningMovesTest, Strip) {
  const auto h = WidthFunction::floor_div(4);
  const auto w = winning_moves3(h, {15, 3, 13});
  EXPECT_NE(std::find(w.begin(), w.end(), Position3{14, 3, 13}), w.end());
  EXPECT_TRUE(winning_moves3(h, {14, 3, 13}).empty());
  EXPECT_TRUE(winning_moves3(h, {0, 0, 0}).empty());
}

TEST(WinningMovesTest, BarWithoutStrip) {
  // Options of {0,2,5}: {0,0,0} {0,0,1} {0,0,5} {0,1,2} {0,1,3} {0,1,5} {0,2,4};
  // only {0,0,0} has x^y^z == 0.
  const auto h = WidthFunction::floor_div(2);
  EXPECT_EQ(winning_moves3(h, {0, 2, 5}), (std::vector<Position3>{{0, 0, 0}}));
}

TEST(WinningMovesTest, SingleBar) {
  const auto f2 = WidthFunction::floor_div(2);
  const auto t2 = GrundyTable::build(f2, 10, 10);
  oracle::BruteGrundy brute([](Value t) { return t / 2; });
  std::vector<Position2> expected;
  for (const auto& q : moves2(f2, {2, 5})) {
    if (brute(q.y, q.z) == 0) expected.push_back(q);
  }
  EXPECT_EQ(winning_moves2(f2, {2, 5}, t2), expected);
  EXPECT_EQ(expected, (std::vector<Position2>{{0, 0}}));
  EXPECT_TRUE(winning_moves2(f2, {0, 0}, t2).empty());

  const auto f4 = WidthFunction::floor_div(4);
  EXPECT_FALSE(winning_moves2(f4, {3, 13}, GrundyTable::build(f4, 3, 13)).empty());
}

TEST(WinningMovesTest, EmptyExactlyAtP) {
  const auto h = WidthFunction::log2_step();
  const auto table = OutcomeTable::build(h, 12, 16);
  for (Value z = 0; z <= 16; ++z) {
    for (Value y = 0; y <= h(z); ++y) {
      for (Value x = 0; x <= 12; ++x) {
        const auto w = winning_moves3(h, {x, y, z}, table);
        ASSERT_EQ(w.empty(), table.at({x, y, z}) == Outcome::P);
        ASSERT_TRUE(std::is_sorted(w.begin(), w.end()));
      }
    }
  }
}

TEST(SolveJsonTest, Schema) {
  const json j = solve_to_json({15, 3, 13}, Outcome::N, {{14, 3, 13}});
  EXPECT_EQ(j.at("class"), "N");
  EXPECT_EQ(j.at("position").at("x"), 15);
  EXPECT_EQ(j.at("winning_moves").at(0).at("x"), 14);
}

}  // namespace
}  // namespace chocobar
