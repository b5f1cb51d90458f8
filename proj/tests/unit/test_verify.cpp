#include <gtest/gtest.h>

#include "zhodge/errors.hpp"
#include "zhodge/verify.hpp"

using namespace zhodge;

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, PassesOnSeededRun) {
  const auto report = run_suite({GetParam(), 7, 60, 0, false});
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(report.str().rfind("suite " + GetParam() + ": 60/60 cases passed (seed 7)", 0), 0u);
}

TEST_P(Suite, DetectsCorruptedOracle) {
  const auto report = run_suite({GetParam(), 3, 60, 0, true});
  EXPECT_FALSE(report.ok());
  ASSERT_TRUE(report.first_failure.has_value());
  EXPECT_NE(report.str().find("first counterexample"), std::string::npos);
}

TEST_P(Suite, ReportIsReproducibleAcrossThreadCounts) {
  const auto one = run_suite({GetParam(), 99, 40, 1, true});
  const auto many = run_suite({GetParam(), 99, 40, 4, true});
  EXPECT_EQ(one.str(), many.str());
}

INSTANTIATE_TEST_SUITE_P(AllSuites, Suite, ::testing::ValuesIn(suite_names()));

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite({"nope", 0, 1, 0, false}), InputError); }
