#include <gtest/gtest.h>

#include "qvenn/errors.hpp"
#include "qvenn/properties.hpp"

namespace qvenn {
namespace {

TEST(PropertySuite, DefaultSeedPasses) {
  const PropertySuiteReport r = run_property_suite(kDefaultPropertySeed);
  EXPECT_EQ(r.results.size(), property_names().size());
  for (const auto& p : r.results) {
    EXPECT_TRUE(p.passed()) << p.name << " worst excess " << p.worst_excess;
    EXPECT_GT(p.trials, 0u) << p.name;
  }
}

TEST(PropertySuite, OtherSeedPasses) {
  const PropertySuiteReport r = run_property_suite(12345);
  for (const auto& p : r.results) EXPECT_TRUE(p.passed()) << p.name;
}

TEST(PropertySuite, DeterministicForFixedSeed) {
  const auto a = run_property_suite(777, {"strong_subadditivity", "channel_identities"});
  const auto b = run_property_suite(777, {"strong_subadditivity", "channel_identities"});
  ASSERT_EQ(a.results.size(), 2u);
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].worst_excess, b.results[i].worst_excess);
    EXPECT_EQ(a.results[i].trials, b.results[i].trials);
  }
}

TEST(PropertySuite, SelectionIsIndependentOfOrder) {
  // Each property seeds its own generator, so running it alone or in the
  // full battery gives the same numbers.
  const auto alone = run_property_suite(5, {"chain_rule"});
  const auto all = run_property_suite(5);
  for (const auto& p : all.results) {
    if (p.name == "chain_rule") {
      EXPECT_EQ(p.worst_excess, alone.results.front().worst_excess);
    }
  }
}

TEST(PropertySuite, BatterySizes) {
  const auto r = run_property_suite(1, {"subadditivity", "strong_subadditivity", "pure_center_zero"});
  EXPECT_EQ(r.results[0].trials, 200u);
  EXPECT_EQ(r.results[1].trials, 200u);
  EXPECT_EQ(r.results[2].trials, 100u);
}

TEST(PropertySuite, UnknownNameRejected) { EXPECT_THROW(run_property_suite(1, {"nope"}), DomainError); }

}  // namespace
}  // namespace qvenn
