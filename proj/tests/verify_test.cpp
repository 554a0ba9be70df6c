#include <gtest/gtest.h>

#include "sgp/error.hpp"
#include "sgp/verify.hpp"

namespace sgp {
namespace {

TEST(Verify, RegistryIsComplete) {
  std::vector<std::string> ids;
  for (const auto& t : theorem_registry()) ids.push_back(t.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"pf-oracle", "genus-inequality", "chain",
                                           "rpf-shift", "gap-window", "med-type",
                                           "main-theorem", "trichotomy", "type-edim",
                                           "med-equiv", "med-theorem"}));
}

TEST(Verify, MainTheoremThroughGenusFifteen) {
  const auto report = verify("main-theorem", 15);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.universe_size, 0u);
  EXPECT_EQ(report.theorem_id, "main-theorem");
}

TEST(Verify, ChainOnNAloneIsVacuous) {
  const auto report = verify("chain", 0);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.universe_size, 0u);
}

TEST(Verify, PfOracleThroughGenusTwelve) {
  const auto report = verify("pf-oracle", 12);
  EXPECT_TRUE(report.passed());
  std::uint64_t total = 0;
  enumerate_by_genus({12}, [&](const NumericalSemigroup&) { ++total; });
  EXPECT_EQ(report.universe_size, total);
}

TEST(Verify, EveryEntryPassesAndIsThreadIndependent) {
  const auto serial = verify_all(12, kDefaultGenusCap, 1);
  const auto parallel = verify_all(12, kDefaultGenusCap, 3);
  ASSERT_EQ(serial.size(), theorem_registry().size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_TRUE(serial[i].passed()) << serial[i].theorem_id;
    EXPECT_EQ(serial[i].theorem_id, parallel[i].theorem_id);
    EXPECT_EQ(serial[i].universe_size, parallel[i].universe_size);
    EXPECT_EQ(serial[i].violations, parallel[i].violations);
  }
}

TEST(Verify, Errors) {
  try {
    verify("no-such-claim", 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_theorem);
  }
  try {
    verify("chain", 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}

}  // namespace
}  // namespace sgp
