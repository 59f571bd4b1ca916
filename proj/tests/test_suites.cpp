#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "bootperc/errors.hpp"
#include "bootperc/suites.hpp"

using namespace bootperc;

TEST(Suites, UpperBoundsAndFamiliesPass) {
  for (const char* name : {"upper-bounds", "families"}) {
    const auto report = run_suite(name);
    for (const auto& claim : report.claims) {
      EXPECT_TRUE(claim.passed()) << name << " / " << claim.id << "\n" << nlohmann::json(claim).dump(1);
      if (!claim.observation) {
        EXPECT_GT(claim.instances, 0U) << claim.id;
      }
    }
  }
}

TEST(Suites, ReportShape) {
  SuiteOptions o;
  o.max = 5;
  const nlohmann::json j = run_suite("grid-theorem", o);
  EXPECT_EQ(j["suite"], "grid-theorem");
  EXPECT_EQ(j["passed"], true);
  for (const auto& claim : j["claims"]) {
    EXPECT_TRUE(claim.contains("claim"));
    EXPECT_TRUE(claim.contains("instances"));
    EXPECT_TRUE(claim.contains("witnesses"));
  }
  EXPECT_THROW(run_suite("nope"), PreconditionError);
}
