#include <gtest/gtest.h>

#include "rackiso/verify.hpp"

using namespace rackiso;

namespace {
void expect_pass(const std::string& suite, Theory th, VerifyOptions o) {
  o.theory = th;
  const auto rep = run_suite(suite, o);
  ASSERT_TRUE(rep.has_value());
  EXPECT_TRUE(rep->ok()) << rep->text();
  EXPECT_GT(rep->checks, 0u);
}
}  // namespace

TEST(Suites, DefaultsPass) {
  for (const auto& name : suite_names())
    for (Theory th : {Theory::Quandle, Theory::Rack})
      expect_pass(name, th, suite_defaults(name, th));
}

TEST(Suites, UnknownName) { EXPECT_FALSE(run_suite("nope", VerifyOptions{}).has_value()); }

// Wider ranges than the acceptance bounds.
TEST(Suites, PhiQuandleLength4) {
  auto o = suite_defaults("iso-f_n", Theory::Quandle);
  o.max_len = 4;
  expect_pass("iso-f_n", Theory::Quandle, o);
}

TEST(Suites, PhiRackLength3) {
  auto o = suite_defaults("iso-zxf_n", Theory::Rack);
  o.max_len = 3;
  o.max_z = 1;
  expect_pass("iso-zxf_n", Theory::Rack, o);
}

TEST(Suites, LemmasLength6) {
  auto o = suite_defaults("lemmas", Theory::Quandle);
  o.max_len = 6;
  o.seed = 17;
  expect_pass("lemmas", Theory::Quandle, o);
}

TEST(Suites, InnerSingleGenerator) {
  for (Theory th : {Theory::Quandle, Theory::Rack}) {
    auto o = suite_defaults("inner", th);
    o.gens = 1;
    o.max_len = 4;
    expect_pass("inner", th, o);
  }
}

TEST(Suites, NaturalityOtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u})
    for (Theory th : {Theory::Quandle, Theory::Rack}) {
      auto o = suite_defaults("naturality", th);
      o.seed = seed;
      expect_pass("naturality", th, o);
    }
}

TEST(Suites, GlobalIntegersGrowWithSize) {
  auto o = suite_defaults("global", Theory::Rack);
  o.max_size = 9;
  const auto rep = verify_global(o);
  EXPECT_TRUE(rep.ok()) << rep.text();
}

TEST(Report, FailureIsRecorded) {
  SuiteReport r("demo");
  r.check(true, [] { return std::string("never"); });
  r.check(false, [] { return std::string("broken"); });
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed, 1u);
  EXPECT_NE(r.text().find("broken"), std::string::npos);
}
