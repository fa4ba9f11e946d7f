#include <gtest/gtest.h>

#include <cstdlib>

#include "covrough/covering_ops.hpp"
#include "covrough/laws.hpp"

using namespace covrough;
using namespace covrough::laws;

namespace {

ScopeSpec small_scope() {
  ScopeSpec s;
  s.max_n = 5;
  s.seeds = 40;
  s.pair_seeds = 20;
  s.sample_sets = 4;
  return s;
}

// reduct with the containment test turned around: a member counts as
// reducible when it equals the union of the other members containing it,
// which never happens, so nothing is dropped.
Covering backwards_reduct(const Covering& c) {
  std::vector<Mask> keep;
  const auto m = c.masks();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Mask u = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != i && mask_subset(m[i], m[j])) u |= m[j];
    }
    if (u != m[i]) keep.push_back(m[i]);
  }
  return Covering(c.universe(), keep);
}

}  // namespace

TEST(Laws, CatalogIsComplete) {
  EXPECT_EQ(all_laws().size(), kLawCount);
  for (auto id : all_laws()) {
    EXPECT_EQ(parse_law(law_name(id)), id);
    EXPECT_FALSE(law_statement(id).empty());
  }
  EXPECT_TRUE(expects_witness(LawId::PROP1_CONVERSE_FAILS));
  EXPECT_TRUE(expects_witness(LawId::RMK5));
  EXPECT_FALSE(expects_witness(LawId::THM1));
  EXPECT_THROW((void)parse_law("THM99"), Error);
}

TEST(Laws, AllPassOnSmallScope) {
  const auto reports = run_all(small_scope(), 2);
  ASSERT_EQ(reports.size(), kLawCount);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << law_name(r.law) << ": " << r.detail;
    EXPECT_GT(r.instances_checked, 0U) << law_name(r.law);
    EXPECT_EQ(r.outcome == Outcome::ExpectedFailureFound, expects_witness(r.law));
    if (expects_witness(r.law)) {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_TRUE(replay_witness(r.law, *r.witness));
    }
  }
}

TEST(Laws, DegenerateScopePassesTrivially) {
  ScopeSpec s;
  s.max_n = 1;
  s.seeds = 1;
  s.pair_seeds = 1;
  s.sample_sets = 1;
  for (const auto& r : run_all(s)) EXPECT_TRUE(r.passed()) << law_name(r.law) << ": " << r.detail;
}

TEST(Laws, BrokenReductIsCaught) {
  Operators broken = default_operators();
  broken.reduct = backwards_reduct;
  const auto reports = run_all(small_scope(), 1, broken);
  std::size_t failures = 0;
  for (const auto& r : reports) {
    if (r.passed()) continue;
    ++failures;
    if (expects_witness(r.law)) {
      // A failed search has nothing to replay.
      EXPECT_FALSE(r.witness.has_value());
      continue;
    }
    ASSERT_TRUE(r.witness.has_value()) << law_name(r.law) << ": " << r.detail;
    EXPECT_TRUE(replay_witness(r.law, *r.witness, broken)) << law_name(r.law);
    EXPECT_FALSE(replay_witness(r.law, *r.witness)) << law_name(r.law);
  }
  EXPECT_GE(failures, 1U);
  const auto cor3 = run_law(LawId::COR3, small_scope(), broken);
  EXPECT_EQ(cor3.outcome, Outcome::Fail);
}

TEST(Laws, WitnessJsonRoundTrip) {
  const auto r = run_law(LawId::PROP1_CONVERSE_FAILS, small_scope());
  ASSERT_EQ(r.outcome, Outcome::ExpectedFailureFound);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("law"), "PROP1_CONVERSE_FAILS");
  EXPECT_EQ(j.at("outcome"), "expected-failure-found");
  EXPECT_TRUE(replay_witness(r.law, nlohmann::json::parse(j.at("witness").dump())));
  const auto& spaces = j.at("witness").at("spaces");
  ASSERT_EQ(spaces.size(), 2U);
  EXPECT_LE(spaces[0].at("universe").size(), 3U);
}

TEST(Laws, Deterministic) {
  const std::vector<LawId> ids{LawId::THM1, LawId::PROP2, LawId::LEM4, LawId::PROP1_CONVERSE_FAILS};
  const auto a = run_laws(ids, small_scope(), 1);
  const auto b = run_laws(ids, small_scope(), 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].law, ids[i]);
    EXPECT_EQ(a[i].instances_checked, b[i].instances_checked);
    EXPECT_EQ(a[i].outcome, b[i].outcome);
    EXPECT_EQ(a[i].witness, b[i].witness);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Laws, ScopeLimits) {
  ScopeSpec s;
  s.max_n = kMaxScopeN + 1;
  EXPECT_THROW(validate(s), Error);
  EXPECT_THROW((void)run_law(LawId::EX1, s), Error);
  s.max_n = 0;
  EXPECT_THROW(validate(s), Error);
  s.max_n = 3;
  s.seeds = kMaxScopeSeeds + 1;
  EXPECT_THROW(validate(s), Error);
}

TEST(Laws, EnvironmentCapsScope) {
  ::setenv("COVROUGH_MAX_N", "2", 1);
  EXPECT_EQ(apply_environment(ScopeSpec{}).max_n, 2U);
  ::setenv("COVROUGH_MAX_N", "junk", 1);
  EXPECT_THROW((void)apply_environment(ScopeSpec{}), Error);
  ::unsetenv("COVROUGH_MAX_N");
  EXPECT_EQ(apply_environment(ScopeSpec{}).max_n, ScopeSpec{}.max_n);
}

TEST(Laws, TableMentionsEveryLaw) {
  ScopeSpec s;
  s.max_n = 2;
  const auto reports = run_all(s);
  const std::string table = format_table(reports);
  for (auto id : all_laws()) EXPECT_NE(table.find(std::string(law_name(id))), std::string::npos);
  EXPECT_NE(table.find("34/34 laws passed"), std::string::npos);
}
