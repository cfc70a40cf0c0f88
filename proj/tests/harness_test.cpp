// Copyright 2026 The Grounded Arithmetic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ga/harness.hpp"

#include <gtest/gtest.h>

#include "ga/errors.hpp"
#include "ga/search.hpp"
#include "testing.hpp"

namespace ga {
namespace {

using testing::Corpus;
using testing::T;

TEST(Holds, OpenJudgments) {
  DefinitionList defs = Corpus("arith.gad");
  Judgment good({NatOf(Term::Var(0))}, T("add(v0, 0) = v0", defs));
  Judgment bad({NatOf(Term::Var(0))}, T("add(v0, 1) = v0", defs));
  EXPECT_TRUE(JudgmentHolds(defs, good, 5, 1000, 10000));
  Assignment cex;
  EXPECT_FALSE(JudgmentHolds(defs, bad, 5, 1000, 10000, {}, &cex));
  // An unprovable hypothesis makes the judgment vacuous.
  DefinitionList p = Corpus("paradox.gad");
  EXPECT_TRUE(JudgmentHolds(p, Judgment({T("liar", p)}, False()), 3, 1000, 10000));
  EXPECT_FALSE(JudgmentHolds(p, Judgment({}, T("liar", p)), 3, 1000, 10000));
}

TEST(Harness, EveryRuleHasAGenerator) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    EXPECT_TRUE(HasGenerator(static_cast<RuleId>(i))) << i;
  }
  EXPECT_EQ(HarnessRuleNames().size(), kRuleCount + CanaryNames().size());
  EXPECT_EQ(CanaryNames().size(), 2u);
}

std::vector<std::string> PrimitiveRules() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    out.push_back(RuleName(static_cast<RuleId>(i)));
  }
  return out;
}

class RuleSweep : public ::testing::TestWithParam<std::string> {};

TEST_P(RuleSweep, NoCounterexamples) {
  DefinitionList defs = Corpus("arith.gad");
  RuleInstanceSpec spec;
  spec.rule = GetParam();
  spec.cases = 40;
  spec.seed = 11;
  HarnessReport r = CheckRule(defs, spec);
  ASSERT_EQ(r.rules.size(), 1u);
  EXPECT_TRUE(r.passed()) << r.Serialize();
  EXPECT_EQ(r.rules[0].generated, 40u);
}

INSTANTIATE_TEST_SUITE_P(AllRules, RuleSweep,
                         ::testing::ValuesIn(PrimitiveRules()),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param) {
                             s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           }
                           return s + "_" + std::to_string(info.index);
                         });

TEST(Harness, CanariesAreCaught) {
  DefinitionList defs = Corpus("arith.gad");
  for (const std::string& c : CanaryNames()) {
    RuleInstanceSpec spec;
    spec.rule = c;
    spec.cases = 50;
    HarnessReport r = CheckRule(defs, spec);
    ASSERT_EQ(r.rules.size(), 1u);
    EXPECT_TRUE(r.rules[0].canary);
    EXPECT_FALSE(r.rules[0].counterexamples.empty()) << c;
    EXPECT_TRUE(r.passed());
  }
}

TEST(Harness, ReportsAreDeterministic) {
  DefinitionList defs = Corpus("arith.gad");
  RuleInstanceSpec spec;
  spec.rule = "classical-impI";
  spec.cases = 30;
  spec.seed = 5;
  std::string a = CheckRule(defs, spec).Serialize();
  std::string b = CheckRule(defs, spec).Serialize();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\nsummary: "), std::string::npos);
  EXPECT_NE(a.find("counterexample: case="), std::string::npos);
  // A later slice of cases reproduces the same individual cases.
  spec.first_case = 10;
  spec.cases = 5;
  HarnessReport tail = CheckRule(defs, spec);
  EXPECT_EQ(tail.rules[0].cases, 5u);
}

TEST(Harness, UnknownRule) {
  DefinitionList defs = Corpus("arith.gad");
  RuleInstanceSpec spec;
  spec.rule = "noSuchRule";
  EXPECT_THROW(CheckRule(defs, spec), Error);
}

TEST(Harness, AsymmetricEquality) {
  DefinitionList defs = Corpus("arith.gad");
  for (const char* rule : {"H", "=S", "=E", "defIE.fwd", "?I1", "Ind"}) {
    RuleInstanceSpec spec;
    spec.rule = rule;
    spec.cases = 30;
    spec.equality = EqualitySemantics::kAsymmetric;
    HarnessReport r = CheckRule(defs, spec);
    EXPECT_TRUE(r.passed()) << r.Serialize();
  }
}

TEST(Determinism, FuelMonotone) {
  DefinitionList defs = Corpus("arith.gad");
  DeterminismReport r = CheckDeterminism(defs, 100, 3, 10000, 4);
  EXPECT_EQ(r.terms, 100u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_GT(r.values, 0u);
}

TEST(Search, FindsShallowProofs) {
  DefinitionList defs = Corpus("paradox.gad");
  Judgment goal({}, BoolOf(T("0 = 0", defs)));
  SearchStats stats;
  auto p = BoundedSearch(defs, goal, 3, SearchUniverse(defs, goal), &stats);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->claim(), goal);
  EXPECT_NO_THROW(CheckProof(defs, *p));
  Judgment liar({}, BoolOf(T("liar", defs)));
  EXPECT_FALSE(BoundedSearch(defs, liar, 2, SearchUniverse(defs, liar)));
}

TEST(Paradox, LiarReport) {
  DefinitionList defs = Corpus("paradox.gad");
  ParadoxCase c{"liar", T("liar", defs), {100, 1000}};
  auto rs = ParadoxReport(defs, {c}, 2);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_TRUE(rs[0].passed());
  EXPECT_EQ(rs[0].certify, "not-value");
  EXPECT_FALSE(rs[0].bool_derived);
  for (const auto& [f, o] : rs[0].outcomes) {
    EXPECT_EQ(o, EvalOutcome(OutOfFuel{})) << f;
  }
  EXPECT_NE(Serialize(rs, defs).find("summary: cases=1 verdict=pass"),
            std::string::npos);
  EXPECT_EQ(StandardParadoxes(defs).size(), 7u);
}

}  // namespace
}  // namespace ga
