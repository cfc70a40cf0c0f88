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

#include "ga/eval.hpp"

#include <gtest/gtest.h>

#include "testing.hpp"

namespace ga {
namespace {

using testing::Corpus;
using testing::T;

constexpr Fuel kBig = 1000000;

EvalOutcome Reduce(const DefinitionList& defs, const std::string& text,
                Fuel fuel = kBig, Assignment a = {}) {
  return Eval(defs, a, T(text, defs), fuel);
}

TEST(Eval, Basics) {
  DefinitionList defs;
  EXPECT_EQ(Reduce(defs, "P(0)"), EvalOutcome(Value{0}));
  EXPECT_EQ(Reduce(defs, "S(S(0))"), EvalOutcome(Value{2}));
  EXPECT_EQ(Reduce(defs, "P(3)"), EvalOutcome(Value{2}));
  EXPECT_EQ(Reduce(defs, "0 = 0"), EvalOutcome(Value{1}));
  EXPECT_EQ(Reduce(defs, "0 = 1"), EvalOutcome(Value{0}));
  EXPECT_EQ(Reduce(defs, "~(0 = 1)"), EvalOutcome(Value{1}));
  EXPECT_EQ(Reduce(defs, "0 = 1 \\/ 2 = 2"), EvalOutcome(Value{1}));
  EXPECT_EQ(Reduce(defs, "1 = 1 ? 5 : 6"), EvalOutcome(Value{5}));
  EXPECT_EQ(Reduce(defs, "1 = 2 ? 5 : 6"), EvalOutcome(Value{6}));
}

TEST(Eval, StuckReasons) {
  DefinitionList defs;
  EXPECT_EQ(Reduce(defs, "v0 = 0"), EvalOutcome(Stuck{StuckReason::kUnassignedVariable}));
  EXPECT_EQ(Reduce(defs, "~2"), EvalOutcome(Stuck{StuckReason::kNonBoolean}));
  EXPECT_EQ(Eval(defs, {}, Term::Apply(9, {}), 100),
            EvalOutcome(Stuck{StuckReason::kUndefinedDefinition}));
  EXPECT_EQ(Reduce(defs, "v0 = 0", kBig, {{0, 0}}), EvalOutcome(Value{1}));
}

TEST(Eval, Arithmetic) {
  DefinitionList defs = Corpus("arith.gad");
  EXPECT_EQ(Reduce(defs, "add(2, 3)", 1000), EvalOutcome(Value{5}));
  for (Nat x = 0; x <= 6; ++x) {
    for (Nat y = 0; y <= 6; ++y) {
      Assignment a{{0, x}, {1, y}};
      EXPECT_EQ(Reduce(defs, "add(v0, v1)", kBig, a), EvalOutcome(Value{x + y}));
      EXPECT_EQ(Reduce(defs, "sub(v0, v1)", kBig, a),
                EvalOutcome(Value{x > y ? x - y : 0}));
      EXPECT_EQ(Reduce(defs, "mult(v0, v1)", kBig, a), EvalOutcome(Value{x * y}));
      EXPECT_EQ(Reduce(defs, "gt(v0, v1)", kBig, a),
                EvalOutcome(Value{x > y ? 1u : 0u}));
    }
    EXPECT_EQ(Reduce(defs, "even(v0)", kBig, {{0, x}}),
              EvalOutcome(Value{x % 2 == 0 ? 1u : 0u}));
  }
}

TEST(Eval, ParadoxesDoNotReduce) {
  DefinitionList defs = Corpus("paradox.gad");
  for (const char* t : {"liar", "curry", "truthteller"}) {
    EXPECT_EQ(Reduce(defs, t, 100000), EvalOutcome(OutOfFuel{})) << t;
  }
  // The disjunction does not need its divergent right side.
  EXPECT_EQ(Reduce(defs, "0 = 0 \\/ liar", 1000), EvalOutcome(Value{1}));
  // Call-by-value: an argument that diverges makes the call diverge.
  DefinitionList k;
  LoadDefinitions("loop := loop\nkonst(x) := x = x ? 0 : 0", k);
  EXPECT_EQ(Reduce(k, "konst(loop)", 10000), EvalOutcome(OutOfFuel{}));
}

TEST(Eval, OutcomeStrings) {
  for (EvalOutcome o : {EvalOutcome(Value{4}), EvalOutcome(OutOfFuel{}),
                        EvalOutcome(Stuck{StuckReason::kNonBoolean})}) {
    auto back = ParseOutcome(ToString(o));
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, o);
  }
  EXPECT_EQ(ToString(Value{5}), "value:5");
  EXPECT_EQ(ToString(OutOfFuel{}), "out-of-fuel");
}

// Values agree with a machine-integer reference, formulas are 0 or 1, and
// every value persists with the same cost at larger fuel.
TEST(Eval, ReferenceAndMonotonicity) {
  DefinitionList defs = Corpus("arith.gad");
  testing::ClosedTerms gen(defs, 2024);
  for (int i = 0; i < 2000; ++i) {
    bool formula = i % 2 == 0;
    auto s = formula ? gen.Formula(4) : gen.Number(4);
    EvalResult r = EvalDetailed(defs, {}, s.term, kBig);
    if (s.value) {
      ASSERT_EQ(r.outcome, EvalOutcome(Value{*s.value})) << Print(s.term, &defs);
    }
    if (formula && IsValue(r.outcome)) EXPECT_LE(*ValueOf(r.outcome), 1u);
    if (!IsValue(r.outcome)) continue;
    EXPECT_EQ(EvalDetailed(defs, {}, s.term, r.used).outcome, r.outcome);
    if (r.used > 0) {
      EXPECT_FALSE(IsValue(EvalDetailed(defs, {}, s.term, r.used - 1).outcome));
    }
    EvalResult more = EvalDetailed(defs, {}, s.term, r.used * 3 + 7);
    EXPECT_EQ(more.outcome, r.outcome);
    EXPECT_EQ(more.used, r.used);
  }
}

TEST(Eval, AsymmetricEqualityIsPartial) {
  DefinitionList defs;
  EvalOptions asym{EqualitySemantics::kAsymmetric};
  EXPECT_EQ(EvalDetailed(defs, {}, ParseTerm("1 = 0"), 100, asym).outcome,
            EvalOutcome(Value{0}));
  EXPECT_FALSE(IsValue(EvalDetailed(defs, {}, ParseTerm("0 = 1"), 100, asym).outcome));
  EXPECT_EQ(EvalDetailed(defs, {}, ParseTerm("2 = 2"), 100, asym).outcome,
            EvalOutcome(Value{1}));
}

TEST(Eval, DeepDivergenceDoesNotOverflow) {
  DefinitionList defs;
  LoadDefinitions("up(x) := S(up(x))", defs);
  EXPECT_EQ(Reduce(defs, "up(0)", 2000000), EvalOutcome(OutOfFuel{}));
}

}  // namespace
}  // namespace ga
