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

#include "ga/certify.hpp"

#include <gtest/gtest.h>

#include "ga/errors.hpp"
#include "testing.hpp"

namespace ga {
namespace {

using testing::Corpus;
using testing::T;

TEST(Certify, ValueOfArithmetic) {
  DefinitionList defs = Corpus("arith.gad");
  Proof p = EvalCertify(defs, T("add(2, 3)", defs), 10000);
  EXPECT_EQ(p.claim(), Judgment({}, T("add(2, 3) = 5", defs)));
  EXPECT_NO_THROW(CheckProof(defs, p));
}

TEST(Certify, TruthAndFalsity) {
  DefinitionList defs = Corpus("arith.gad");
  Proof t = EvalCertify(defs, T("gt(3, 1)", defs), 10000, CertifyMode::kTruth);
  EXPECT_EQ(t.claim().concl(), T("gt(3, 1)", defs));
  Proof f = EvalCertify(defs, T("2 = 0", defs), 10000, CertifyMode::kTruth);
  EXPECT_EQ(f.claim().concl(), T("~(2 = 0)", defs));
  EXPECT_NO_THROW(CheckProof(defs, t));
  EXPECT_NO_THROW(CheckProof(defs, f));
}

TEST(Certify, NotValueAndUncertifiable) {
  DefinitionList defs = Corpus("paradox.gad");
  EXPECT_THROW(EvalCertify(defs, T("liar", defs), 10000, CertifyMode::kTruth),
               NotValue);
  EXPECT_THROW(EvalCertify(defs, T("v0", defs), 100), NotValue);
  // No rule mirrors P(0) = 0.
  EXPECT_THROW(EvalCertify(defs, T("P(0)", defs), 100), Uncertifiable);
  // A smaller left side cannot be refuted.
  EXPECT_THROW(EvalCertify(defs, T("0 = 1", defs), 100, CertifyMode::kTruth),
               Uncertifiable);
  EXPECT_NO_THROW(EvalCertify(defs, T("1 = 0", defs), 100, CertifyMode::kTruth));
}

// Every certificate replays in the kernel and states the evaluator's value.
TEST(Certify, AgreesWithEvaluator) {
  DefinitionList defs = Corpus("arith.gad");
  testing::ClosedTerms gen(defs, 99);
  int certified = 0;
  for (int i = 0; i < 300; ++i) {
    bool formula = i % 2 == 1;
    Term t = formula ? gen.Formula(3).term : gen.Number(3).term;
    EvalOutcome o = Eval(defs, {}, t, 100000);
    try {
      Proof p = EvalCertify(defs, t, 100000,
                            formula ? CertifyMode::kTruth : CertifyMode::kValue);
      ASSERT_NO_THROW(CheckProof(defs, p)) << Print(t, &defs);
      ASSERT_TRUE(IsValue(o));
      EXPECT_TRUE(p.claim().hyps().empty());
      if (formula) {
        Term expect = *ValueOf(o) == 1 ? t : Term::Neg(t);
        EXPECT_EQ(p.claim().concl(), expect);
      } else {
        EXPECT_EQ(p.claim().concl(), Term::Eq(t, Numeral(*ValueOf(o))));
      }
      ++certified;
    } catch (const Uncertifiable&) {
    } catch (const NotValue&) {
      EXPECT_FALSE(IsValue(o));
    }
  }
  EXPECT_GT(certified, 100);
}

}  // namespace
}  // namespace ga
