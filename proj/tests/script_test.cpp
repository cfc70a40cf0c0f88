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

#include "ga/script.hpp"

#include <gtest/gtest.h>

#include "ga/errors.hpp"
#include "ga/primrec.hpp"
#include "testing.hpp"

namespace ga {
namespace {

using testing::Corpus;

constexpr const char* kSmall = R"(vars x
# P(S(x)) = x for natural x
theorem pred_succ : x = x |- P(S(x)) = x
  h: H {x = x}
  s: P=I2 from h
qed

theorem two : |- ~(S(S(0)) = 0)
  z: 0I
  n: S!=0I from z   # S(0) = S(0) needs more
qed
)";

TEST(Script, ParsesAndReplays) {
  DefinitionList defs;
  auto ts = ParseScript(kSmall, defs);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].name, "pred_succ");
  EXPECT_EQ(ts[0].steps.size(), 2u);
  Theorem t = CheckScript(defs, ts[0]);
  EXPECT_EQ(t.judgment(), Judgment({NatOf(Term::Var(0))},
                                   ParseTerm("P(S(v0)) = v0")));
  // The second claim does not follow from its steps.
  EXPECT_THROW(CheckScript(defs, ts[1]), ProofError);
}

TEST(Script, SyntaxErrorsHaveLines) {
  DefinitionList defs;
  try {
    ParseScript("theorem t : |- 0 = 0\n  a: 0I\n  b: NoSuchRule from a\nqed\n",
                defs);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(ParseScript("theorem t : |- 0 = 0\n  a: 0I from zz\nqed\n", defs),
               SyntaxError);
  EXPECT_THROW(ParseScript("theorem t : |- 0 = 0\n  a: 0I\n", defs),
               SyntaxError);
}

TEST(Script, PrintedProofsReplayIdentically) {
  DefinitionList defs = Corpus("arith.gad");
  for (const char* f : {"add", "sub", "mult", "even"}) {
    Proof p = PrimrecTerminationProof(defs, *defs.Find(f));
    std::string text = PrintScript(std::string(f) + "_total", p, defs);
    auto ts = ParseScript(text, defs);
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ScriptProof(defs, ts[0]), p) << f;
  }
}

TEST(Script, UnderClauseSetsBackground) {
  DefinitionList defs;
  auto ts = ParseScript(
      "theorem w : v0 = 1 |- 0 = 0\n"
      "  a: 0I under {v0 = 1}\n"
      "qed\n",
      defs);
  EXPECT_NO_THROW(CheckScript(defs, ts[0]));
  auto bad = ParseScript(
      "theorem w : v0 = 1 |- 0 = 0\n"
      "  a: 0I under\n"
      "qed\n",
      defs);
  EXPECT_THROW(CheckScript(defs, bad[0]), ProofError);
}

}  // namespace
}  // namespace ga
