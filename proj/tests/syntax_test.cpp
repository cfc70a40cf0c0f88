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

#include "ga/syntax.hpp"

#include <gtest/gtest.h>

#include "ga/errors.hpp"
#include "testing.hpp"

namespace ga {
namespace {

using testing::Corpus;

TEST(Parse, Atoms) {
  EXPECT_EQ(ParseTerm("0"), Term::Zero());
  EXPECT_EQ(ParseTerm("3"), Numeral(3));
  EXPECT_EQ(ParseTerm("v7"), Term::Var(7));
  EXPECT_EQ(ParseTerm("S(P(0))"), Term::Succ(Term::Pred(Term::Zero())));
  EXPECT_EQ(ParseTerm("true"), True());
  EXPECT_EQ(ParseTerm("false"), False());
}

TEST(Parse, Precedence) {
  Term a = ParseTerm("v0 = 0 \\/ ~(v1 = 0)");
  EXPECT_EQ(a, Term::Or(Term::Eq(Term::Var(0), Term::Zero()),
                        Term::Neg(Term::Eq(Term::Var(1), Term::Zero()))));
  // Prefix negation binds tightest.
  EXPECT_EQ(ParseTerm("~v1 = 0"),
            Term::Eq(Term::Neg(Term::Var(1)), Term::Zero()));
  Term b = ParseTerm("v0 = 0 -> v1 = 0");
  EXPECT_EQ(b, Implies(Term::Eq(Term::Var(0), Term::Zero()),
                       Term::Eq(Term::Var(1), Term::Zero())));
  Term c = ParseTerm("v0 = 0 ? 1 : 2");
  EXPECT_EQ(c, Term::Cond(Term::Eq(Term::Var(0), Term::Zero()), Numeral(1),
                          Numeral(2)));
}

TEST(Parse, Quantifiers) {
  ParseContext ctx;
  ctx.auto_vars = true;
  Term t = ParseTerm("forall x. exists y. x = y", ctx);
  ASSERT_TRUE(t.is(Kind::kForall));
  ASSERT_TRUE(t.child(0).is(Kind::kExists));
  EXPECT_TRUE(Closed(t));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    ParseTerm("S(0");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GE(e.column(), 4u);
  }
  EXPECT_THROW(ParseTerm("add(1, 2)"), SyntaxError);
  EXPECT_THROW(ParseTerm("v0 = "), SyntaxError);
  EXPECT_THROW(ParseTerm("99999999"), SyntaxError);
}

TEST(Print, ParsesBack) {
  DefinitionList defs = Corpus("arith.gad");
  testing::ClosedTerms gen(defs, 5);
  for (int i = 0; i < 500; ++i) {
    Term t = gen.Formula(4).term;
    EXPECT_EQ(ParseTerm(Print(t, &defs), &defs), t) << Print(t, &defs);
  }
  Term q = Term::Forall(2, Term::Exists(0, Term::Or(
      Term::Eq(Term::Var(0), Term::Var(2)), Term::Neg(Term::Var(1)))));
  EXPECT_EQ(ParseTerm(Print(q)), q);
}

TEST(Definitions, RecursionAndArity) {
  DefinitionList defs = Corpus("arith.gad");
  for (const char* name : {"add", "sub", "mult", "even", "gt"}) {
    EXPECT_TRUE(defs.Find(name)) << name;
  }
  EXPECT_EQ(defs.Arity(*defs.Find("add")), 2u);
  EXPECT_EQ(defs.Arity(*defs.Find("even")), 1u);
  // Indices follow load order.
  EXPECT_EQ(*defs.Find("add"), 0u);
  EXPECT_EQ(*defs.Find("gt"), 4u);
}

TEST(Definitions, MutualRecursionAndZeroArity) {
  DefinitionList defs;
  LoadDefinitions(
      "odd(n) := n = 0 ? 0 : ev(P(n))\n"
      "ev(n) := n = 0 ? 1 : odd(P(n))\n"
      "liar := ~liar\n",
      defs);
  EXPECT_EQ(defs.size(), 3u);
  EXPECT_EQ(*defs.at(2).body, Term::Neg(Term::Apply(2, {})));
}

TEST(Definitions, Errors) {
  DefinitionList defs;
  EXPECT_THROW(LoadDefinitions("f(x, x) := x", defs), SyntaxError);
  DefinitionList d2;
  EXPECT_THROW(LoadDefinitions("f := 0\nf := 1", d2), SyntaxError);
  DefinitionList d3;
  EXPECT_THROW(LoadDefinitions("f := g(0)", d3), SyntaxError);
  DefinitionList d4;
  EXPECT_THROW(LoadDefinitions("f(x) = x", d4), SyntaxError);
}

TEST(Definitions, IncludeLoadsOnce) {
  DefinitionList defs = Corpus("paradox.gad");
  EXPECT_TRUE(defs.Find("add"));
  EXPECT_TRUE(defs.Find("yablo"));
  std::set<std::filesystem::path> loaded;
  DefinitionList twice;
  LoadDefinitionFile(CorpusDir() / "arith.gad", twice, &loaded);
  LoadDefinitionFile(CorpusDir() / "paradox.gad", twice, &loaded);
  EXPECT_EQ(twice.size(), defs.size());
}

}  // namespace
}  // namespace ga
