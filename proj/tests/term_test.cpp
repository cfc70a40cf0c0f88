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

#include "ga/term.hpp"

#include <gtest/gtest.h>

#include "ga/errors.hpp"
#include "testing.hpp"

namespace ga {
namespace {

Term V(VarIndex i) { return Term::Var(i); }
Term Z() { return Term::Zero(); }

TEST(Shorthands, Expand) {
  EXPECT_EQ(True(), Term::Eq(Z(), Z()));
  EXPECT_EQ(False(), Term::Eq(Z(), Term::Succ(Z())));
  EXPECT_EQ(NatOf(V(0)), Term::Eq(V(0), V(0)));
  Term p = Term::Eq(V(0), Z());
  EXPECT_EQ(BoolOf(p), Term::Or(p, Term::Neg(p)));
  EXPECT_EQ(Implies(p, True()), Term::Or(Term::Neg(p), True()));
}

TEST(Numerals, RoundTrip) {
  for (Nat n : {0, 1, 2, 17, 300}) {
    Term t = Numeral(n);
    ASSERT_TRUE(NumeralValue(t));
    EXPECT_EQ(*NumeralValue(t), n);
    EXPECT_EQ(t.size(), n + 1);
  }
  EXPECT_FALSE(NumeralValue(Term::Pred(Z())));
  EXPECT_FALSE(NumeralValue(Term::Succ(V(0))));
}

TEST(FreeVariables, BindersHide) {
  Term t = Term::Forall(1, Term::Or(Term::Eq(V(0), V(1)), Term::Eq(V(2), Z())));
  EXPECT_EQ(FreeVars(t), (std::set<VarIndex>{0, 2}));
  EXPECT_TRUE(OccursFree(t, 0));
  EXPECT_FALSE(OccursFree(t, 1));
  EXPECT_TRUE(Closed(Term::Exists(0, Term::Eq(V(0), V(0)))));
  EXPECT_TRUE(HasExactlyFree(Term::Eq(V(3), Z()), 3));
  EXPECT_FALSE(HasExactlyFree(Term::Eq(V(3), V(1)), 3));
  EXPECT_EQ(MaxVar(t), std::optional<VarIndex>(2));
}

TEST(Substitution, ReplacesFreeOccurrencesOnly) {
  Term t = Term::Or(Term::Eq(V(0), Z()), Term::Forall(0, Term::Eq(V(0), Z())));
  Term s = Subst(t, 0, Numeral(2));
  EXPECT_EQ(s.child(0), Term::Eq(Numeral(2), Z()));
  EXPECT_EQ(s.child(1), t.child(1));
}

TEST(Substitution, AvoidsCapture) {
  // (forall v1. v0 = v1)[v0 := v1]
  Term t = Term::Forall(1, Term::Eq(V(0), V(1)));
  EXPECT_THROW(Subst(t, 0, V(1)), CaptureError);
  // Renaming the binder first makes room.
  Term s = Subst(RenameBound(t, 2), 0, V(1));
  ASSERT_TRUE(s.is(Kind::kForall));
  VarIndex bound = s.index();
  EXPECT_NE(bound, 1u);
  EXPECT_EQ(s.child(0), Term::Eq(V(1), V(bound)));
  EXPECT_EQ(FreeVars(s), (std::set<VarIndex>{1}));
}

TEST(Substitution, Simultaneous) {
  Term t = Term::Eq(V(0), V(1));
  Term s = SubstMany(t, {{0, V(1)}, {1, V(0)}});
  EXPECT_EQ(s, Term::Eq(V(1), V(0)));
}

TEST(Substitution, RenameBoundKeepsMeaning) {
  Term t = Term::Exists(0, Term::Eq(V(0), V(1)));
  Term r = RenameBound(t, 5);
  EXPECT_EQ(r, Term::Exists(5, Term::Eq(V(5), V(1))));
}

TEST(Substitution, FreshVarAvoidsEverything) {
  Term a = Term::Forall(4, Term::Eq(V(0), V(4)));
  Term b = V(2);
  VarIndex f = FreshVar({&a, &b});
  EXPECT_NE(f, 0u);
  EXPECT_NE(f, 2u);
  EXPECT_NE(f, 4u);
}

TEST(Paths, ReplaceAndLookup) {
  Term t = Term::Or(Term::Eq(V(0), Z()), Term::Neg(Term::Eq(Z(), V(0))));
  auto paths = FindAll(t, V(0));
  ASSERT_EQ(paths.size(), 2u);
  for (const Path& p : paths) EXPECT_EQ(SubtermAt(t, p), V(0));
  Term r = ReplaceAt(t, paths[1], Numeral(3));
  EXPECT_EQ(SubtermAt(r, paths[1]), Numeral(3));
  EXPECT_EQ(SubtermAt(r, paths[0]), V(0));
  EXPECT_THROW(SubtermAt(t, Path{7}), PathError);
}

TEST(Paths, BinderDetection) {
  Term t = Term::Or(Term::Eq(V(0), Z()), Term::Forall(1, Term::Eq(V(0), V(1))));
  EXPECT_FALSE(PathUnderBinder(t, Path{0, 0}));
  EXPECT_TRUE(PathUnderBinder(t, Path{1, 0, 0}));
}

TEST(Ordering, AgreesWithEquality) {
  testing::ClosedTerms gen(testing::Corpus("arith.gad"), 3);
  std::vector<Term> ts;
  for (int i = 0; i < 200; ++i) ts.push_back(gen.Formula(3).term);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Term& a = ts[i];
    const Term& b = ts[i + 1];
    EXPECT_EQ(a == b, (a <=> b) == 0);
    EXPECT_EQ((a <=> b) < 0, (b <=> a) > 0);
    if (a == b) EXPECT_EQ(a.hash(), b.hash());
  }
}

// Substituting a numeral and evaluating agrees with evaluating under the
// assignment, for terms with several occurrences of the variable.
TEST(Substitution, CommutesWithEvaluation) {
  DefinitionList defs = testing::Corpus("arith.gad");
  testing::ClosedTerms gen(defs, 11);
  std::mt19937_64& rng = gen.rng();
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Term t = gen.Formula(3).term;
    auto holes = FindAll(t, Z());
    if (holes.empty()) continue;
    for (const Path& p : holes) {
      if (rng() % 2) t = ReplaceAt(t, p, V(0));
    }
    Nat n = rng() % 5;
    EvalOutcome direct = Eval(defs, {}, Subst(t, 0, Numeral(n)), 100000);
    EvalOutcome assigned = Eval(defs, {{0, n}}, t, 100000);
    EXPECT_EQ(direct, assigned) << Print(t, &defs);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

}  // namespace
}  // namespace ga
