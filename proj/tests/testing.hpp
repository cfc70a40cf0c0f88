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

// Shared fixtures for the unit tests.

#ifndef GA_TESTS_TESTING_HPP_
#define GA_TESTS_TESTING_HPP_

#include <optional>
#include <random>
#include <string>

#include "ga/definitions.hpp"
#include "ga/derivation.hpp"
#include "ga/eval.hpp"
#include "ga/syntax.hpp"
#include "ga/term.hpp"
#include "ga/workspace.hpp"

namespace ga::testing {

inline DefinitionList Corpus(const std::string& file) {
  DefinitionList defs;
  LoadDefinitionFile(CorpusDir() / file, defs);
  return defs;
}

inline Term T(const std::string& text, const DefinitionList& defs) {
  return ParseTerm(text, &defs);
}

// Random closed terms over 0, S, P, ~, \/, =, ?: and the arithmetic
// definitions, with a reference value computed on machine integers.
// A nullopt reference means "no value" (stuck on a non-boolean).
class ClosedTerms {
 public:
  ClosedTerms(const DefinitionList& defs, std::uint64_t seed)
      : rng_(seed) {
    add_ = defs.Find("add");
    mult_ = defs.Find("mult");
    gt_ = defs.Find("gt");
  }

  struct Sample {
    Term term;
    std::optional<ga::Nat> value;
  };

  Sample Number(int depth) {
    if (depth <= 0 || Pick(4) == 0) {
      ga::Nat n = Pick(4);
      return {Numeral(n), n};
    }
    switch (Pick(add_ ? 6 : 4)) {
      case 0: {
        Sample a = Number(depth - 1);
        return {Term::Succ(a.term), Map(a.value, [](ga::Nat x) { return x + 1; })};
      }
      case 1: {
        Sample a = Number(depth - 1);
        return {Term::Pred(a.term),
                Map(a.value, [](ga::Nat x) { return x == 0 ? 0 : x - 1; })};
      }
      case 2: {
        Sample c = Formula(depth - 1);
        Sample a = Number(depth - 1);
        Sample b = Number(depth - 1);
        std::optional<ga::Nat> v;
        if (c.value) v = *c.value == 1 ? a.value : b.value;
        // Only the taken branch is evaluated.
        return {Term::Cond(c.term, a.term, b.term), v};
      }
      case 3: {
        Sample a = Number(depth - 1);
        return {Term::Succ(Term::Succ(a.term)),
                Map(a.value, [](ga::Nat x) { return x + 2; })};
      }
      case 4: {
        Sample a = Number(depth - 1);
        Sample b = Number(depth - 1);
        std::optional<ga::Nat> v;
        if (a.value && b.value) v = *a.value + *b.value;
        return {Term::Apply(*add_, {a.term, b.term}), v};
      }
      default: {
        Sample a = Number(0);
        Sample b = Number(0);
        std::optional<ga::Nat> v;
        if (a.value && b.value) v = *a.value * *b.value;
        return {Term::Apply(*mult_, {a.term, b.term}), v};
      }
    }
  }

  Sample Formula(int depth) {
    if (depth <= 0 || Pick(4) == 0) {
      Sample a = Number(0);
      Sample b = Number(0);
      return {Term::Eq(a.term, b.term), Equal(a.value, b.value)};
    }
    switch (Pick(gt_ ? 4 : 3)) {
      case 0: {
        Sample p = Formula(depth - 1);
        return {Term::Neg(p.term), Map(p.value, [](ga::Nat x) { return 1 - x; })};
      }
      case 1: {
        Sample p = Formula(depth - 1);
        Sample q = Formula(depth - 1);
        std::optional<ga::Nat> v;
        if ((p.value && *p.value == 1) || (q.value && *q.value == 1)) {
          v = 1;
        } else if (p.value && q.value) {
          v = 0;
        }
        return {Term::Or(p.term, q.term), v};
      }
      case 2: {
        Sample a = Number(depth - 1);
        Sample b = Number(depth - 1);
        return {Term::Eq(a.term, b.term), Equal(a.value, b.value)};
      }
      default: {
        Sample a = Number(0);
        Sample b = Number(0);
        std::optional<ga::Nat> v;
        if (a.value && b.value) v = *a.value > *b.value ? 1 : 0;
        return {Term::Apply(*gt_, {a.term, b.term}), v};
      }
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  ga::Nat Pick(ga::Nat n) {
    return std::uniform_int_distribution<ga::Nat>(0, n - 1)(rng_);
  }
  template <class F>
  static std::optional<ga::Nat> Map(std::optional<ga::Nat> v, F f) {
    if (!v) return std::nullopt;
    return f(*v);
  }
  static std::optional<ga::Nat> Equal(std::optional<ga::Nat> a,
                                      std::optional<ga::Nat> b) {
    if (!a || !b) return std::nullopt;
    return *a == *b ? 1 : 0;
  }

  std::mt19937_64 rng_;
  std::optional<DefIndex> add_, mult_, gt_;
};

// A random small derivation over atoms like v1 = 0 and v0 = v2. Terms stay
// shallow, so the codes stay small enough to round-trip in bulk.
inline Proof RandomProof(const DefinitionList& defs, std::mt19937_64& rng) {
  auto pick = [&](std::uint64_t n) { return rng() % n; };
  auto atom = [&]() -> Term {
    Term a = Term::Var(static_cast<VarIndex>(pick(3)));
    Term b = pick(2) ? Term::Zero() : Term::Var(static_cast<VarIndex>(pick(3)));
    return Term::Eq(a, b);
  };
  auto ctx = [&]() {
    std::vector<Term> g;
    for (std::uint64_t k = pick(3); k > 0; --k) g.push_back(atom());
    return CanonicalHyps(g);
  };
  Derivation d(defs);
  std::vector<Line> lines;
  lines.push_back(pick(2) ? d.ZeroI(ctx()) : d.Hyp(atom(), ctx()));
  for (std::uint64_t n = 1 + pick(7); n > 0; --n) {
    Line l = lines[pick(lines.size())];
    const Term c = d.concl(l);
    int depth = 0;
    for (Term t = c; t.arity() > 0; t = t.child(0)) ++depth;
    switch (pick(6)) {
      case 0:
        lines.push_back(d.Weaken(l, atom()));
        break;
      case 1:
        if (c.is(Kind::kEq)) lines.push_back(d.Rule(RuleId::kEqSym, {l}));
        break;
      case 2:
        if (c.is(Kind::kEq) && depth < 3) {
          lines.push_back(d.Rule(RuleId::kSuccEqI, {l}));
        }
        break;
      case 3:
        if (depth < 3) lines.push_back(d.Rule(RuleId::kNegNegI, {l}));
        break;
      case 4:
        if (depth < 3) lines.push_back(d.RuleT(RuleId::kOrI1, atom(), {l}));
        break;
      default:
        lines.push_back(pick(2) ? d.ZeroI(ctx()) : d.Hyp(atom(), ctx()));
        break;
    }
  }
  return d.Export(lines.back());
}

}  // namespace ga::testing

#endif  // GA_TESTS_TESTING_HPP_
