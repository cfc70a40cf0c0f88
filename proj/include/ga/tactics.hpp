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

// Derived rules, each expanded into primitive kernel steps.

#ifndef GA_TACTICS_HPP_
#define GA_TACTICS_HPP_

#include <string>
#include <vector>

#include "ga/derivation.hpp"

namespace ga {

enum class ContradictionDir { kRefute, kProve };

// From G |- bool(p) and G,p |- q, G,p |- ~q conclude G |- ~p (refute), or
// from G,~p |- q, G,~p |- ~q conclude G |- p (prove).
Line Contradiction(Derivation& d, ContradictionDir dir, Line p_bool,
                   Line hyp_q, Line hyp_nq);
Theorem TacticContradiction(const DefinitionList& defs, ContradictionDir dir,
                            const Theorem& p_bool, const Theorem& hyp_q,
                            const Theorem& hyp_nq);

// Names accepted by Derived, with their premises:
//   andI [p, q]                 andE1, andE2 [p /\ q]
//   impI [bool(p), G,p |- q]    impE [p -> q, p]
//   iffI [bool(p), bool(q), G,p |- q, G,q |- p]
//   iffE1 [p <-> q, p]          iffE2 [p <-> q, q]
//   eqT [a = b, b = c]
//   negTI [bool(p)]             negTE [bool(~p)]
//   orTI, andTI, impTI, iffTI [bool(p), bool(q)]
//   orTE [bool(p \/ q)]  andTE [bool(p /\ q)]  impTE [bool(p -> q)]
//   iffTE1, iffTE2 [bool(p <-> q)]
//   STI [nat(a)]  STE [nat(S(a))]  PTI [nat(a)]  PTE [nat(P(a))]
//   eqTI [nat(a), nat(b)]       condTI [bool(c), nat(a), nat(b)]
const std::vector<std::string>& DerivedRuleNames();
Line Derived(Derivation& d, const std::string& name,
             const std::vector<Line>& premises);
Theorem TacticDerived(const DefinitionList& defs, const std::string& name,
                      const std::vector<Theorem>& premises);

// Case analysis: from G |- p \/ q and builders for each branch (given the
// branch context and the hypothesis line) conclude G |- r.
template <class Left, class Right>
Line Cases(Derivation& d, Line disj, Left left, Right right);

// Typing of a zero test, bool(a = 0), from nat(a), by induction.
Line ZeroTestBool(Derivation& d, Line a_nat);

// Fuel used when a typing tactic has to evaluate closed terms.
inline constexpr std::uint64_t kTacticFuel = 100000;

// -- implementation of the template -------------------------------------

template <class Left, class Right>
Line Cases(Derivation& d, Line disj, Left left, Right right) {
  const Term dj = d.concl(disj);
  if (!dj.is(Kind::kOr)) throw TacticError("case split needs a disjunction");
  Term p = dj.child(0), q = dj.child(1);
  std::vector<Term> gp = AddHyps(d.hyps(disj), {p});
  std::vector<Term> gq = AddHyps(d.hyps(disj), {q});
  Line a = left(gp, d.Hyp(p, gp));
  Line b = right(gq, d.Hyp(q, gq));
  return d.Rule(RuleId::kOrE1, {disj, a, b});
}

}  // namespace ga

#endif  // GA_TACTICS_HPP_
