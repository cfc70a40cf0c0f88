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

// The derived-rule and typing table, shared by the unit tests and the
// acceptance run.

#ifndef GA_TESTS_DERIVED_TABLE_HPP_
#define GA_TESTS_DERIVED_TABLE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ga/derivation.hpp"
#include "ga/errors.hpp"
#include "ga/syntax.hpp"
#include "ga/tactics.hpp"

namespace ga::testing {

// Schematic instances: premises are taken as hypotheses, so the derivation
// works for arbitrary p, q, a, b, c standing for the atoms below.
struct Case {
  std::string rule;
  // Premises as (extra hypotheses, conclusion).
  std::vector<std::pair<std::vector<std::string>, std::string>> premises;
  std::string conclusion;
};

inline const char* kP = "(v0 = v1)";
inline const char* kQ = "(v2 = 0)";

inline std::string Sub(std::string s) {
  auto rep = [&](const std::string& from, const std::string& to) {
    for (std::size_t i = s.find(from); i != std::string::npos;
         i = s.find(from, i + to.size())) {
      s.replace(i, from.size(), to);
    }
  };
  rep("p", kP);
  rep("q", kQ);
  rep("A", "v3");
  rep("B", "v4");
  rep("C", "v5");
  return s;
}

inline std::vector<Case> Table() {
  using H = std::vector<std::string>;
  return {
      {"andI", {{{}, "p"}, {{}, "q"}}, "p /\\ q"},
      {"andE1", {{{}, "p /\\ q"}}, "p"},
      {"andE2", {{{}, "p /\\ q"}}, "q"},
      {"impI", {{{}, "bool(p)"}, {H{"p"}, "q"}}, "p -> q"},
      {"impE", {{{}, "p -> q"}, {{}, "p"}}, "q"},
      {"iffI",
       {{{}, "bool(p)"}, {{}, "bool(q)"}, {H{"p"}, "q"}, {H{"q"}, "p"}},
       "p <-> q"},
      {"iffE1", {{{}, "p <-> q"}, {{}, "p"}}, "q"},
      {"iffE2", {{{}, "p <-> q"}, {{}, "q"}}, "p"},
      {"eqT", {{{}, "A = B"}, {{}, "B = C"}}, "A = C"},
      {"negTI", {{{}, "bool(p)"}}, "bool(~p)"},
      {"negTE", {{{}, "bool(~p)"}}, "bool(p)"},
      {"orTI", {{{}, "bool(p)"}, {{}, "bool(q)"}}, "bool(p \\/ q)"},
      {"orTE", {{{}, "bool(p \\/ q)"}}, "bool(p) \\/ bool(q)"},
      {"andTI", {{{}, "bool(p)"}, {{}, "bool(q)"}}, "bool(p /\\ q)"},
      {"andTE", {{{}, "bool(p /\\ q)"}}, "bool(p) \\/ bool(q)"},
      {"impTI", {{{}, "bool(p)"}, {{}, "bool(q)"}}, "bool(p -> q)"},
      {"impTE", {{{}, "bool(p -> q)"}}, "bool(p) \\/ bool(q)"},
      {"iffTI", {{{}, "bool(p)"}, {{}, "bool(q)"}}, "bool(p <-> q)"},
      {"iffTE1", {{{}, "bool(p <-> q)"}}, "bool(p)"},
      {"iffTE2", {{{}, "bool(p <-> q)"}}, "bool(q)"},
      {"STI", {{{}, "nat(A)"}}, "nat(S(A))"},
      {"STE", {{{}, "nat(S(A))"}}, "nat(A)"},
      {"PTI", {{{}, "nat(A)"}}, "nat(P(A))"},
      {"PTE", {{{}, "nat(P(A))"}}, "nat(A)"},
      {"condTI", {{{}, "bool(p)"}, {{}, "nat(A)"}, {{}, "nat(B)"}},
       "nat(p ? A : B)"},
      // The typing row for equality, at the instances the rules reach.
      {"eqTI", {{{}, "nat(A)"}, {{}, "nat(0)"}}, "bool(A = 0)"},
      {"eqTI", {{{}, "nat(S(A))"}, {{}, "nat(S(0))"}}, "bool(S(A) = S(0))"},
      {"eqTI", {{{}, "nat(A)"}, {{}, "nat(A)"}}, "bool(A = A)"},
  };
}

// Replays one row: builds the premises, applies the tactic, and re-checks
// the exported primitive proof. Returns a description of the failure.
inline std::string RunCase(const Case& c, Term* concl = nullptr) {
  DefinitionList defs;
  auto T = [&](const std::string& s) { return ParseTerm(Sub(s), &defs); };
  // Background: every premise conclusion, so each premise is an instance
  // of the hypothesis rule.
  std::vector<Term> g;
  for (const auto& [extra, concl] : c.premises) g.push_back(T(concl));
  g = CanonicalHyps(g);
  try {
    Derivation d(defs);
    std::vector<Line> prem;
    for (const auto& [extra, pc] : c.premises) {
      std::vector<Term> ctx = g;
      for (const auto& e : extra) ctx = AddHyps(ctx, {T(e)});
      Term goal = T(pc);
      std::vector<Term> rest;
      for (const Term& h : ctx) {
        if (!(h == goal)) rest.push_back(h);
      }
      prem.push_back(d.Hyp(goal, rest));
    }
    Line out = Derived(d, c.rule, prem);
    if (concl) *concl = d.concl(out);
    if (!(d.concl(out) == T(c.conclusion))) return "wrong conclusion";
    Proof proof = d.Export(out);
    std::vector<Theorem> checked = CheckProof(defs, proof);
    if (!(checked.back().judgment() == d.judgment(out))) return "replay differs";
    for (const ProofStep& s : proof.steps) {
      if (static_cast<std::size_t>(s.rule.rule) >= kRuleCount) {
        return "non-primitive step";
      }
    }
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace ga::testing

#endif  // GA_TESTS_DERIVED_TABLE_HPP_
