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

// Truth preservation at desk scale.
//
// A judgment G |- c holds at (domain m, fuel f) when every assignment of
// its free variables to 0..m that makes each hypothesis reduce to 1 within
// f makes c reduce to 1 within f. Quantifiers are evaluated by elaboration.
// A rule instance is a counterexample when all its premises hold at fuel f
// and its conclusion fails with hypotheses at f and conclusion at 10 f.

#ifndef GA_HARNESS_HPP_
#define GA_HARNESS_HPP_

#include <string>
#include <vector>

#include "ga/eval.hpp"
#include "ga/kernel.hpp"

namespace ga {

struct RuleInstanceSpec {
  // A rule name, a canary name, or "all".
  std::string rule = "all";
  std::size_t cases = 1000;
  std::size_t first_case = 0;
  Nat domain = 5;
  Fuel fuel = 1000;
  std::uint64_t seed = 1;
  int depth = 3;
  std::size_t max_hyps = 2;
  EqualitySemantics equality = EqualitySemantics::kStandard;
};

struct Counterexample {
  std::size_t case_index = 0;
  std::string instance;
  std::vector<std::string> premises;
  std::string conclusion;
  Assignment assignment;
  std::string outcome;
};

struct RuleReport {
  std::string rule;
  bool canary = false;
  std::size_t cases = 0;
  std::size_t generated = 0;
  std::size_t premises_hold = 0;
  // Premises hold and some assignment satisfies the conclusion's hypotheses.
  std::size_t firing = 0;
  std::vector<Counterexample> counterexamples;

  // Rules: every case generated and no counterexample. Canaries: at least
  // one counterexample.
  bool passed() const;
};

struct HarnessReport {
  RuleInstanceSpec spec;
  std::vector<RuleReport> rules;

  bool passed() const;
  // key: value lines, one block per rule, then a summary line.
  std::string Serialize() const;
};

// The broken rules kept to show the harness can fail: classical
// implication introduction (no bool premise) and defIE.fwd without its
// argument premises.
const std::vector<std::string>& CanaryNames();
// Every primitive rule, then the canaries.
std::vector<std::string> HarnessRuleNames();
bool HasGenerator(RuleId r);

// Throws Error for an unknown rule name.
HarnessReport CheckRule(const DefinitionList& defs,
                        const RuleInstanceSpec& spec);

// Holds as above, for a single judgment; failing assignment in *cex.
bool JudgmentHolds(const DefinitionList& defs, const Judgment& j, Nat domain,
                   Fuel hyp_fuel, Fuel concl_fuel,
                   EvalOptions opts = {}, Assignment* cex = nullptr);

struct DeterminismReport {
  std::size_t terms = 0;
  std::size_t values = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;
};

// Random closed terms, each evaluated along a fuel schedule and twice at
// the largest fuel. A violation is a value that changes or disappears at a
// larger fuel, a Stuck that turns into anything else, a formula whose value
// is not 0 or 1, or two runs that differ.
DeterminismReport CheckDeterminism(const DefinitionList& defs,
                                   std::size_t cases, int depth, Fuel fuel,
                                   std::uint64_t seed);

struct ParadoxCase {
  std::string name;
  Term target;
  std::vector<Fuel> fuels;
};

struct ParadoxResult {
  std::string name;
  std::vector<std::pair<Fuel, EvalOutcome>> outcomes;
  // What eval_certify reported: not-value, or the certificate's judgment.
  std::string certify;
  bool bool_derived = false;
  std::size_t goals = 0;

  bool passed() const;
};

// liar, curry, truthteller, etruthteller and yablo(0), yablo(1), yablo(2),
// for those names defs has.
std::vector<ParadoxCase> StandardParadoxes(const DefinitionList& defs,
                                           Fuel max_fuel = 100000);
std::vector<ParadoxResult> ParadoxReport(const DefinitionList& defs,
                                         const std::vector<ParadoxCase>& cases,
                                         int search_depth = 3);
std::string Serialize(const std::vector<ParadoxResult>& results,
                      const DefinitionList& defs);

}  // namespace ga

#endif  // GA_HARNESS_HPP_
