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

// The trusted kernel. A Theorem can only be obtained from ApplyRule or
// CheckProof; everything else in the library builds on those two.

#ifndef GA_KERNEL_HPP_
#define GA_KERNEL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ga/definitions.hpp"
#include "ga/term.hpp"

namespace ga {

class Judgment {
 public:
  Judgment() = default;
  // Hypotheses are sorted and deduplicated.
  Judgment(std::vector<Term> hyps, Term concl);

  const std::vector<Term>& hyps() const { return hyps_; }
  const Term& concl() const { return concl_; }
  bool HasHyp(const Term& h) const;

  friend bool operator==(const Judgment&, const Judgment&) = default;

 private:
  std::vector<Term> hyps_;
  Term concl_;
};

std::vector<Term> CanonicalHyps(std::vector<Term> hyps);
std::vector<Term> AddHyps(const std::vector<Term>& hyps,
                          std::initializer_list<Term> extra);
std::string Print(const Judgment& j, const DefinitionList* defs = nullptr);

// Rule ids double as the rule numbers of coded proofs; the BGA rules come
// first and are the only ones with codes.
enum class RuleId : std::uint8_t {
  kHyp,
  kWeaken,
  kZeroI,
  kEqSym,
  kEqSubst,
  kDefFold,
  kDefUnfold,
  kNegNegI,
  kNegNegE,
  kNegE,
  kOrI1,
  kOrI2,
  kOrI3,
  kOrE1,
  kOrE2,
  kOrE3,
  kSuccEqI,
  kSuccEqE,
  kSuccNeqI,
  kSuccNeqE,
  kSuccNeqZero,
  kPredSucc,
  kPredNatI,
  kPredNatE,
  kCondI1,
  kCondI2,
  kInd,
  kForallI1,
  kForallE1,
  kForallI2,
  kForallE2,
  kExistsI1,
  kExistsE1,
  kExistsI2,
  kExistsE2,
  kForallInd,
};

inline constexpr std::size_t kRuleCount = 36;
inline constexpr std::size_t kBgaRuleCount = 27;

const char* RuleName(RuleId r);
std::optional<RuleId> RuleByName(const std::string& name);
bool IsQuantifierRule(RuleId r);
std::span<const RuleId> AllRules();

// Instantiation data. Fields a rule does not use must stay empty:
//   terms    H, W: the hypothesis; negE, orI1: q; orI2: p; ?I1: b; ?I2: a;
//            defIE.fwd: the arguments; Ind, forallI2, existsI1, forallInd:
//            the template p.
//   paths    =E, defIE.fwd, defIE.rev: the rewritten positions.
//   var      Ind, forallI1, forallI2, existsI1, existsI2, forallInd.
//   def      defIE.fwd, defIE.rev.
//   context  0I, H: the background hypotheses.
struct RuleApp {
  RuleId rule = RuleId::kZeroI;
  std::vector<Term> terms;
  std::vector<Path> paths;
  std::optional<VarIndex> var;
  std::optional<DefIndex> def;
  std::vector<Term> context;

  friend bool operator==(const RuleApp&, const RuleApp&) = default;
};

// The conclusion a rule draws from the given premise judgments, without
// asking whether the premises are theorems. Throws RuleError.
Judgment Conclude(const DefinitionList& defs, const RuleApp& app,
                  std::span<const Judgment> premises);

class Theorem;
Theorem ApplyRule(const DefinitionList& defs, const RuleApp& app,
                  const std::vector<Theorem>& premises);

struct ProofStep {
  Judgment judgment;
  RuleApp rule;
  std::vector<std::size_t> premises;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct Proof {
  std::vector<ProofStep> steps;
  const Judgment& claim() const { return steps.back().judgment; }

  friend bool operator==(const Proof&, const Proof&) = default;
};

std::vector<Theorem> CheckProof(const DefinitionList& defs, const Proof& p);

class Theorem {
 public:
  const Judgment& judgment() const { return judgment_; }
  const std::vector<Term>& hyps() const { return judgment_.hyps(); }
  const Term& concl() const { return judgment_.concl(); }

 private:
  explicit Theorem(Judgment j) : judgment_(std::move(j)) {}
  friend Theorem ApplyRule(const DefinitionList&, const RuleApp&,
                           const std::vector<Theorem>&);
  friend std::vector<Theorem> CheckProof(const DefinitionList&, const Proof&);

  Judgment judgment_;
};

}  // namespace ga

#endif  // GA_KERNEL_HPP_
