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

// Proof scripts (.gap):
//
//   vars x y                        # optional: x is v0, y is v1
//   theorem NAME : HYP, ... |- CONCL
//     LABEL: RULE ARG... [from LABEL, ...]
//     ...
//   qed
//
// Arguments are {term}, @0.1 (hole position, @ alone is the root), #name
// (definition), $x (variable) and `under {t} ...` (background context of 0I
// and H, by default the theorem's hypotheses, without p for H). A `#`
// followed by a space or the end of the line starts a comment.

#ifndef GA_SCRIPT_HPP_
#define GA_SCRIPT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ga/kernel.hpp"

namespace ga {

struct ScriptStep {
  std::string label;
  RuleApp rule;
  std::vector<std::size_t> premises;
  std::size_t line = 0;
};

struct ScriptTheorem {
  std::string name;
  Judgment claim;
  std::vector<ScriptStep> steps;
  std::size_t line = 0;
};

// Throws SyntaxError.
std::vector<ScriptTheorem> ParseScript(std::string_view text,
                                       const DefinitionList& defs);

// Replays the steps through the kernel and checks that the last one proves
// the claim. Throws ProofError.
Proof ScriptProof(const DefinitionList& defs, const ScriptTheorem& s);
Theorem CheckScript(const DefinitionList& defs, const ScriptTheorem& s);

// A script for a proof, with steps labelled s0, s1, ...
std::string PrintScript(const std::string& name, const Proof& p,
                        const DefinitionList& defs);

}  // namespace ga

#endif  // GA_SCRIPT_HPP_
