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

// A growing derivation: every line is a kernel theorem together with the
// primitive step that produced it, so any line can be exported as a Proof.

#ifndef GA_DERIVATION_HPP_
#define GA_DERIVATION_HPP_

#include <map>
#include <optional>
#include <vector>

#include "ga/kernel.hpp"

namespace ga {

struct Line {
  std::size_t index = 0;
  friend bool operator==(const Line&, const Line&) = default;
};

class Derivation {
 public:
  explicit Derivation(const DefinitionList& defs) : defs_(&defs) {}

  const DefinitionList& defs() const { return *defs_; }

  Line Apply(const RuleApp& app, std::initializer_list<Line> premises);
  Line Apply(const RuleApp& app, const std::vector<Line>& premises);
  // Imports a theorem proved elsewhere. Lines depending on it cannot be
  // exported as a Proof.
  Line Given(const Theorem& t);

  const Theorem& theorem(Line l) const { return lines_.at(l.index).thm; }
  const Judgment& judgment(Line l) const { return theorem(l).judgment(); }
  const Term& concl(Line l) const { return theorem(l).concl(); }
  const std::vector<Term>& hyps(Line l) const { return theorem(l).hyps(); }
  std::size_t size() const { return lines_.size(); }

  // The steps `last` depends on, renumbered, ending in `last`.
  Proof Export(Line last) const;

  // An exportable line with this judgment, if one exists.
  std::optional<Line> Find(const Judgment& j) const;

  // Shorthands for single rules.
  Line Hyp(const Term& p, const std::vector<Term>& context);
  Line Weaken(Line l, const Term& p);
  // Weakens l until its hypotheses are exactly `target`.
  Line WeakenTo(Line l, const std::vector<Term>& target);
  Line ZeroI(const std::vector<Term>& context);
  Line Rule(RuleId r, std::initializer_list<Line> premises);
  Line RuleT(RuleId r, const Term& t, std::initializer_list<Line> premises);
  Line RuleVT(RuleId r, VarIndex v, const Term& t,
              std::initializer_list<Line> premises);
  Line RuleV(RuleId r, VarIndex v, std::initializer_list<Line> premises);
  Line EqSubst(Line eq, Line target, std::vector<Path> paths);
  // =E at every occurrence of the equation's left side outside binders.
  Line EqSubstAll(Line eq, Line target);

 private:
  struct Entry {
    Theorem thm;
    std::optional<ProofStep> step;
  };
  const DefinitionList* defs_;
  std::vector<Entry> lines_;
  // Exportable lines by judgment hash; Apply reuses an existing line with
  // the same judgment instead of adding a duplicate.
  std::map<std::size_t, std::vector<std::size_t>> by_hash_;
};

}  // namespace ga

#endif  // GA_DERIVATION_HPP_
