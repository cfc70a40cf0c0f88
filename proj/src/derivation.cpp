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

#include "ga/derivation.hpp"

#include <algorithm>

namespace ga {
namespace {

std::size_t JudgmentHash(const Judgment& j) {
  std::size_t h = j.concl().hash();
  for (const Term& t : j.hyps()) h = h * 1000003u ^ t.hash();
  return h;
}

}  // namespace

std::optional<Line> Derivation::Find(const Judgment& j) const {
  auto it = by_hash_.find(JudgmentHash(j));
  if (it == by_hash_.end()) return std::nullopt;
  for (std::size_t i : it->second) {
    if (lines_[i].thm.judgment() == j) return Line{i};
  }
  return std::nullopt;
}

Line Derivation::Apply(const RuleApp& app,
                       std::initializer_list<Line> premises) {
  return Apply(app, std::vector<Line>(premises));
}

Line Derivation::Apply(const RuleApp& app, const std::vector<Line>& premises) {
  std::vector<Theorem> prem;
  std::vector<std::size_t> idx;
  bool exportable = true;
  for (Line l : premises) {
    prem.push_back(lines_.at(l.index).thm);
    idx.push_back(l.index);
    exportable = exportable && lines_[l.index].step.has_value();
  }
  Theorem t = ApplyRule(*defs_, app, prem);
  if (auto existing = Find(t.judgment())) return *existing;
  std::optional<ProofStep> step;
  if (exportable) step = ProofStep{t.judgment(), app, idx};
  lines_.push_back(Entry{std::move(t), std::move(step)});
  std::size_t i = lines_.size() - 1;
  if (exportable) by_hash_[JudgmentHash(lines_[i].thm.judgment())].push_back(i);
  return Line{i};
}

Line Derivation::Given(const Theorem& t) {
  lines_.push_back(Entry{t, std::nullopt});
  return Line{lines_.size() - 1};
}

Proof Derivation::Export(Line last) const {
  std::vector<bool> need(last.index + 1, false);
  need[last.index] = true;
  for (std::size_t i = last.index + 1; i-- > 0;) {
    if (!need[i]) continue;
    const auto& step = lines_[i].step;
    if (!step) throw TacticError("derivation depends on an imported theorem");
    for (std::size_t k : step->premises) need[k] = true;
  }
  std::vector<std::size_t> renum(last.index + 1, 0);
  Proof p;
  for (std::size_t i = 0; i <= last.index; ++i) {
    if (!need[i]) continue;
    ProofStep s = *lines_[i].step;
    for (std::size_t& k : s.premises) k = renum[k];
    renum[i] = p.steps.size();
    p.steps.push_back(std::move(s));
  }
  return p;
}

Line Derivation::Hyp(const Term& p, const std::vector<Term>& context) {
  RuleApp a;
  a.rule = RuleId::kHyp;
  a.terms = {p};
  std::vector<Term> ctx;
  for (const Term& h : context) {
    if (!(h == p)) ctx.push_back(h);
  }
  a.context = CanonicalHyps(std::move(ctx));
  return Apply(a, {});
}

Line Derivation::Weaken(Line l, const Term& p) {
  RuleApp a;
  a.rule = RuleId::kWeaken;
  a.terms = {p};
  return Apply(a, {l});
}

Line Derivation::WeakenTo(Line l, const std::vector<Term>& target) {
  const auto& have = hyps(l);
  for (const Term& h : have) {
    if (!std::binary_search(target.begin(), target.end(), h)) {
      throw TacticError("cannot weaken away a hypothesis");
    }
  }
  for (const Term& h : target) {
    if (!judgment(l).HasHyp(h)) l = Weaken(l, h);
  }
  return l;
}

Line Derivation::ZeroI(const std::vector<Term>& context) {
  RuleApp a;
  a.rule = RuleId::kZeroI;
  a.context = CanonicalHyps(context);
  return Apply(a, {});
}

Line Derivation::Rule(RuleId r, std::initializer_list<Line> premises) {
  RuleApp a;
  a.rule = r;
  return Apply(a, premises);
}

Line Derivation::RuleT(RuleId r, const Term& t,
                       std::initializer_list<Line> premises) {
  RuleApp a;
  a.rule = r;
  a.terms = {t};
  return Apply(a, premises);
}

Line Derivation::RuleVT(RuleId r, VarIndex v, const Term& t,
                        std::initializer_list<Line> premises) {
  RuleApp a;
  a.rule = r;
  a.var = v;
  a.terms = {t};
  return Apply(a, premises);
}

Line Derivation::RuleV(RuleId r, VarIndex v,
                       std::initializer_list<Line> premises) {
  RuleApp a;
  a.rule = r;
  a.var = v;
  return Apply(a, premises);
}

Line Derivation::EqSubst(Line eq, Line target, std::vector<Path> paths) {
  RuleApp a;
  a.rule = RuleId::kEqSubst;
  a.paths = std::move(paths);
  return Apply(a, {eq, target});
}

Line Derivation::EqSubstAll(Line eq, Line target) {
  const Term& lhs = concl(eq).child(0);
  std::vector<Path> paths;
  for (Path& p : FindAll(concl(target), lhs)) {
    if (!PathUnderBinder(concl(target), p)) paths.push_back(std::move(p));
  }
  if (paths.empty()) throw TacticError("nothing to rewrite");
  return EqSubst(eq, target, std::move(paths));
}

}  // namespace ga
