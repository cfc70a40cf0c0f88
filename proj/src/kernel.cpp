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

#include "ga/kernel.hpp"

#include <algorithm>
#include <array>

#include "ga/syntax.hpp"

namespace ga {

std::vector<Term> CanonicalHyps(std::vector<Term> hyps) {
  std::sort(hyps.begin(), hyps.end());
  hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());
  return hyps;
}

std::vector<Term> AddHyps(const std::vector<Term>& hyps,
                          std::initializer_list<Term> extra) {
  std::vector<Term> out = hyps;
  out.insert(out.end(), extra.begin(), extra.end());
  return CanonicalHyps(std::move(out));
}

Judgment::Judgment(std::vector<Term> hyps, Term concl)
    : hyps_(CanonicalHyps(std::move(hyps))), concl_(std::move(concl)) {}

bool Judgment::HasHyp(const Term& h) const {
  return std::binary_search(hyps_.begin(), hyps_.end(), h);
}

std::string Print(const Judgment& j, const DefinitionList* defs) {
  std::string out;
  for (std::size_t i = 0; i < j.hyps().size(); ++i) {
    if (i) out += ", ";
    out += Print(j.hyps()[i], defs);
  }
  out += out.empty() ? "|- " : " |- ";
  out += Print(j.concl(), defs);
  return out;
}

namespace {

constexpr std::array<const char*, kRuleCount> kNames = {
    "H",         "W",         "0I",        "=S",        "=E",
    "defIE.fwd", "defIE.rev", "negnegI",   "negnegE",   "negE",
    "orI1",      "orI2",      "orI3",      "orE1",      "orE2",
    "orE3",      "S=IE.fwd",  "S=IE.rev",  "S!=IE.fwd", "S!=IE.rev",
    "S!=0I",     "P=I2",      "PTIE.fwd",  "PTIE.rev",  "?I1",
    "?I2",       "Ind",       "forallI1",  "forallE1",  "forallI2",
    "forallE2",  "existsI1",  "existsE1",  "existsI2",  "existsE2",
    "forallInd"};

constexpr std::array<RuleId, kRuleCount> MakeAll() {
  std::array<RuleId, kRuleCount> a{};
  for (std::size_t i = 0; i < kRuleCount; ++i) a[i] = static_cast<RuleId>(i);
  return a;
}
constexpr std::array<RuleId, kRuleCount> kAll = MakeAll();

}  // namespace

const char* RuleName(RuleId r) {
  return kNames.at(static_cast<std::size_t>(r));
}

std::optional<RuleId> RuleByName(const std::string& name) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (name == kNames[i]) return static_cast<RuleId>(i);
  }
  return std::nullopt;
}

bool IsQuantifierRule(RuleId r) {
  return static_cast<std::size_t>(r) >= kBgaRuleCount;
}

std::span<const RuleId> AllRules() { return kAll; }

namespace {

class Checker {
 public:
  Checker(const DefinitionList& defs, const RuleApp& app,
          std::span<const Judgment> prem)
      : defs_(defs), app_(app), prem_(prem), name_(RuleName(app.rule)) {}

  [[noreturn]] void Fail(const std::string& msg) const {
    throw RuleError(name_, msg);
  }

  void Expect(bool ok, const std::string& msg) const {
    if (!ok) Fail(msg);
  }

  // Declares which instantiation fields the rule reads and how many
  // premises it takes.
  void Shape(std::size_t premises, std::size_t terms, bool paths, bool var,
             bool def, bool context) const {
    Expect(prem_.size() == premises,
           "expects " + std::to_string(premises) + " premise" +
               (premises == 1 ? "" : "s") + ", got " +
               std::to_string(prem_.size()));
    Expect(app_.terms.size() == terms,
           "expects " + std::to_string(terms) + " term argument" +
               (terms == 1 ? "" : "s"));
    Expect(paths ? !app_.paths.empty() : app_.paths.empty(),
           paths ? "needs at least one hole position"
                 : "takes no hole positions");
    Expect(var == app_.var.has_value(),
           var ? "needs a variable" : "takes no variable");
    Expect(def == app_.def.has_value(),
           def ? "needs a definition" : "takes no definition");
    Expect(context || app_.context.empty(), "takes no context");
  }

  const Term& C(std::size_t i) const { return prem_[i].concl(); }
  const std::vector<Term>& G(std::size_t i) const { return prem_[i].hyps(); }

  // Background shared by the listed non-hypothetical premises.
  std::vector<Term> Background(std::initializer_list<std::size_t> idx) const {
    const std::vector<Term>* g = nullptr;
    for (std::size_t i : idx) {
      if (!g) {
        g = &G(i);
      } else {
        Expect(*g == G(i), "premises have different hypotheses");
      }
    }
    return g ? *g : std::vector<Term>{};
  }

  void ExpectHyps(std::size_t i, const std::vector<Term>& want) const {
    Expect(G(i) == want, "premise " + std::to_string(i + 1) +
                             " must have exactly the background plus the "
                             "discharged hypotheses");
  }

  const Term& Sub(const Term& t, Kind k, std::size_t child,
                  const char* what) const {
    Expect(t.is(k), std::string("expected ") + what);
    return t.child(child);
  }

  // Operands of an equation.
  std::pair<Term, Term> EqSides(const Term& t) const {
    Expect(t.is(Kind::kEq), "expected an equation, got " + Print(t, &defs_));
    return {t.child(0), t.child(1)};
  }

  Term NatArg(std::size_t i) const {
    auto [a, b] = EqSides(C(i));
    Expect(a == b, "premise " + std::to_string(i + 1) +
                       " must have the form a = a");
    return a;
  }

  void NotFreeIn(VarIndex x, const std::vector<Term>& hyps) const {
    for (const Term& h : hyps) {
      Expect(!OccursFree(h, x), "v" + std::to_string(x) +
                                    " is free in the background hypotheses");
    }
  }

  Term SubstOrFail(const Term& t, VarIndex x, const Term& r) const {
    try {
      return Subst(t, x, r);
    } catch (const CaptureError& e) {
      Fail(e.what());
    }
  }

  void CheckPaths(const Term& t, const Term& needle) const {
    for (std::size_t i = 0; i < app_.paths.size(); ++i) {
      const Path& p = app_.paths[i];
      for (std::size_t j = 0; j < i; ++j) {
        Expect(app_.paths[j] != p, "repeated hole position");
      }
      const Term* at = nullptr;
      try {
        at = &SubtermAt(t, p);
        Expect(!PathUnderBinder(t, p), "hole under a quantifier binder");
      } catch (const PathError&) {
        Fail("hole position does not address a subterm");
      }
      Expect(*at == needle, "hole position does not hold " +
                                Print(needle, &defs_));
    }
  }

  Term ReplaceAll(const Term& t, const Term& r) const {
    Term out = t;
    for (const Path& p : app_.paths) out = ReplaceAt(out, p, r);
    return out;
  }

  const Definition& Def() const {
    Expect(defs_.Contains(*app_.def), "unknown definition index " +
                                          std::to_string(*app_.def));
    const Definition& d = defs_.at(*app_.def);
    Expect(d.body.has_value(), "cannot unfold native definition '" +
                                   d.name + "'");
    return d;
  }

  Term Instance(const Definition& d, const std::vector<Term>& args) const {
    Expect(args.size() == d.arity, "'" + d.name + "' expects " +
                                       std::to_string(d.arity) +
                                       " arguments");
    std::map<VarIndex, Term> s;
    for (std::size_t i = 0; i < args.size(); ++i) {
      s.emplace(static_cast<VarIndex>(i), args[i]);
    }
    try {
      return SubstMany(*d.body, s);
    } catch (const CaptureError& e) {
      Fail(e.what());
    }
  }

  Judgment Run();

 private:
  const DefinitionList& defs_;
  const RuleApp& app_;
  std::span<const Judgment> prem_;
  std::string name_;
};

Judgment Checker::Run() {
  using K = Kind;
  const auto& T = app_.terms;
  switch (app_.rule) {
    case RuleId::kHyp:
      Shape(0, 1, false, false, false, true);
      return Judgment(AddHyps(app_.context, {T[0]}), T[0]);
    case RuleId::kWeaken:
      Shape(1, 1, false, false, false, false);
      return Judgment(AddHyps(G(0), {T[0]}), C(0));
    case RuleId::kZeroI:
      Shape(0, 0, false, false, false, true);
      return Judgment(app_.context, True());
    case RuleId::kEqSym: {
      Shape(1, 0, false, false, false, false);
      auto [a, b] = EqSides(C(0));
      return Judgment(G(0), Term::Eq(b, a));
    }
    case RuleId::kEqSubst: {
      Shape(2, 0, true, false, false, false);
      auto g = Background({0, 1});
      auto [a, b] = EqSides(C(0));
      CheckPaths(C(1), a);
      return Judgment(g, ReplaceAll(C(1), b));
    }
    case RuleId::kDefFold: {
      Expect(prem_.size() >= 1, "expects the rewritten premise first");
      Shape(1 + T.size(), T.size(), true, false, true, false);
      const Definition& d = Def();
      for (std::size_t i = 1; i < prem_.size(); ++i) {
        Expect(G(i) == G(0), "premises have different hypotheses");
        Expect(NatArg(i) == T[i - 1],
               "premise " + std::to_string(i + 1) + " must show argument " +
                   std::to_string(i) + " is a natural number");
      }
      Term inst = Instance(d, T);
      CheckPaths(C(0), inst);
      return Judgment(G(0), ReplaceAll(C(0), Term::Apply(*app_.def, T)));
    }
    case RuleId::kDefUnfold: {
      Shape(1, 0, true, false, true, false);
      const Definition& d = Def();
      Term app;
      try {
        app = SubtermAt(C(0), app_.paths[0]);
      } catch (const PathError&) {
        Fail("hole position does not address a subterm");
      }
      Expect(app.is(K::kApply) && app.index() == *app_.def,
             "hole position does not hold an application of '" + d.name +
                 "'");
      CheckPaths(C(0), app);
      std::vector<Term> args(app.children().begin(), app.children().end());
      return Judgment(G(0), ReplaceAll(C(0), Instance(d, args)));
    }
    case RuleId::kNegNegI:
      Shape(1, 0, false, false, false, false);
      return Judgment(G(0), Term::Neg(Term::Neg(C(0))));
    case RuleId::kNegNegE: {
      Shape(1, 0, false, false, false, false);
      const Term& inner = Sub(C(0), K::kNeg, 0, "a double negation");
      return Judgment(G(0), Sub(inner, K::kNeg, 0, "a double negation"));
    }
    case RuleId::kNegE: {
      Shape(2, 1, false, false, false, false);
      auto g = Background({0, 1});
      Expect(C(1) == Term::Neg(C(0)), "second premise must negate the first");
      return Judgment(g, T[0]);
    }
    case RuleId::kOrI1:
      Shape(1, 1, false, false, false, false);
      return Judgment(G(0), Term::Or(C(0), T[0]));
    case RuleId::kOrI2:
      Shape(1, 1, false, false, false, false);
      return Judgment(G(0), Term::Or(T[0], C(0)));
    case RuleId::kOrI3: {
      Shape(2, 0, false, false, false, false);
      auto g = Background({0, 1});
      const Term& p = Sub(C(0), K::kNeg, 0, "a negation");
      const Term& q = Sub(C(1), K::kNeg, 0, "a negation");
      return Judgment(g, Term::Neg(Term::Or(p, q)));
    }
    case RuleId::kOrE1: {
      Shape(3, 0, false, false, false, false);
      Expect(C(0).is(K::kOr), "first premise must be a disjunction");
      const Term& p = C(0).child(0);
      const Term& q = C(0).child(1);
      ExpectHyps(1, AddHyps(G(0), {p}));
      ExpectHyps(2, AddHyps(G(0), {q}));
      Expect(C(1) == C(2), "both cases must reach the same conclusion");
      return Judgment(G(0), C(1));
    }
    case RuleId::kOrE2:
    case RuleId::kOrE3: {
      Shape(1, 0, false, false, false, false);
      const Term& d = Sub(C(0), K::kNeg, 0, "a negated disjunction");
      Expect(d.is(K::kOr), "expected a negated disjunction");
      return Judgment(
          G(0), Term::Neg(d.child(app_.rule == RuleId::kOrE2 ? 0 : 1)));
    }
    case RuleId::kSuccEqI: {
      Shape(1, 0, false, false, false, false);
      auto [a, b] = EqSides(C(0));
      return Judgment(G(0), Term::Eq(Term::Succ(a), Term::Succ(b)));
    }
    case RuleId::kSuccEqE: {
      Shape(1, 0, false, false, false, false);
      auto [a, b] = EqSides(C(0));
      return Judgment(G(0), Term::Eq(Sub(a, K::kSucc, 0, "S(a) = S(b)"),
                                     Sub(b, K::kSucc, 0, "S(a) = S(b)")));
    }
    case RuleId::kSuccNeqI: {
      Shape(1, 0, false, false, false, false);
      auto [a, b] = EqSides(Sub(C(0), K::kNeg, 0, "an inequation"));
      return Judgment(G(0),
                      Term::Neg(Term::Eq(Term::Succ(a), Term::Succ(b))));
    }
    case RuleId::kSuccNeqE: {
      Shape(1, 0, false, false, false, false);
      auto [a, b] = EqSides(Sub(C(0), K::kNeg, 0, "an inequation"));
      return Judgment(G(0), Term::Neg(Term::Eq(
                                Sub(a, K::kSucc, 0, "~(S(a) = S(b))"),
                                Sub(b, K::kSucc, 0, "~(S(a) = S(b))"))));
    }
    case RuleId::kSuccNeqZero: {
      Shape(1, 0, false, false, false, false);
      Term a = NatArg(0);
      return Judgment(G(0),
                      Term::Neg(Term::Eq(Term::Succ(a), Term::Zero())));
    }
    case RuleId::kPredSucc: {
      Shape(1, 0, false, false, false, false);
      Term a = NatArg(0);
      return Judgment(G(0), Term::Eq(Term::Pred(Term::Succ(a)), a));
    }
    case RuleId::kPredNatI: {
      Shape(1, 0, false, false, false, false);
      Term a = NatArg(0);
      return Judgment(G(0), NatOf(Term::Pred(a)));
    }
    case RuleId::kPredNatE: {
      Shape(1, 0, false, false, false, false);
      Term a = NatArg(0);
      return Judgment(G(0), NatOf(Sub(a, K::kPred, 0, "P(a) = P(a)")));
    }
    case RuleId::kCondI1: {
      Shape(2, 1, false, false, false, false);
      auto g = Background({0, 1});
      Term a = NatArg(1);
      return Judgment(g, Term::Eq(Term::Cond(C(0), a, T[0]), a));
    }
    case RuleId::kCondI2: {
      Shape(2, 1, false, false, false, false);
      auto g = Background({0, 1});
      const Term& c = Sub(C(0), K::kNeg, 0, "a negated condition");
      Term b = NatArg(1);
      return Judgment(g, Term::Eq(Term::Cond(c, T[0], b), b));
    }
    case RuleId::kInd:
    case RuleId::kForallInd: {
      bool forall = app_.rule == RuleId::kForallInd;
      Shape(forall ? 2 : 3, 1, false, true, false, false);
      VarIndex x = *app_.var;
      const Term& p = T[0];
      auto g = forall ? G(0) : Background({0, 2});
      NotFreeIn(x, g);
      Expect(C(0) == SubstOrFail(p, x, Term::Zero()),
             "base case must be the template at 0");
      ExpectHyps(1, AddHyps(g, {NatOf(Term::Var(x)), p}));
      Expect(C(1) == SubstOrFail(p, x, Term::Succ(Term::Var(x))),
             "step case must be the template at S(x)");
      if (forall) return Judgment(g, Term::Forall(x, p));
      return Judgment(g, SubstOrFail(p, x, NatArg(2)));
    }
    case RuleId::kForallI1:
    case RuleId::kExistsI2: {
      Shape(1, 0, false, true, false, false);
      VarIndex x = *app_.var;
      Term nat = NatOf(Term::Var(x));
      Expect(prem_[0].HasHyp(nat), "premise must assume v" +
                                       std::to_string(x) + " = v" +
                                       std::to_string(x));
      std::vector<Term> g;
      for (const Term& h : G(0)) {
        if (!(h == nat)) g.push_back(h);
      }
      NotFreeIn(x, g);
      if (app_.rule == RuleId::kForallI1) {
        return Judgment(g, Term::Forall(x, C(0)));
      }
      const Term& p = Sub(C(0), K::kNeg, 0, "a negation");
      return Judgment(g, Term::Neg(Term::Exists(x, p)));
    }
    case RuleId::kForallE1: {
      Shape(2, 0, false, false, false, false);
      auto g = Background({0, 1});
      Expect(C(0).is(K::kForall), "first premise must be universal");
      return Judgment(
          g, SubstOrFail(C(0).child(0), C(0).index(), NatArg(1)));
    }
    case RuleId::kForallI2: {
      Shape(2, 1, false, true, false, false);
      auto g = Background({0, 1});
      Term a = NatArg(0);
      Expect(C(1) == Term::Neg(SubstOrFail(T[0], *app_.var, a)),
             "second premise must refute the template at the witness");
      return Judgment(g, Term::Neg(Term::Forall(*app_.var, T[0])));
    }
    case RuleId::kExistsI1: {
      Shape(2, 1, false, true, false, false);
      auto g = Background({0, 1});
      Term a = NatArg(0);
      Expect(C(1) == SubstOrFail(T[0], *app_.var, a),
             "second premise must be the template at the witness");
      return Judgment(g, Term::Exists(*app_.var, T[0]));
    }
    case RuleId::kForallE2:
    case RuleId::kExistsE1: {
      Shape(2, 0, false, false, false, false);
      bool forall = app_.rule == RuleId::kForallE2;
      const Term& major =
          forall ? Sub(C(0), K::kNeg, 0, "a negated universal") : C(0);
      Expect(major.is(forall ? K::kForall : K::kExists),
             forall ? "first premise must be a negated universal"
                    : "first premise must be existential");
      VarIndex x = major.index();
      const Term& p = major.child(0);
      NotFreeIn(x, G(0));
      ExpectHyps(1, AddHyps(G(0), {NatOf(Term::Var(x)),
                                   forall ? Term::Neg(p) : p}));
      Expect(!OccursFree(C(1), x), "v" + std::to_string(x) +
                                       " is free in the conclusion");
      return Judgment(G(0), C(1));
    }
    case RuleId::kExistsE2: {
      Shape(2, 0, false, false, false, false);
      auto g = Background({0, 1});
      const Term& ex = Sub(C(0), K::kNeg, 0, "a negated existential");
      Expect(ex.is(K::kExists), "first premise must be a negated existential");
      return Judgment(
          g, Term::Neg(SubstOrFail(ex.child(0), ex.index(), NatArg(1))));
    }
  }
  Fail("unknown rule");
}

}  // namespace

Judgment Conclude(const DefinitionList& defs, const RuleApp& app,
                  std::span<const Judgment> premises) {
  if (static_cast<std::size_t>(app.rule) >= kRuleCount) {
    throw RuleError("?", "unknown rule");
  }
  return Checker(defs, app, premises).Run();
}

Theorem ApplyRule(const DefinitionList& defs, const RuleApp& app,
                  const std::vector<Theorem>& premises) {
  std::vector<Judgment> js;
  js.reserve(premises.size());
  for (const Theorem& t : premises) js.push_back(t.judgment());
  return Theorem(Conclude(defs, app, js));
}

std::vector<Theorem> CheckProof(const DefinitionList& defs, const Proof& p) {
  if (p.steps.empty()) throw ProofError(0, "empty proof");
  std::vector<Theorem> done;
  done.reserve(p.steps.size());
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& s = p.steps[i];
    std::vector<Theorem> prem;
    for (std::size_t k : s.premises) {
      if (k >= i) {
        throw ProofError(i, "cites step " + std::to_string(k) +
                                " which does not precede it");
      }
      prem.push_back(done[k]);
    }
    Theorem t = [&] {
      try {
        return ApplyRule(defs, s.rule, prem);
      } catch (const RuleError& e) {
        throw ProofError(i, e.what());
      }
    }();
    if (!(t.judgment() == s.judgment)) {
      throw ProofError(i, "recorded judgment " + Print(s.judgment, &defs) +
                              " differs from derived " +
                              Print(t.judgment(), &defs));
    }
    done.push_back(std::move(t));
  }
  return done;
}

}  // namespace ga
