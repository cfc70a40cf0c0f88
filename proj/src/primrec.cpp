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

#include "ga/primrec.hpp"

#include <algorithm>
#include <set>

#include "ga/syntax.hpp"
#include "ga/tactics.hpp"

namespace ga {
namespace {

using R = RuleId;
using Ctx = std::vector<Term>;

bool Mentions(const Term& t, DefIndex f) {
  if (t.is(Kind::kApply) && t.index() == f) return true;
  for (const Term& c : t.children()) {
    if (Mentions(c, f)) return true;
  }
  return false;
}

// Every call of f in t is f(v0, ..., v(k-2), P(v(k-1))).
bool OnlyPredecessorCalls(const Term& t, DefIndex f, std::size_t k) {
  if (t.is(Kind::kApply) && t.index() == f) {
    if (t.arity() != k) return false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (!(t.child(i) == Term::Var(static_cast<VarIndex>(i)))) return false;
    }
    return t.child(k - 1) ==
           Term::Pred(Term::Var(static_cast<VarIndex>(k - 1)));
  }
  for (const Term& c : t.children()) {
    if (!OnlyPredecessorCalls(c, f, k)) return false;
  }
  return true;
}

class Prover {
 public:
  explicit Prover(Derivation& d) : d_(d) {}

  Line Nat(const Term& a, const Ctx& g, const NatFacts& known) {
    if (auto it = known.find(a); it != known.end()) {
      return d_.WeakenTo(it->second, g);
    }
    Term fact = NatOf(a);
    if (std::binary_search(g.begin(), g.end(), fact)) return d_.Hyp(fact, g);
    switch (a.kind()) {
      case Kind::kZero:
        return d_.ZeroI(g);
      case Kind::kSucc:
        return d_.Rule(R::kSuccEqI, {Nat(a.child(0), g, known)});
      case Kind::kPred:
        return d_.Rule(R::kPredNatI, {Nat(a.child(0), g, known)});
      case Kind::kApply: {
        std::vector<Line> args;
        for (const Term& c : a.children()) args.push_back(Nat(c, g, known));
        return Total(a.index(), args, g, known);
      }
      case Kind::kCond: {
        Line cb = Bool(a.child(0), g, known);
        Line an = Nat(a.child(1), g, known);
        Line bn = Nat(a.child(2), g, known);
        return Derived(d_, "condTI", {cb, an, bn});
      }
      default:
        break;
    }
    throw TacticError("no termination proof for " + Print(a, &d_.defs()));
  }

  Line Bool(const Term& p, const Ctx& g, const NatFacts& known) {
    Term fact = BoolOf(p);
    if (std::binary_search(g.begin(), g.end(), fact)) return d_.Hyp(fact, g);
    switch (p.kind()) {
      case Kind::kEq:
        return Derived(d_, "eqTI",
                       {Nat(p.child(0), g, known), Nat(p.child(1), g, known)});
      case Kind::kNeg:
        return Derived(d_, "negTI", {Bool(p.child(0), g, known)});
      case Kind::kOr:
        return Derived(d_, "orTI", {Bool(p.child(0), g, known),
                                    Bool(p.child(1), g, known)});
      default:
        break;
    }
    throw TacticError("no typing proof for " + Print(p, &d_.defs()));
  }

  Line Total(DefIndex f, const std::vector<Line>& arg_nats, const Ctx& g,
             const NatFacts& known) {
    const DefinitionList& defs = d_.defs();
    if (!defs.Contains(f)) {
      throw TacticError("undefined definition d" + std::to_string(f));
    }
    const Definition& def = defs.at(f);
    if (!def.body) {
      throw TacticError("no termination proof for native '" + def.name + "'");
    }
    if (arg_nats.size() != def.arity) {
      throw TacticError("'" + def.name + "' expects " +
                        std::to_string(def.arity) + " arguments");
    }
    if (active_.count(f)) {
      throw TacticError("'" + def.name +
                        "' is not of the recognised recursive shape");
    }
    active_.insert(f);
    std::vector<Term> args;
    for (Line l : arg_nats) args.push_back(d_.concl(l).child(0));
    Line out = Mentions(*def.body, f) ? Recursive(f, def, args, arg_nats, g,
                                                  known)
                                      : Unfold(f, def, args, arg_nats, g,
                                               known);
    active_.erase(f);
    return out;
  }

 private:
  NatFacts WithArgs(const NatFacts& known, const std::vector<Term>& args,
                    const std::vector<Line>& arg_nats) {
    NatFacts k = known;
    for (std::size_t i = 0; i < args.size(); ++i) k[args[i]] = arg_nats[i];
    return k;
  }

  Term Instance(const Definition& def, const std::vector<Term>& args) {
    std::map<VarIndex, Term> s;
    for (std::size_t i = 0; i < args.size(); ++i) {
      s.emplace(static_cast<VarIndex>(i), args[i]);
    }
    return SubstMany(*def.body, s);
  }

  // From G |- e = e with e the body instance, G |- f(args) = f(args).
  Line Fold(DefIndex f, const std::vector<Term>& args,
            const std::vector<Line>& arg_nats, Line body_nat) {
    RuleApp app;
    app.rule = R::kDefFold;
    app.def = f;
    app.terms = args;
    app.paths = {{0}, {1}};
    std::vector<Line> prem = {body_nat};
    prem.insert(prem.end(), arg_nats.begin(), arg_nats.end());
    return d_.Apply(app, prem);
  }

  Line Unfold(DefIndex f, const Definition& def, const std::vector<Term>& args,
              const std::vector<Line>& arg_nats, const Ctx& g,
              const NatFacts& known) {
    NatFacts k = WithArgs(known, args, arg_nats);
    Line body = Nat(Instance(def, args), g, k);
    return Fold(f, args, arg_nats, body);
  }

  // Folds (y = 0 ? base : step) = e into f(args) = f(args), given e = e.
  Line FoldCase(DefIndex f, const std::vector<Term>& args,
                const std::vector<Line>& arg_nats, Line cond_eq, Line e_nat) {
    RuleApp app;
    app.rule = R::kDefFold;
    app.def = f;
    app.terms = args;
    app.paths = {{0}};
    std::vector<Line> prem = {cond_eq};
    prem.insert(prem.end(), arg_nats.begin(), arg_nats.end());
    Line fe = d_.Apply(app, prem);
    Line ef = d_.Rule(R::kEqSym, {fe});
    return d_.EqSubst(ef, e_nat, {{0}, {1}});
  }

  Line Recursive(DefIndex f, const Definition& def,
                 const std::vector<Term>& args,
                 const std::vector<Line>& arg_nats, const Ctx& g,
                 const NatFacts& known) {
    const Term& body = *def.body;
    std::size_t k = def.arity;
    if (k == 0 || !body.is(Kind::kCond) ||
        !(body.child(0) ==
          Term::Eq(Term::Var(static_cast<VarIndex>(k - 1)), Term::Zero())) ||
        Mentions(body.child(1), f) ||
        !OnlyPredecessorCalls(body.child(2), f, k)) {
      throw TacticError("'" + def.name +
                        "' is not of the recognised recursive shape");
    }
    std::vector<Term> seen = g;
    seen.insert(seen.end(), args.begin(), args.end());
    VarIndex z = FreshVar(std::span<const Term>(seen));
    Term zv = Term::Var(z);
    std::vector<Term> fixed(args.begin(), args.end() - 1);
    std::vector<Line> fixed_nats(arg_nats.begin(), arg_nats.end() - 1);

    auto at = [&](const Term& last) {
      std::vector<Term> a = fixed;
      a.push_back(last);
      return a;
    };
    Term tmpl = NatOf(Term::Apply(f, at(zv)));
    NatFacts outer = known;
    for (std::size_t i = 0; i < fixed.size(); ++i) outer[fixed[i]] = fixed_nats[i];

    // Base case.
    Line base;
    {
      std::vector<Term> a0 = at(Term::Zero());
      Term inst = Instance(def, a0);
      Line b_nat = Nat(inst.child(1), g, outer);
      Line c = d_.RuleT(R::kCondI1, inst.child(2), {d_.ZeroI(g), b_nat});
      std::vector<Line> nats = fixed_nats;
      nats.push_back(d_.ZeroI(g));
      base = FoldCase(f, a0, nats, c, b_nat);
    }
    // Step case.
    Line step;
    {
      Ctx gs = AddHyps(g, {NatOf(zv), tmpl});
      Term sz = Term::Succ(zv);
      std::vector<Term> a1 = at(sz);
      Term inst = Instance(def, a1);
      Line z_nat = d_.Hyp(NatOf(zv), gs);
      Line ih = d_.Hyp(tmpl, gs);
      // f(.., P(S(z))) from the hypothesis via P(S(z)) = z.
      Line ps = d_.Rule(R::kPredSucc, {z_nat});
      Line zps = d_.Rule(R::kEqSym, {ps});
      auto last = static_cast<std::uint32_t>(k - 1);
      Line rec = d_.EqSubst(zps, ih, {{0, last}, {1, last}});
      NatFacts inner = outer;
      inner[d_.concl(rec).child(0)] = rec;
      Line s_nat = Nat(inst.child(2), gs, inner);
      Line ne = d_.Rule(R::kSuccNeqZero, {z_nat});
      Line c = d_.RuleT(R::kCondI2, inst.child(1), {ne, s_nat});
      std::vector<Line> nats;
      for (Line l : fixed_nats) nats.push_back(d_.WeakenTo(l, gs));
      nats.push_back(d_.Rule(R::kSuccEqI, {z_nat}));
      step = FoldCase(f, a1, nats, c, s_nat);
    }
    return d_.RuleVT(R::kInd, z, tmpl, {base, step, arg_nats.back()});
  }

  Derivation& d_;
  std::set<DefIndex> active_;
};

}  // namespace

Line ProveNat(Derivation& d, const Term& a, const std::vector<Term>& context,
              const NatFacts& known) {
  return Prover(d).Nat(a, CanonicalHyps(context), known);
}

Line ProveTotal(Derivation& d, DefIndex f, const std::vector<Line>& arg_nats,
                const NatFacts& known) {
  Ctx g;
  if (!arg_nats.empty()) {
    g = d.hyps(arg_nats[0]);
    for (Line l : arg_nats) {
      if (d.hyps(l) != g) throw TacticError("premises have different hypotheses");
    }
  }
  return Prover(d).Total(f, arg_nats, g, known);
}

Line PrimrecTermination(Derivation& d, DefIndex f) {
  if (!d.defs().Contains(f)) {
    throw TacticError("undefined definition d" + std::to_string(f));
  }
  std::size_t k = d.defs().Arity(f);
  Ctx g;
  for (std::size_t i = 0; i < k; ++i) {
    g.push_back(NatOf(Term::Var(static_cast<VarIndex>(i))));
  }
  g = CanonicalHyps(g);
  std::vector<Line> args;
  for (std::size_t i = 0; i < k; ++i) {
    args.push_back(d.Hyp(NatOf(Term::Var(static_cast<VarIndex>(i))), g));
  }
  if (k == 0) return Prover(d).Total(f, args, g, {});
  return ProveTotal(d, f, args);
}

Proof PrimrecTerminationProof(const DefinitionList& defs, DefIndex f) {
  Derivation d(defs);
  return d.Export(PrimrecTermination(d, f));
}

}  // namespace ga
