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

#include "ga/tactics.hpp"

#include <functional>
#include <map>

#include "ga/certify.hpp"
#include "ga/syntax.hpp"

namespace ga {
namespace {

using Ctx = std::vector<Term>;
using R = RuleId;

Term N(const Term& t) { return Term::Neg(t); }

[[noreturn]] void Bad(const std::string& rule, const std::string& msg) {
  throw TacticError(rule + ": " + msg);
}

void Count(const std::string& rule, const std::vector<Line>& prem,
           std::size_t n) {
  if (prem.size() != n) {
    Bad(rule, "expects " + std::to_string(n) + " premises, got " +
                  std::to_string(prem.size()));
  }
}

// The p of a conclusion p \/ ~p.
Term BoolArg(Derivation& d, const std::string& rule, Line l) {
  const Term c = d.concl(l);
  if (!c.is(Kind::kOr) || !(c.child(1) == N(c.child(0)))) {
    Bad(rule, "premise must have the form p \\/ ~p");
  }
  return c.child(0);
}

// The a of a conclusion a = a.
Term NatArg(Derivation& d, const std::string& rule, Line l) {
  const Term c = d.concl(l);
  if (!c.is(Kind::kEq) || !(c.child(0) == c.child(1))) {
    Bad(rule, "premise must have the form a = a");
  }
  return c.child(0);
}

void SameHyps(Derivation& d, const std::string& rule, Line a, Line b) {
  if (d.hyps(a) != d.hyps(b)) Bad(rule, "premises have different hypotheses");
}

Line OrI1(Derivation& d, Line l, const Term& q) {
  return d.RuleT(R::kOrI1, q, {l});
}
Line OrI2(Derivation& d, Line l, const Term& p) {
  return d.RuleT(R::kOrI2, p, {l});
}

Line AndI(Derivation& d, Line lp, Line lq) {
  SameHyps(d, "andI", lp, lq);
  return d.Rule(R::kOrI3, {d.Rule(R::kNegNegI, {lp}), d.Rule(R::kNegNegI, {lq})});
}

// Conjunct i of ~(~p \/ ~q).
Line AndE(Derivation& d, Line l, int i) {
  const Term c = d.concl(l);
  if (!c.is(Kind::kNeg) || !c.child(0).is(Kind::kOr) ||
      !c.child(0).child(0).is(Kind::kNeg) ||
      !c.child(0).child(1).is(Kind::kNeg)) {
    Bad(i == 0 ? "andE1" : "andE2", "premise must be a conjunction");
  }
  Line nn = d.Rule(i == 0 ? R::kOrE2 : R::kOrE3, {l});
  return d.Rule(R::kNegNegE, {nn});
}

// G |- bool(p), G,p |- q  ==>  G |- ~p \/ q
Line ImpI(Derivation& d, Line pb, Line hq) {
  Term p = BoolArg(d, "impI", pb);
  if (d.hyps(hq) != AddHyps(d.hyps(pb), {p})) {
    Bad("impI", "second premise must assume exactly the background and p");
  }
  Term q = d.concl(hq);
  return Cases(
      d, pb, [&](const Ctx&, Line) { return OrI2(d, hq, N(p)); },
      [&](const Ctx&, Line np) { return OrI1(d, np, q); });
}

Line ImpE(Derivation& d, Line imp, Line lp) {
  SameHyps(d, "impE", imp, lp);
  const Term c = d.concl(imp);
  if (!c.is(Kind::kOr) || !c.child(0).is(Kind::kNeg) ||
      !(c.child(0).child(0) == d.concl(lp))) {
    Bad("impE", "premises must be p -> q and p");
  }
  Term q = c.child(1);
  return Cases(
      d, imp,
      [&](const Ctx& g, Line np) {
        return d.RuleT(R::kNegE, q, {d.WeakenTo(lp, g), np});
      },
      [&](const Ctx&, Line hq) { return hq; });
}

Line EqT(Derivation& d, Line ab, Line bc) {
  SameHyps(d, "eqT", ab, bc);
  const Term x = d.concl(ab);
  const Term y = d.concl(bc);
  if (!x.is(Kind::kEq) || !y.is(Kind::kEq) || !(x.child(1) == y.child(0))) {
    Bad("eqT", "premises must be a = b and b = c");
  }
  return d.EqSubst(bc, ab, {{1}});
}

Line NegTI(Derivation& d, Line pb) {
  Term p = BoolArg(d, "negTI", pb);
  return Cases(
      d, pb,
      [&](const Ctx&, Line hp) {
        return OrI2(d, d.Rule(R::kNegNegI, {hp}), N(p));
      },
      [&](const Ctx&, Line hnp) { return OrI1(d, hnp, N(N(p))); });
}

Line NegTE(Derivation& d, Line nb) {
  Term np = BoolArg(d, "negTE", nb);
  if (!np.is(Kind::kNeg)) Bad("negTE", "premise must be bool(~p)");
  Term p = np.child(0);
  return Cases(
      d, nb, [&](const Ctx&, Line hnp) { return OrI2(d, hnp, p); },
      [&](const Ctx&, Line hnnp) {
        return OrI1(d, d.Rule(R::kNegNegE, {hnnp}), N(p));
      });
}

Line OrTI(Derivation& d, Line pb, Line qb) {
  SameHyps(d, "orTI", pb, qb);
  Term p = BoolArg(d, "orTI", pb);
  Term q = BoolArg(d, "orTI", qb);
  Term pq = Term::Or(p, q);
  return Cases(
      d, pb,
      [&](const Ctx&, Line hp) { return OrI1(d, OrI1(d, hp, q), N(pq)); },
      [&](const Ctx& g, Line hnp) {
        return Cases(
            d, d.WeakenTo(qb, g),
            [&](const Ctx&, Line hq) {
              return OrI1(d, OrI2(d, hq, p), N(pq));
            },
            [&](const Ctx& g2, Line hnq) {
              Line both = d.Rule(R::kOrI3, {d.WeakenTo(hnp, g2), hnq});
              return OrI2(d, both, pq);
            });
      });
}

// bool(p) \/ bool(q) from the two sides.
Line LeftBool(Derivation& d, Line pbool, const Term& q) {
  return OrI1(d, pbool, BoolOf(q));
}
Line RightBool(Derivation& d, Line qbool, const Term& p) {
  return OrI2(d, qbool, BoolOf(p));
}

Line OrTE(Derivation& d, Line b) {
  Term pq = BoolArg(d, "orTE", b);
  if (!pq.is(Kind::kOr)) Bad("orTE", "premise must be bool(p \\/ q)");
  Term p = pq.child(0), q = pq.child(1);
  return Cases(
      d, b,
      [&](const Ctx&, Line hpq) {
        return Cases(
            d, hpq,
            [&](const Ctx&, Line hp) {
              return LeftBool(d, OrI1(d, hp, N(p)), q);
            },
            [&](const Ctx&, Line hq) {
              return RightBool(d, OrI1(d, hq, N(q)), p);
            });
      },
      [&](const Ctx&, Line hn) {
        Line np = d.Rule(R::kOrE2, {hn});
        return LeftBool(d, OrI2(d, np, p), q);
      });
}

Line AndTI(Derivation& d, Line pb, Line qb) {
  SameHyps(d, "andTI", pb, qb);
  Term p = BoolArg(d, "andTI", pb);
  Term q = BoolArg(d, "andTI", qb);
  Term conj = And(p, q);
  // ~(p /\ q) from ~p \/ ~q.
  auto refuted = [&](Line nn) {
    return OrI2(d, d.Rule(R::kNegNegI, {nn}), conj);
  };
  return Cases(
      d, pb,
      [&](const Ctx& g, Line hp) {
        return Cases(
            d, d.WeakenTo(qb, g),
            [&](const Ctx& g2, Line hq) {
              return OrI1(d, AndI(d, d.WeakenTo(hp, g2), hq), N(conj));
            },
            [&](const Ctx&, Line hnq) { return refuted(OrI2(d, hnq, N(p))); });
      },
      [&](const Ctx&, Line hnp) { return refuted(OrI1(d, hnp, N(q))); });
}

// p, q of ~(~p \/ ~q).
std::pair<Term, Term> Conjuncts(const std::string& rule, const Term& c) {
  if (!c.is(Kind::kNeg) || !c.child(0).is(Kind::kOr) ||
      !c.child(0).child(0).is(Kind::kNeg) ||
      !c.child(0).child(1).is(Kind::kNeg)) {
    Bad(rule, "expected a conjunction");
  }
  return {c.child(0).child(0).child(0), c.child(0).child(1).child(0)};
}

Line AndTE(Derivation& d, Line b) {
  Term conj = BoolArg(d, "andTE", b);
  auto [p, q] = Conjuncts("andTE", conj);
  return Cases(
      d, b,
      [&](const Ctx&, Line hc) {
        Line hp = AndE(d, hc, 0);
        return LeftBool(d, OrI1(d, hp, N(p)), q);
      },
      [&](const Ctx&, Line hnc) {
        Line dis = d.Rule(R::kNegNegE, {hnc});
        return Cases(
            d, dis,
            [&](const Ctx&, Line hnp) {
              return LeftBool(d, OrI2(d, hnp, p), q);
            },
            [&](const Ctx&, Line hnq) {
              return RightBool(d, OrI2(d, hnq, q), p);
            });
      });
}

Line ImpTI(Derivation& d, Line pb, Line qb) {
  SameHyps(d, "impTI", pb, qb);
  BoolArg(d, "impTI", pb);
  BoolArg(d, "impTI", qb);
  return OrTI(d, NegTI(d, pb), qb);
}

Line ImpTE(Derivation& d, Line b) {
  Term imp = BoolArg(d, "impTE", b);
  if (!imp.is(Kind::kOr) || !imp.child(0).is(Kind::kNeg)) {
    Bad("impTE", "premise must be bool(p -> q)");
  }
  Term p = imp.child(0).child(0), q = imp.child(1);
  return Cases(
      d, OrTE(d, b),
      [&](const Ctx&, Line hnb) { return LeftBool(d, NegTE(d, hnb), q); },
      [&](const Ctx&, Line hqb) { return RightBool(d, hqb, p); });
}

Line IffTI(Derivation& d, Line pb, Line qb) {
  SameHyps(d, "iffTI", pb, qb);
  BoolArg(d, "iffTI", pb);
  BoolArg(d, "iffTI", qb);
  return AndTI(d, ImpTI(d, pb, qb), ImpTI(d, qb, pb));
}

// p, q of (p -> q) /\ (q -> p).
std::pair<Term, Term> IffSides(const std::string& rule, const Term& c) {
  auto [a, b] = Conjuncts(rule, c);
  if (!a.is(Kind::kOr) || !a.child(0).is(Kind::kNeg) ||
      !(b == Implies(a.child(1), a.child(0).child(0)))) {
    Bad(rule, "expected a biconditional");
  }
  return {a.child(0).child(0), a.child(1)};
}

// bool(p) (first) or bool(q) (second) from bool(p <-> q).
Line IffTE(Derivation& d, Line b, bool first) {
  const std::string rule = first ? "iffTE1" : "iffTE2";
  Term iff = BoolArg(d, rule, b);
  auto [p, q] = IffSides(rule, iff);
  // The second variant is the first with the conjuncts swapped.
  Term x = first ? p : q;
  Term goal = BoolOf(x);
  return Cases(
      d, b,
      [&](const Ctx&, Line hiff) {
        Line xy = AndE(d, hiff, first ? 0 : 1);
        return Cases(
            d, xy,
            [&](const Ctx&, Line hnx) { return OrI2(d, hnx, x); },
            [&](const Ctx& g2, Line hy) {
              Line yx = AndE(d, d.WeakenTo(hiff, g2), first ? 1 : 0);
              return Cases(
                  d, yx,
                  [&](const Ctx& g3, Line hny) {
                    return d.RuleT(R::kNegE, goal,
                                   {d.WeakenTo(hy, g3), hny});
                  },
                  [&](const Ctx&, Line hx) { return OrI1(d, hx, N(x)); });
            });
      },
      [&](const Ctx&, Line hn) {
        Line dis = d.Rule(R::kNegNegE, {hn});
        return Cases(
            d, dis,
            [&](const Ctx&, Line hn1) {
              // ~(~p \/ q)
              Line r = d.Rule(first ? R::kOrE2 : R::kOrE3, {hn1});
              if (first) {
                return OrI1(d, d.Rule(R::kNegNegE, {r}), N(x));
              }
              return OrI2(d, r, x);
            },
            [&](const Ctx&, Line hn2) {
              // ~(~q \/ p)
              Line r = d.Rule(first ? R::kOrE3 : R::kOrE2, {hn2});
              if (first) return OrI2(d, r, x);
              return OrI1(d, d.Rule(R::kNegNegE, {r}), N(x));
            });
      });
}

Line CondTI(Derivation& d, Line cb, Line an, Line bn) {
  SameHyps(d, "condTI", cb, an);
  SameHyps(d, "condTI", cb, bn);
  BoolArg(d, "condTI", cb);
  Term a = NatArg(d, "condTI", an);
  Term b = NatArg(d, "condTI", bn);
  // From (c ? a : b) = v conclude (c ? a : b) = (c ? a : b).
  auto refl = [&](Line eq) {
    Line sym = d.Rule(R::kEqSym, {eq});
    return d.EqSubst(sym, eq, {{1}});
  };
  return Cases(
      d, cb,
      [&](const Ctx& g, Line hc) {
        return refl(d.RuleT(R::kCondI1, b, {hc, d.WeakenTo(an, g)}));
      },
      [&](const Ctx& g, Line hnc) {
        return refl(d.RuleT(R::kCondI2, a, {hnc, d.WeakenTo(bn, g)}));
      });
}

Line EqTI(Derivation& d, Line an, Line bn);

// bool(S(a) = S(b)) from bool(a = b).
Line SuccBool(Derivation& d, Line ab_bool) {
  Term eq = BoolArg(d, "eqTI", ab_bool);
  Term seq = Term::Eq(Term::Succ(eq.child(0)), Term::Succ(eq.child(1)));
  return Cases(
      d, ab_bool,
      [&](const Ctx&, Line h) {
        return OrI1(d, d.Rule(R::kSuccEqI, {h}), N(seq));
      },
      [&](const Ctx&, Line h) {
        return OrI2(d, d.Rule(R::kSuccNeqI, {h}), seq);
      });
}

Line EqTI(Derivation& d, Line an, Line bn) {
  SameHyps(d, "eqTI", an, bn);
  Term a = NatArg(d, "eqTI", an);
  Term b = NatArg(d, "eqTI", bn);
  Term eq = Term::Eq(a, b);
  if (a == b) return OrI1(d, an, N(eq));
  if (a.is(Kind::kSucc) && b.is(Kind::kZero)) {
    Line ne = d.Rule(R::kSuccNeqZero, {d.Rule(R::kSuccEqE, {an})});
    return OrI2(d, ne, eq);
  }
  if (a.is(Kind::kSucc) && b.is(Kind::kSucc)) {
    Line inner = EqTI(d, d.Rule(R::kSuccEqE, {an}), d.Rule(R::kSuccEqE, {bn}));
    return SuccBool(d, inner);
  }
  if (b.is(Kind::kZero)) return ZeroTestBool(d, an);
  if (Closed(a) && Closed(b) && a.pure() && b.pure()) {
    const Ctx g = d.hyps(an);
    Line ca = CertifyValue(d, a, kTacticFuel);
    Line cb = CertifyValue(d, b, kTacticFuel);
    Nat n = *NumeralValue(d.concl(ca).child(1));
    Nat m = *NumeralValue(d.concl(cb).child(1));
    if (n == m) {
      Line ab = EqT(d, ca, d.Rule(R::kEqSym, {cb}));
      return d.WeakenTo(OrI1(d, ab, N(eq)), g);
    }
    if (n > m) {
      Line ne = CertifyTruth(d, N(eq), kTacticFuel);
      return d.WeakenTo(OrI2(d, ne, eq), g);
    }
  }
  Bad("eqTI", "no derivation of bool(" + Print(eq, &d.defs()) +
                  ") is known; the primitive rules only refute an equation "
                  "whose left side is provably larger");
}

}  // namespace

Line ZeroTestBool(Derivation& d, Line a_nat) {
  Term a = NatArg(d, "eqTI", a_nat);
  const Ctx g = d.hyps(a_nat);
  std::vector<Term> seen = g;
  seen.push_back(a);
  VarIndex z = FreshVar(std::span<const Term>(seen));
  Term zv = Term::Var(z);
  Term tmpl = BoolOf(Term::Eq(zv, Term::Zero()));
  Line base = OrI1(d, d.ZeroI(g), N(True()));
  Ctx gs = AddHyps(g, {NatOf(zv), tmpl});
  Line ne = d.Rule(R::kSuccNeqZero, {d.Hyp(NatOf(zv), gs)});
  Line step = OrI2(d, ne, Term::Eq(Term::Succ(zv), Term::Zero()));
  return d.RuleVT(R::kInd, z, tmpl, {base, step, a_nat});
}

Line Contradiction(Derivation& d, ContradictionDir dir, Line p_bool,
                   Line hyp_q, Line hyp_nq) {
  const char* rule = dir == ContradictionDir::kRefute ? "refute" : "prove";
  Term p = BoolArg(d, rule, p_bool);
  Term assumed = dir == ContradictionDir::kRefute ? p : N(p);
  Ctx want = AddHyps(d.hyps(p_bool), {assumed});
  if (d.hyps(hyp_q) != want || d.hyps(hyp_nq) != want) {
    Bad(rule, "contradictory premises must assume exactly the background "
              "and " + Print(assumed, &d.defs()));
  }
  if (!(d.concl(hyp_nq) == N(d.concl(hyp_q)))) {
    Bad(rule, "third premise must negate the second");
  }
  if (dir == ContradictionDir::kRefute) {
    return Cases(
        d, p_bool,
        [&](const Ctx&, Line) {
          return d.RuleT(R::kNegE, N(p), {hyp_q, hyp_nq});
        },
        [&](const Ctx&, Line hnp) { return hnp; });
  }
  return Cases(
      d, p_bool, [&](const Ctx&, Line hp) { return hp; },
      [&](const Ctx&, Line) {
        return d.RuleT(R::kNegE, p, {hyp_q, hyp_nq});
      });
}

Theorem TacticContradiction(const DefinitionList& defs, ContradictionDir dir,
                            const Theorem& p_bool, const Theorem& hyp_q,
                            const Theorem& hyp_nq) {
  Derivation d(defs);
  Line a = d.Given(p_bool), b = d.Given(hyp_q), c = d.Given(hyp_nq);
  return d.theorem(Contradiction(d, dir, a, b, c));
}

const std::vector<std::string>& DerivedRuleNames() {
  static const std::vector<std::string> names = {
      "andI",  "andE1",  "andE2",  "impI",   "impE",   "iffI",  "iffE1",
      "iffE2", "eqT",    "negTI",  "negTE",  "orTI",   "orTE",  "andTI",
      "andTE", "impTI",  "impTE",  "iffTI",  "iffTE1", "iffTE2", "STI",
      "STE",   "PTI",    "PTE",    "eqTI",   "condTI"};
  return names;
}

Line Derived(Derivation& d, const std::string& name,
             const std::vector<Line>& p) {
  using Fn = std::function<Line()>;
  const std::map<std::string, std::pair<std::size_t, Fn>> table = {
      {"andI", {2, [&] { return AndI(d, p[0], p[1]); }}},
      {"andE1", {1, [&] { return AndE(d, p[0], 0); }}},
      {"andE2", {1, [&] { return AndE(d, p[0], 1); }}},
      {"impI", {2, [&] { return ImpI(d, p[0], p[1]); }}},
      {"impE", {2, [&] { return ImpE(d, p[0], p[1]); }}},
      {"iffI",
       {4,
        [&] {
          SameHyps(d, "iffI", p[0], p[1]);
          return AndI(d, ImpI(d, p[0], p[2]), ImpI(d, p[1], p[3]));
        }}},
      {"iffE1",
       {2,
        [&] {
          IffSides("iffE1", d.concl(p[0]));
          return ImpE(d, AndE(d, p[0], 0), p[1]);
        }}},
      {"iffE2",
       {2,
        [&] {
          IffSides("iffE2", d.concl(p[0]));
          return ImpE(d, AndE(d, p[0], 1), p[1]);
        }}},
      {"eqT", {2, [&] { return EqT(d, p[0], p[1]); }}},
      {"negTI", {1, [&] { return NegTI(d, p[0]); }}},
      {"negTE", {1, [&] { return NegTE(d, p[0]); }}},
      {"orTI", {2, [&] { return OrTI(d, p[0], p[1]); }}},
      {"orTE", {1, [&] { return OrTE(d, p[0]); }}},
      {"andTI", {2, [&] { return AndTI(d, p[0], p[1]); }}},
      {"andTE", {1, [&] { return AndTE(d, p[0]); }}},
      {"impTI", {2, [&] { return ImpTI(d, p[0], p[1]); }}},
      {"impTE", {1, [&] { return ImpTE(d, p[0]); }}},
      {"iffTI", {2, [&] { return IffTI(d, p[0], p[1]); }}},
      {"iffTE1", {1, [&] { return IffTE(d, p[0], true); }}},
      {"iffTE2", {1, [&] { return IffTE(d, p[0], false); }}},
      {"STI",
       {1,
        [&] {
          NatArg(d, "STI", p[0]);
          return d.Rule(R::kSuccEqI, {p[0]});
        }}},
      {"STE",
       {1,
        [&] {
          NatArg(d, "STE", p[0]);
          return d.Rule(R::kSuccEqE, {p[0]});
        }}},
      {"PTI", {1, [&] { return d.Rule(R::kPredNatI, {p[0]}); }}},
      {"PTE", {1, [&] { return d.Rule(R::kPredNatE, {p[0]}); }}},
      {"eqTI", {2, [&] { return EqTI(d, p[0], p[1]); }}},
      {"condTI", {3, [&] { return CondTI(d, p[0], p[1], p[2]); }}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw TacticError("unknown derived rule '" + name + "'");
  Count(name, p, it->second.first);
  try {
    return it->second.second();
  } catch (const RuleError& e) {
    Bad(name, e.what());
  }
}

Theorem TacticDerived(const DefinitionList& defs, const std::string& name,
                      const std::vector<Theorem>& premises) {
  Derivation d(defs);
  std::vector<Line> lines;
  for (const Theorem& t : premises) lines.push_back(d.Given(t));
  return d.theorem(Derived(d, name, lines));
}

}  // namespace ga
