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

#include "ga/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "ga/certify.hpp"
#include "ga/derivation.hpp"
#include "ga/reflection.hpp"
#include "ga/search.hpp"
#include "ga/syntax.hpp"

namespace ga {
namespace {

using R = RuleId;

constexpr const char* kClassicalImpI = "classical-impI";
constexpr const char* kLiteralFold = "defIE.fwd-literal";

// Premise judgments and rule data of one generated case.
struct Instance {
  RuleApp app;
  std::vector<Judgment> prem;
};

// The user definitions plus two private ones for the canaries.
struct Env {
  DefinitionList defs;
  std::unique_ptr<Reflection> refl;
  DefIndex liar = 0;
  DefIndex nonstrict = 0;
  std::optional<DefIndex> add, sub, mult, even, gt;
  Nat domain = 5;
  Fuel fuel = 1000;
  // The eigenvariable ranges a little further so that witnesses built from
  // parameters (S(S(y)) at most) stay inside its range.
  std::optional<VarIndex> wide;

  Env(const DefinitionList& user, Nat m, Fuel f, EvalOptions eval)
      : defs(user), domain(m), fuel(f) {
    liar = defs.Reserve("canary.liar", 0);
    defs.SetBody(liar, Term::Neg(Term::Apply(liar, {})));
    Term v = Term::Var(0);
    nonstrict = defs.Add("canary.nonstrict", Term::Or(True(), NatOf(v)));
    auto find = [&](const char* name, std::size_t arity) {
      auto i = user.Find(name);
      if (i && user.at(*i).body && user.at(*i).body->pure() &&
          user.at(*i).arity == arity) {
        return i;
      }
      return std::optional<DefIndex>{};
    };
    add = find("add", 2);
    sub = find("sub", 2);
    mult = find("mult", 2);
    even = find("even", 1);
    gt = find("gt", 2);
    refl = std::make_unique<Reflection>(defs, PlusOptions{}, eval);
  }

  bool Sat(const Term& t, Fuel f, const Assignment& a) {
    return ValueOf(refl->Evaluate(t, f, a).outcome) == 1;
  }

  struct Verdict {
    bool holds = true;
    bool nonvacuous = false;
    Assignment cex;
    std::string outcome;
  };

  Verdict Check(const Judgment& j, Fuel hf, Fuel cf) {
    std::set<VarIndex> fv = FreeVars(j.concl());
    for (const Term& h : j.hyps()) {
      auto s = FreeVars(h);
      fv.insert(s.begin(), s.end());
    }
    std::vector<VarIndex> vars(fv.begin(), fv.end());
    std::vector<Nat> val(vars.size(), 0);
    Verdict out;
    while (true) {
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a.Set(vars[i], val[i]);
      bool hyps = true;
      for (const Term& h : j.hyps()) {
        if (!Sat(h, hf, a)) {
          hyps = false;
          break;
        }
      }
      if (hyps) {
        out.nonvacuous = true;
        EvalResult r = refl->Evaluate(j.concl(), cf, a);
        if (ValueOf(r.outcome) != 1) {
          out.holds = false;
          out.cex = a;
          out.outcome = ToString(r.outcome);
          return out;
        }
      }
      std::size_t i = 0;
      while (i < val.size() &&
             val[i] == domain + (vars[i] == wide ? 2 : 0)) {
        val[i++] = 0;
      }
      if (i == val.size()) return out;
      ++val[i];
    }
  }

  bool Holds(const Judgment& j) { return Check(j, fuel, fuel).holds; }
};

enum class Shape { kAny, kEq, kNeg, kNegEq, kOr, kNegOr };

bool HasShape(const Term& t, Shape s) {
  auto neg_of = [&](Kind k) { return t.is(Kind::kNeg) && t.child(0).is(k); };
  switch (s) {
    case Shape::kAny: return true;
    case Shape::kEq: return t.is(Kind::kEq);
    case Shape::kNeg: return t.is(Kind::kNeg);
    case Shape::kNegEq: return neg_of(Kind::kEq);
    case Shape::kOr: return t.is(Kind::kOr);
    case Shape::kNegOr: return neg_of(Kind::kOr);
  }
  return false;
}

class Gen {
 public:
  Gen(Env& env, std::uint64_t seed, std::uint64_t rule, std::size_t index,
      int depth, std::size_t max_hyps)
      : env_(env), depth_(std::max(depth, 1)), max_hyps_(max_hyps) {
    std::seed_seq seq{seed, rule, static_cast<std::uint64_t>(index)};
    rng_.seed(seq);
  }

  Env& env() { return env_; }
  int depth() const { return depth_; }
  std::size_t index() const { return index_; }

  std::size_t Below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool Coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  void SetVars(std::vector<VarIndex> v) { vars_ = std::move(v); }
  void AllowDivergent(bool b) { divergent_ = b; }

  Term Var() {
    if (vars_.empty()) return Numeral(Below(4));
    return Term::Var(vars_[Below(vars_.size())]);
  }

  Term Nat(int d) {
    if (d <= 0 || Coin(0.3)) {
      switch (Below(4)) {
        case 0:
        case 1: return Var();
        case 2: return Term::Zero();
        default: return Numeral(1 + Below(3));
      }
    }
    std::vector<DefIndex> fs;
    for (auto f : {env_.add, env_.sub, env_.mult}) {
      if (f) fs.push_back(*f);
    }
    switch (Below(fs.empty() ? 4 : 6)) {
      case 0: return Term::Succ(Nat(d - 1));
      case 1: return Term::Pred(Nat(d - 1));
      case 2: return Term::Cond(Formula(d - 1), Nat(d - 1), Nat(d - 1));
      case 3:
        if (env_.even) return Term::Apply(*env_.even, {Nat(d - 1)});
        return Term::Succ(Var());
      default: {
        DefIndex f = fs[Below(fs.size())];
        int sub = std::min(d - 1, f == env_.mult ? 0 : 1);
        return Term::Apply(f, {Nat(sub), Nat(sub)});
      }
    }
  }

  Term Formula(int d) {
    if (divergent_ && Coin(0.03)) return Term::Apply(env_.liar, {});
    if (d <= 0 || Coin(0.25)) {
      switch (Below(4)) {
        case 0: return Term::Eq(Nat(0), Nat(0));
        case 1: return True();
        case 2: return False();
        default: return Term::Eq(Var(), Nat(0));
      }
    }
    switch (Below(5)) {
      case 0: return Term::Eq(Nat(d - 1), Nat(d - 1));
      case 1: return Term::Neg(Formula(d - 1));
      case 2: return Term::Or(Formula(d - 1), Formula(d - 1));
      case 3:
        if (env_.gt) return Term::Apply(*env_.gt, {Nat(d - 1), Nat(d - 1)});
        return Term::Eq(Var(), Nat(d - 1));
      default: return Term::Eq(Var(), Nat(d - 1));
    }
  }

  std::vector<Term> Ctx() {
    std::vector<Term> g;
    if (Coin(0.5)) return g;
    std::size_t n = Below(max_hyps_ + 1);
    for (std::size_t i = 0; i < n; ++i) g.push_back(Formula(1));
    return CanonicalHyps(std::move(g));
  }

  // Two terms with equal values under every assignment.
  std::pair<Term, Term> EqualPair() {
    Term a = Nat(depth_ - 1);
    Term b = a;
    switch (Below(6)) {
      case 0: break;
      case 1:
        if (env_.add) b = Term::Apply(*env_.add, {a, Term::Zero()});
        break;
      case 2: b = Term::Pred(Term::Succ(a)); break;
      case 3:
        if (env_.sub) b = Term::Apply(*env_.sub, {a, Term::Zero()});
        break;
      case 4: b = Term::Cond(True(), a, Nat(1)); break;
      default:
        if (Closed(a)) {
          if (auto v = ValueOf(Eval(env_.defs, {}, a, env_.fuel))) {
            b = Numeral(*v);
          }
        }
        break;
    }
    if (Coin(0.5)) std::swap(a, b);
    return {a, b};
  }

  Term Candidate(Shape s, const std::vector<Term>& g) {
    if (!g.empty() && Coin(0.2)) {
      const Term& h = g[Below(g.size())];
      if (HasShape(h, s)) return h;
    }
    int d = depth_ - 1;
    switch (s) {
      case Shape::kAny:
        switch (Below(3)) {
          case 0: {
            auto [a, b] = EqualPair();
            return Term::Eq(a, b);
          }
          case 1: return Term::Or(Formula(d), Term::Neg(Formula(d)));
          default: return Formula(depth_);
        }
      case Shape::kEq: {
        if (Coin(0.6)) {
          auto [a, b] = EqualPair();
          return Term::Eq(a, b);
        }
        return Term::Eq(Nat(d), Nat(d));
      }
      case Shape::kNeg: return Term::Neg(Formula(d));
      case Shape::kNegEq:
        if (Coin(0.3)) return Term::Neg(Term::Eq(Term::Succ(Nat(d)), Term::Zero()));
        return Term::Neg(Term::Eq(Nat(d), Nat(d)));
      case Shape::kOr:
        if (Coin(0.5)) return Term::Or(Candidate(Shape::kAny, g), Formula(d));
        return Term::Or(Formula(d), Formula(d));
      case Shape::kNegOr: return Term::Neg(Term::Or(Formula(d), Formula(d)));
    }
    return True();
  }

  Term Fallback(Shape s) {
    Term sx = Term::Succ(Var());
    Term ne = Term::Neg(Term::Eq(sx, Term::Zero()));
    switch (s) {
      case Shape::kAny: return True();
      case Shape::kEq: {
        Term a = Nat(depth_ - 1);
        return Term::Eq(a, a);
      }
      case Shape::kNeg:
      case Shape::kNegEq: return ne;
      case Shape::kOr: return Term::Or(True(), Formula(1));
      case Shape::kNegOr: return Term::Neg(Term::Or(False(), Term::Eq(sx, Term::Zero())));
    }
    return True();
  }

  // A conclusion c of the given shape for which G |- c holds.
  Term TrueConcl(const std::vector<Term>& g, Shape s) {
    for (int i = 0; i < 20; ++i) {
      Term c = Candidate(s, g);
      if (env_.Holds(Judgment(g, c))) return c;
    }
    return Fallback(s);
  }

  // A nonempty set of at most three positions of needle in t.
  std::vector<Path> Holes(const Term& t, const Term& needle) {
    std::vector<Path> all;
    for (Path& p : FindAll(t, needle)) {
      if (!PathUnderBinder(t, p)) all.push_back(std::move(p));
    }
    std::vector<Path> out;
    for (const Path& p : all) {
      if (out.size() < 3 && Coin(0.6)) out.push_back(p);
    }
    if (out.empty() && !all.empty()) out.push_back(all[Below(all.size())]);
    return out;
  }

 private:
  Env& env_;
  std::mt19937_64 rng_;
  int depth_;
  std::size_t max_hyps_;
  std::size_t index_ = 0;
  std::vector<VarIndex> vars_{0, 1};
  bool divergent_ = true;
};

Judgment J(std::vector<Term> g, Term c) {
  return Judgment(std::move(g), std::move(c));
}

RuleApp App(R r, std::vector<Term> terms = {}) {
  RuleApp a;
  a.rule = r;
  a.terms = std::move(terms);
  return a;
}

std::vector<Term> With(const std::vector<Term>& g,
                       std::initializer_list<Term> extra) {
  return AddHyps(g, extra);
}

// -- the tiny corpus for quantifier rules. x is v2, the parameter y is v0.

constexpr VarIndex kX = 2;

Term X() { return Term::Var(kX); }
Term Y() { return Term::Var(0); }
Term S(Term t) { return Term::Succ(std::move(t)); }
Term Eq(Term a, Term b) { return Term::Eq(std::move(a), std::move(b)); }

// Predicates whose universal closure the engine proves.
std::vector<Term> Universal(const Env& e) {
  return {Eq(X(), X()),
          Term::Neg(Eq(S(X()), Term::Zero())),
          Term::Neg(Term::Neg(Eq(X(), X()))),
          Term::Or(Eq(X(), X()), Eq(X(), Y())),
          Term::Or(Eq(X(), Y()), Term::Neg(Eq(S(X()), Term::Zero()))),
          Eq(Term::Pred(S(X())), X()),
          Term::Or(Term::Neg(Eq(S(X()), Term::Zero())), Term::Apply(e.liar, {}))};
}

// (p, a) with ~p[a] true.
std::vector<std::pair<Term, Term>> Refutable() {
  return {{Term::Neg(Eq(X(), Y())), Y()},
          {Eq(X(), Y()), S(Y())},
          {Eq(X(), S(Y())), Y()},
          {Term::Neg(Eq(S(X()), S(Y()))), Y()},
          {Term::Or(Eq(X(), Y()), Eq(X(), S(Y()))), S(S(Y()))}};
}

// (p, a) with p[a] true.
std::vector<std::pair<Term, Term>> Witnessed(const Env& e) {
  std::vector<std::pair<Term, Term>> out{
      {Eq(X(), Y()), Y()},
      {Eq(X(), S(Y())), S(Y())},
      {Eq(S(X()), S(S(Y()))), S(Y())},
      {Term::Neg(Eq(X(), Y())), S(Y())},
      {Term::Or(Eq(X(), Y()), False()), Y()}};
  if (e.add) {
    out.push_back({Eq(Term::Apply(*e.add, {X(), Y()}),
                      Term::Apply(*e.add, {Y(), Y()})),
                   Y()});
  }
  return out;
}

// p with ~p universally provable.
std::vector<Term> Empty() {
  return {Eq(S(X()), Term::Zero()), Term::Neg(Eq(X(), X())),
          Eq(S(S(X())), Term::Zero()),
          Term::Or(Term::Neg(Eq(X(), X())), Eq(S(X()), Term::Zero()))};
}

template <class T>
const T& Pick(Gen& g, const std::vector<T>& v) {
  return v[g.Below(v.size())];
}

// A conclusion for the eliminations that must not mention x.
Term SideConcl(Gen& g, const std::vector<Term>& ctx) {
  Term q = g.TrueConcl(ctx, Shape::kAny);
  return OccursFree(q, kX) ? True() : q;
}

// An inductive template in x over the parameter v0.
Term Inductive(Gen& g, const std::vector<Term>& ctx) {
  Env& e = g.env();
  g.SetVars({0, kX});
  for (int i = 0; i < 12; ++i) {
    Term p;
    switch (g.Below(4)) {
      case 0: p = Eq(g.Nat(2), g.Nat(2)); break;
      case 1: p = Term::Or(g.Formula(1), Term::Neg(g.Formula(1))); break;
      case 2: p = Term::Neg(Eq(g.Nat(1), g.Nat(1))); break;
      default: p = Term::Or(Eq(g.Nat(1), g.Nat(1)), g.Formula(1)); break;
    }
    if (!OccursFree(p, kX)) continue;
    Term base = Subst(p, kX, Term::Zero());
    Term step = Subst(p, kX, S(X()));
    if (e.Holds(J(ctx, base)) && e.Holds(J(With(ctx, {NatOf(X()), p}), step))) {
      g.SetVars({0, 1});
      return p;
    }
  }
  g.SetVars({0, 1});
  std::vector<Term> known{Eq(X(), X()),
                          Term::Or(Eq(X(), Term::Zero()),
                                   Term::Neg(Eq(X(), Term::Zero())))};
  if (e.add) {
    known.push_back(Eq(Term::Apply(*e.add, {Y(), X()}),
                       Term::Apply(*e.add, {X(), Y()})));
  }
  if (e.sub) {
    known.push_back(Eq(Term::Apply(*e.sub, {X(), X()}), Term::Zero()));
  }
  return Pick(g, known);
}

using Generator = std::function<Instance(Gen&)>;

const std::map<R, Generator>& Generators() {
  static const std::map<R, Generator> table = [] {
    std::map<R, Generator> m;
    m[R::kHyp] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = g.Formula(g.depth());
      RuleApp a = App(R::kHyp, {p});
      for (const Term& h : ctx) {
        if (!(h == p)) a.context.push_back(h);
      }
      return Instance{a, {}};
    };
    m[R::kWeaken] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term c = g.TrueConcl(ctx, Shape::kAny);
      return Instance{App(R::kWeaken, {g.Formula(1)}), {J(ctx, c)}};
    };
    m[R::kZeroI] = [](Gen& g) {
      RuleApp a = App(R::kZeroI);
      a.context = g.Ctx();
      return Instance{a, {}};
    };
    m[R::kEqSym] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kEqSym), {J(ctx, g.TrueConcl(ctx, Shape::kEq))}};
    };
    m[R::kEqSubst] = [](Gen& g) {
      auto ctx = g.Ctx();
      auto [a, b] = g.EqualPair();
      if (g.Coin(0.3)) {
        b = g.Nat(1);
        ctx = With(ctx, {Eq(a, b)});
      }
      Term t;
      switch (g.Below(4)) {
        case 0: t = Eq(a, a); break;
        case 1: t = Eq(S(a), S(a)); break;
        case 2: t = Term::Or(Eq(a, a), g.Formula(1)); break;
        default:
          t = Eq(a, g.Nat(1));
          ctx = With(ctx, {t});
          break;
      }
      RuleApp app = App(R::kEqSubst);
      app.paths = g.Holes(t, a);
      return Instance{app, {J(ctx, Eq(a, b)), J(ctx, t)}};
    };
    m[R::kDefFold] = [](Gen& g) {
      Env& e = g.env();
      auto ctx = g.Ctx();
      std::vector<DefIndex> ds;
      for (auto f : {e.add, e.sub, e.mult, e.even, e.gt}) {
        if (f) ds.push_back(*f);
      }
      DefIndex d = ds.empty() ? e.nonstrict : Pick(g, ds);
      std::vector<Term> args;
      std::map<VarIndex, Term> s;
      for (std::size_t i = 0; i < e.defs.at(d).arity; ++i) {
        args.push_back(g.Nat(1));
        s.emplace(static_cast<VarIndex>(i), args.back());
      }
      Term inst = SubstMany(*e.defs.at(d).body, s);
      Term t = d == e.gt || d == e.nonstrict ? Term::Or(inst, Term::Neg(inst))
                                             : Eq(inst, inst);
      if (g.Coin(0.2)) ctx = With(ctx, {t});
      RuleApp app = App(R::kDefFold, args);
      app.def = d;
      app.paths = g.Holes(t, inst);
      std::vector<Judgment> prem{J(ctx, t)};
      for (const Term& arg : args) prem.push_back(J(ctx, NatOf(arg)));
      return Instance{app, prem};
    };
    m[R::kDefUnfold] = [](Gen& g) {
      Env& e = g.env();
      auto ctx = g.Ctx();
      std::vector<DefIndex> ds{e.nonstrict};
      for (auto f : {e.add, e.sub, e.mult, e.even, e.gt}) {
        if (f) ds.push_back(*f);
      }
      DefIndex d = Pick(g, ds);
      std::vector<Term> args;
      for (std::size_t i = 0; i < e.defs.at(d).arity; ++i) {
        args.push_back(g.Nat(1));
      }
      Term call = Term::Apply(d, args);
      Term t = d == e.gt || d == e.nonstrict ? Term::Or(call, Term::Neg(call))
                                             : Eq(call, call);
      if (g.Coin(0.2)) ctx = With(ctx, {t});
      RuleApp app = App(R::kDefUnfold);
      app.def = d;
      app.paths = g.Holes(t, call);
      return Instance{app, {J(ctx, t)}};
    };
    m[R::kNegNegI] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kNegNegI), {J(ctx, g.TrueConcl(ctx, Shape::kAny))}};
    };
    m[R::kNegNegE] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term c = g.TrueConcl(ctx, Shape::kAny);
      return Instance{App(R::kNegNegE), {J(ctx, Term::Neg(Term::Neg(c)))}};
    };
    m[R::kNegE] = [](Gen& g) {
      Term h = g.Formula(1);
      auto ctx = With(g.Ctx(), {h, Term::Neg(h)});
      Term q = g.Coin(0.5) ? h : g.Formula(1);
      return Instance{App(R::kNegE, {g.Formula(g.depth())}),
                      {J(ctx, q), J(ctx, Term::Neg(q))}};
    };
    m[R::kOrI1] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = g.TrueConcl(ctx, Shape::kAny);
      return Instance{App(R::kOrI1, {g.Formula(g.depth())}), {J(ctx, p)}};
    };
    m[R::kOrI2] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term q = g.TrueConcl(ctx, Shape::kAny);
      return Instance{App(R::kOrI2, {g.Formula(g.depth())}), {J(ctx, q)}};
    };
    m[R::kOrI3] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term a = g.TrueConcl(ctx, Shape::kNeg);
      Term b = g.TrueConcl(ctx, Shape::kNeg);
      return Instance{App(R::kOrI3), {J(ctx, a), J(ctx, b)}};
    };
    m[R::kOrE1] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term d = g.TrueConcl(ctx, Shape::kOr);
      auto gp = With(ctx, {d.child(0)});
      auto gq = With(ctx, {d.child(1)});
      Term r = True();
      for (int i = 0; i < 10; ++i) {
        Term c = g.TrueConcl(gp, Shape::kAny);
        if (g.env().Holds(J(gq, c))) {
          r = c;
          break;
        }
      }
      return Instance{App(R::kOrE1), {J(ctx, d), J(gp, r), J(gq, r)}};
    };
    m[R::kOrE2] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kOrE2), {J(ctx, g.TrueConcl(ctx, Shape::kNegOr))}};
    };
    m[R::kOrE3] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kOrE3), {J(ctx, g.TrueConcl(ctx, Shape::kNegOr))}};
    };
    m[R::kSuccEqI] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kSuccEqI), {J(ctx, g.TrueConcl(ctx, Shape::kEq))}};
    };
    m[R::kSuccEqE] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term e = g.TrueConcl(ctx, Shape::kEq);
      return Instance{App(R::kSuccEqE),
                      {J(ctx, Eq(S(e.child(0)), S(e.child(1))))}};
    };
    m[R::kSuccNeqI] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kSuccNeqI),
                      {J(ctx, g.TrueConcl(ctx, Shape::kNegEq))}};
    };
    m[R::kSuccNeqE] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term e = g.TrueConcl(ctx, Shape::kNegEq).child(0);
      return Instance{App(R::kSuccNeqE),
                      {J(ctx, Term::Neg(Eq(S(e.child(0)), S(e.child(1)))))}};
    };
    auto nat_rule = [](R r) {
      return [r](Gen& g) {
        auto ctx = g.Ctx();
        return Instance{App(r), {J(ctx, NatOf(g.Nat(g.depth())))}};
      };
    };
    m[R::kSuccNeqZero] = nat_rule(R::kSuccNeqZero);
    m[R::kPredSucc] = nat_rule(R::kPredSucc);
    m[R::kPredNatI] = nat_rule(R::kPredNatI);
    m[R::kPredNatE] = [](Gen& g) {
      auto ctx = g.Ctx();
      return Instance{App(R::kPredNatE),
                      {J(ctx, NatOf(Term::Pred(g.Nat(g.depth() - 1))))}};
    };
    m[R::kCondI1] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term c = g.TrueConcl(ctx, Shape::kAny);
      return Instance{App(R::kCondI1, {g.Nat(2)}),
                      {J(ctx, c), J(ctx, NatOf(g.Nat(2)))}};
    };
    m[R::kCondI2] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term c = g.TrueConcl(ctx, Shape::kNeg);
      return Instance{App(R::kCondI2, {g.Nat(2)}),
                      {J(ctx, c), J(ctx, NatOf(g.Nat(2)))}};
    };
    m[R::kInd] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = Inductive(g, ctx);
      // Witnesses stay within domain + 1, the range the step is checked on.
      std::vector<Term> as{Y(), Term::Var(1), S(Y()), Term::Pred(Term::Var(1)),
                           Numeral(g.Below(g.env().domain + 2))};
      RuleApp app = App(R::kInd, {p});
      app.var = kX;
      return Instance{app,
                      {J(ctx, Subst(p, kX, Term::Zero())),
                       J(With(ctx, {NatOf(X()), p}), Subst(p, kX, S(X()))),
                       J(ctx, NatOf(Pick(g, as)))}};
    };
    m[R::kForallI1] = [](Gen& g) {
      auto ctx = g.Ctx();
      RuleApp app = App(R::kForallI1);
      app.var = kX;
      Term p = Pick(g, Universal(g.env()));
      return Instance{app, {J(With(ctx, {NatOf(X())}), p)}};
    };
    m[R::kForallE1] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = Pick(g, Universal(g.env()));
      return Instance{App(R::kForallE1),
                      {J(ctx, Term::Forall(kX, p)), J(ctx, NatOf(g.Nat(2)))}};
    };
    m[R::kForallI2] = [](Gen& g) {
      auto ctx = g.Ctx();
      auto [p, a] = Pick(g, Refutable());
      RuleApp app = App(R::kForallI2, {p});
      app.var = kX;
      return Instance{app,
                      {J(ctx, NatOf(a)), J(ctx, Term::Neg(Subst(p, kX, a)))}};
    };
    m[R::kForallE2] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = Pick(g, Refutable()).first;
      auto inner = With(ctx, {NatOf(X()), Term::Neg(p)});
      return Instance{App(R::kForallE2),
                      {J(ctx, Term::Neg(Term::Forall(kX, p))),
                       J(inner, SideConcl(g, inner))}};
    };
    m[R::kExistsI1] = [](Gen& g) {
      auto ctx = g.Ctx();
      auto [p, a] = Pick(g, Witnessed(g.env()));
      RuleApp app = App(R::kExistsI1, {p});
      app.var = kX;
      return Instance{app, {J(ctx, NatOf(a)), J(ctx, Subst(p, kX, a))}};
    };
    m[R::kExistsE1] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = Pick(g, Witnessed(g.env())).first;
      auto inner = With(ctx, {NatOf(X()), p});
      return Instance{App(R::kExistsE1),
                      {J(ctx, Term::Exists(kX, p)), J(inner, SideConcl(g, inner))}};
    };
    m[R::kExistsI2] = [](Gen& g) {
      auto ctx = g.Ctx();
      RuleApp app = App(R::kExistsI2);
      app.var = kX;
      Term p = Pick(g, Empty());
      return Instance{app, {J(With(ctx, {NatOf(X())}), Term::Neg(p))}};
    };
    m[R::kExistsE2] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = Pick(g, Empty());
      return Instance{App(R::kExistsE2),
                      {J(ctx, Term::Neg(Term::Exists(kX, p))),
                       J(ctx, NatOf(g.Nat(2)))}};
    };
    m[R::kForallInd] = [](Gen& g) {
      auto ctx = g.Ctx();
      Term p = Pick(g, Universal(g.env()));
      RuleApp app = App(R::kForallInd, {p});
      app.var = kX;
      return Instance{app,
                      {J(ctx, Subst(p, kX, Term::Zero())),
                       J(With(ctx, {NatOf(X()), p}), Subst(p, kX, S(X())))}};
    };
    return m;
  }();
  return table;
}

// A canary instance: the premises and the conclusion the broken rule draws.
struct CanaryInstance {
  std::string description;
  std::vector<Judgment> prem;
  Judgment concl;
};

CanaryInstance ClassicalImpI(Gen& g, std::size_t index) {
  Env& e = g.env();
  std::vector<Term> ctx;
  Term p = Term::Apply(e.liar, {});
  Term q = False();
  if (index != 0) {
    ctx = g.Ctx();
    if (g.Coin(0.5)) p = g.Formula(1);
    q = g.TrueConcl(With(ctx, {p}), Shape::kAny);
  }
  return {"classical ->I p=" + Print(p, &e.defs) + " q=" + Print(q, &e.defs),
          {J(With(ctx, {p}), q)},
          J(ctx, Implies(p, q))};
}

CanaryInstance LiteralFold(Gen& g, std::size_t index) {
  Env& e = g.env();
  std::vector<Term> ctx;
  Term arg = Term::Apply(e.liar, {});
  if (index != 0) {
    ctx = g.Ctx();
    arg = g.Nat(1);
  }
  Term inst = Subst(*e.defs.at(e.nonstrict).body, 0, arg);
  return {"defIE.fwd without argument premises, arg=" + Print(arg, &e.defs),
          {J(ctx, inst)},
          J(ctx, Term::Apply(e.nonstrict, {arg}))};
}

std::string Describe(const RuleApp& a, const DefinitionList& defs) {
  std::ostringstream out;
  out << RuleName(a.rule);
  auto list = [&](const char* key, const std::vector<Term>& ts) {
    if (ts.empty()) return;
    out << " " << key << "=[";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      out << (i ? "; " : "") << Print(ts[i], &defs);
    }
    out << "]";
  };
  list("terms", a.terms);
  if (!a.paths.empty()) {
    out << " paths=[";
    for (std::size_t i = 0; i < a.paths.size(); ++i) {
      out << (i ? " " : "") << "@";
      for (std::size_t k = 0; k < a.paths[i].size(); ++k) {
        out << (k ? "." : "") << a.paths[i][k];
      }
    }
    out << "]";
  }
  if (a.var) out << " var=v" << *a.var;
  if (a.def) out << " def=" << defs.at(*a.def).name;
  list("context", a.context);
  return out.str();
}

std::string PrintAssignment(const Assignment& a) {
  std::string s;
  for (const auto& [v, n] : a.entries()) {
    if (!s.empty()) s += ",";
    s += "v" + std::to_string(v) + "=" + std::to_string(n);
  }
  return s.empty() ? "-" : s;
}

void Record(Env& e, RuleReport& rep, std::size_t index,
            const std::string& description, const std::vector<Judgment>& prem,
            const Judgment& concl) {
  ++rep.generated;
  for (const Judgment& p : prem) {
    if (!e.Holds(p)) return;
  }
  ++rep.premises_hold;
  Env::Verdict v = e.Check(concl, e.fuel, 10 * e.fuel);
  if (v.nonvacuous) ++rep.firing;
  if (v.holds) return;
  Counterexample c;
  c.case_index = index;
  c.instance = description;
  for (const Judgment& p : prem) c.premises.push_back(Print(p, &e.defs));
  c.conclusion = Print(concl, &e.defs);
  c.assignment = v.cex;
  c.outcome = v.outcome;
  rep.counterexamples.push_back(std::move(c));
}

std::uint64_t Salt(const std::string& rule) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : rule) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  return h;
}

RuleReport RunRule(Env& e, const std::string& rule,
                   const RuleInstanceSpec& spec) {
  RuleReport rep;
  rep.rule = rule;
  rep.canary = rule == kClassicalImpI || rule == kLiteralFold;
  std::optional<RuleId> id = RuleByName(rule);
  if (!rep.canary && !id) throw Error("unknown rule '" + rule + "'");
  for (std::size_t i = spec.first_case; i < spec.first_case + spec.cases; ++i) {
    ++rep.cases;
    Gen g(e, spec.seed, Salt(rule), i, spec.depth, spec.max_hyps);
    if (rep.canary) {
      CanaryInstance c = rule == kClassicalImpI ? ClassicalImpI(g, i)
                                                : LiteralFold(g, i);
      Record(e, rep, i, c.description, c.prem, c.concl);
      continue;
    }
    const Generator& gen = Generators().at(*id);
    for (int attempt = 0; attempt < 8; ++attempt) {
      try {
        Instance inst = gen(g);
        Judgment concl = Conclude(e.defs, inst.app, inst.prem);
        Record(e, rep, i, Describe(inst.app, e.defs), inst.prem, concl);
        break;
      } catch (const Error&) {
      }
    }
  }
  return rep;
}

}  // namespace

bool RuleReport::passed() const {
  if (canary) return !counterexamples.empty();
  return counterexamples.empty() && generated == cases;
}

bool HarnessReport::passed() const {
  return std::all_of(rules.begin(), rules.end(),
                     [](const RuleReport& r) { return r.passed(); });
}

std::string HarnessReport::Serialize() const {
  std::ostringstream out;
  std::size_t cex = 0, canary_cex = 0, cases = 0;
  for (const RuleReport& r : rules) {
    out << "rule: " << r.rule << "\n"
        << "canary: " << (r.canary ? "true" : "false") << "\n"
        << "cases: " << r.cases << "\n"
        << "generated: " << r.generated << "\n"
        << "premises_hold: " << r.premises_hold << "\n"
        << "firing: " << r.firing << "\n"
        << "counterexamples: " << r.counterexamples.size() << "\n"
        << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
    for (const Counterexample& c : r.counterexamples) {
      out << "counterexample: case=" << c.case_index << " seed=" << spec.seed
          << " assignment=" << PrintAssignment(c.assignment)
          << " outcome=" << c.outcome << "\n"
          << "  instance: " << c.instance << "\n";
      for (const std::string& p : c.premises) out << "  premise: " << p << "\n";
      out << "  conclusion: " << c.conclusion << "\n";
    }
    out << "\n";
    cases += r.cases;
    (r.canary ? canary_cex : cex) += r.counterexamples.size();
  }
  out << "summary: seed=" << spec.seed << " domain=" << spec.domain
      << " fuel=" << spec.fuel << " depth=" << spec.depth
      << " equality="
      << (spec.equality == EqualitySemantics::kStandard ? "standard"
                                                        : "asymmetric")
      << " rules=" << rules.size() << " cases=" << cases
      << " counterexamples=" << cex << " canary_counterexamples=" << canary_cex
      << " verdict=" << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

const std::vector<std::string>& CanaryNames() {
  static const std::vector<std::string> names{kClassicalImpI, kLiteralFold};
  return names;
}

std::vector<std::string> HarnessRuleNames() {
  std::vector<std::string> out;
  for (RuleId r : AllRules()) out.push_back(RuleName(r));
  for (const std::string& c : CanaryNames()) out.push_back(c);
  return out;
}

bool HasGenerator(RuleId r) { return Generators().count(r) == 1; }

HarnessReport CheckRule(const DefinitionList& defs,
                        const RuleInstanceSpec& spec) {
  Env env(defs, spec.domain, spec.fuel, EvalOptions{spec.equality});
  env.wide = kX;
  HarnessReport rep;
  rep.spec = spec;
  std::vector<std::string> names;
  if (spec.rule == "all") {
    names = HarnessRuleNames();
  } else {
    names.push_back(spec.rule);
  }
  for (const std::string& n : names) rep.rules.push_back(RunRule(env, n, spec));
  return rep;
}

bool JudgmentHolds(const DefinitionList& defs, const Judgment& j, Nat domain,
                   Fuel hyp_fuel, Fuel concl_fuel, EvalOptions opts,
                   Assignment* cex) {
  Env env(defs, domain, hyp_fuel, opts);
  Env::Verdict v = env.Check(j, hyp_fuel, concl_fuel);
  if (!v.holds && cex) *cex = v.cex;
  return v.holds;
}

DeterminismReport CheckDeterminism(const DefinitionList& defs,
                                   std::size_t cases, int depth, Fuel fuel,
                                   std::uint64_t seed) {
  Env env(defs, 0, fuel, {});
  DeterminismReport rep;
  std::vector<Fuel> schedule;
  for (Fuel f : {fuel / 1000, fuel / 100, fuel / 10, fuel}) {
    if (f > 0 && (schedule.empty() || schedule.back() != f)) {
      schedule.push_back(f);
    }
  }
  for (std::size_t i = 0; i < cases; ++i) {
    Gen g(env, seed, Salt("determinism"), i, depth, 0);
    g.SetVars({});
    bool formula = g.Coin(0.5);
    Term t = formula ? g.Formula(depth) : g.Nat(depth);
    ++rep.terms;
    auto fail = [&](const std::string& why) {
      ++rep.violations;
      if (rep.details.size() < 20) {
        rep.details.push_back(Print(t, &env.defs) + ": " + why);
      }
    };
    std::optional<EvalResult> first;
    for (Fuel f : schedule) {
      EvalResult r = EvalDetailed(env.defs, {}, t, f);
      if (first) {
        if (IsValue(first->outcome) &&
            (r.outcome != first->outcome || r.used != first->used)) {
          fail("value " + ToString(first->outcome) + " became " +
               ToString(r.outcome) + " at fuel " + std::to_string(f));
        }
        if (std::holds_alternative<Stuck>(first->outcome) &&
            r.outcome != first->outcome) {
          fail("stuck became " + ToString(r.outcome));
        }
      }
      if (!first || !IsValue(first->outcome)) first = r;
    }
    EvalResult again = EvalDetailed(env.defs, {}, t, schedule.back());
    EvalResult last = EvalDetailed(env.defs, {}, t, schedule.back());
    if (again.outcome != last.outcome || again.used != last.used) {
      fail("two runs differ");
    }
    if (auto v = ValueOf(last.outcome)) {
      ++rep.values;
      if (formula && *v > 1) fail("formula reduced to " + std::to_string(*v));
    }
  }
  return rep;
}

bool ParadoxResult::passed() const {
  for (const auto& [f, o] : outcomes) {
    if (IsValue(o)) return false;
  }
  return certify == "not-value" && !bool_derived;
}

std::vector<ParadoxCase> StandardParadoxes(const DefinitionList& defs,
                                           Fuel max_fuel) {
  std::vector<Fuel> fuels;
  for (Fuel f = 100; f < max_fuel; f *= 10) fuels.push_back(f);
  fuels.push_back(max_fuel);
  std::vector<ParadoxCase> out;
  for (const char* n : {"liar", "curry", "truthteller", "etruthteller"}) {
    if (auto i = defs.Find(n); i && defs.at(*i).arity == 0) {
      out.push_back({n, Term::Apply(*i, {}), fuels});
    }
  }
  if (auto y = defs.Find("yablo"); y && defs.at(*y).arity == 1) {
    for (Nat k = 0; k < 3; ++k) {
      out.push_back({"yablo(" + std::to_string(k) + ")",
                     Term::Apply(*y, {Numeral(k)}), fuels});
    }
  }
  return out;
}

std::vector<ParadoxResult> ParadoxReport(const DefinitionList& defs,
                                         const std::vector<ParadoxCase>& cases,
                                         int search_depth) {
  Reflection refl(defs);
  std::vector<ParadoxResult> out;
  for (const ParadoxCase& c : cases) {
    ParadoxResult r;
    r.name = c.name;
    Fuel top = 0;
    for (Fuel f : c.fuels) {
      r.outcomes.emplace_back(f, refl.Evaluate(c.target, f).outcome);
      top = std::max(top, f);
    }
    try {
      Derivation d(refl.defs());
      Line l = CertifyTruth(d, refl.Elaborate(c.target), top);
      r.certify = Print(d.judgment(l), &refl.defs());
    } catch (const NotValue&) {
      r.certify = "not-value";
    } catch (const Uncertifiable& e) {
      r.certify = std::string("uncertifiable: ") + e.what();
    }
    Judgment goal({}, BoolOf(c.target));
    SearchStats stats;
    r.bool_derived =
        BoundedSearch(defs, goal, search_depth, SearchUniverse(defs, goal),
                      &stats)
            .has_value();
    r.goals = stats.goals;
    out.push_back(std::move(r));
  }
  return out;
}

std::string Serialize(const std::vector<ParadoxResult>& results,
                      const DefinitionList& defs) {
  (void)defs;
  std::ostringstream out;
  bool all = true;
  for (const ParadoxResult& r : results) {
    out << "paradox: " << r.name << "\n";
    for (const auto& [f, o] : r.outcomes) {
      out << "eval: fuel=" << f << " " << ToString(o) << "\n";
    }
    out << "certify: " << r.certify << "\n"
        << "bool_derived: " << (r.bool_derived ? "true" : "false")
        << " goals=" << r.goals << "\n"
        << "verdict: " << (r.passed() ? "pass" : "fail") << "\n\n";
    all = all && r.passed();
  }
  out << "summary: cases=" << results.size()
      << " verdict=" << (all ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace ga
