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

#include "ga/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_map>

namespace ga {
namespace {

using K = Kind;
using R = RuleId;

struct Cand {
  RuleApp app;
  std::vector<Judgment> prem;
};

struct Node {
  Judgment j;
  RuleApp app;
  std::vector<std::shared_ptr<Node>> kids;
};

void AddUnique(std::vector<Term>& v, const Term& t) {
  if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
}

bool IsBinder(const Term& t) { return t.is(K::kForall) || t.is(K::kExists); }

// Distinct subterms outside binders.
void Collect(const Term& t, std::vector<Term>& out) {
  AddUnique(out, t);
  if (IsBinder(t)) return;
  for (const Term& c : t.children()) Collect(c, out);
}

std::vector<Term> Subterms(const Term& t) {
  std::vector<Term> out;
  Collect(t, out);
  return out;
}

// Each single position of needle in t, and all of them together.
std::vector<std::vector<Path>> HoleSets(const Term& t, const Term& needle) {
  std::vector<Path> all;
  for (Path& p : FindAll(t, needle)) {
    if (!PathUnderBinder(t, p)) all.push_back(std::move(p));
  }
  std::vector<std::vector<Path>> sets;
  for (const Path& p : all) sets.push_back({p});
  if (all.size() > 1) sets.push_back(all);
  return sets;
}

Term Fill(Term t, const std::vector<Path>& holes, const Term& r) {
  for (const Path& p : holes) t = ReplaceAt(t, p, r);
  return t;
}

bool Match(const Term& pat, const Term& t, std::map<VarIndex, Term>& s) {
  if (pat.is(K::kVar)) {
    auto [it, fresh] = s.emplace(pat.index(), t);
    return fresh || it->second == t;
  }
  if (pat.kind() != t.kind() || pat.index() != t.index() ||
      pat.arity() != t.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pat.arity(); ++i) {
    if (!Match(pat.child(i), t.child(i), s)) return false;
  }
  return true;
}

// (template p, witness a) with p[x := a] = t.
std::vector<std::pair<Term, Term>> Abstractions(const Term& t, VarIndex x) {
  std::vector<std::pair<Term, Term>> out{{t, Term::Zero()}};
  for (const Term& a : Subterms(t)) {
    for (const auto& holes : HoleSets(t, a)) {
      out.emplace_back(Fill(t, holes, Term::Var(x)), a);
    }
  }
  return out;
}

std::vector<Term> Without(const std::vector<Term>& g, const Term& h) {
  std::vector<Term> out;
  for (const Term& t : g) {
    if (!(t == h)) out.push_back(t);
  }
  return out;
}

class Searcher {
 public:
  Searcher(const DefinitionList& defs, const std::vector<Term>& universe,
           SearchStats* stats)
      : defs_(defs), u_(universe), stats_(stats) {}

  std::shared_ptr<Node> Prove(const Judgment& g, int depth) {
    if (depth <= 0) return nullptr;
    std::size_t h = Hash(g);
    auto& bucket = failed_[h];
    for (const auto& [j, d] : bucket) {
      if (j == g && d >= depth) return nullptr;
    }
    if (stats_) ++stats_->goals;
    std::vector<Cand> cands;
    Candidates(g, cands);
    for (const Cand& c : cands) {
      if (stats_) ++stats_->candidates;
      try {
        if (!(Conclude(defs_, c.app, c.prem) == g)) continue;
      } catch (const Error&) {
        continue;
      }
      auto n = std::make_shared<Node>(Node{g, c.app, {}});
      bool ok = true;
      for (const Judgment& p : c.prem) {
        auto k = Prove(p, depth - 1);
        if (!k) {
          ok = false;
          break;
        }
        n->kids.push_back(std::move(k));
      }
      if (ok) return n;
    }
    failed_[h].emplace_back(g, depth);
    return nullptr;
  }

 private:
  static std::size_t Hash(const Judgment& j) {
    std::size_t h = j.concl().hash();
    for (const Term& t : j.hyps()) h = h * 1000003u ^ t.hash();
    return h;
  }

  VarIndex Fresh(const Judgment& g) const {
    std::vector<Term> all = g.hyps();
    all.push_back(g.concl());
    all.insert(all.end(), u_.begin(), u_.end());
    return FreshVar(std::span<const Term>(all));
  }

  void Candidates(const Judgment& g, std::vector<Cand>& out) {
    const auto& G = g.hyps();
    const Term c = g.concl();
    auto J = [&](std::vector<Term> h, Term t) {
      return Judgment(std::move(h), std::move(t));
    };
    auto add = [&](R r, std::vector<Judgment> prem,
                   std::vector<Term> terms = {}) -> RuleApp& {
      RuleApp a;
      a.rule = r;
      a.terms = std::move(terms);
      out.push_back({std::move(a), std::move(prem)});
      return out.back().app;
    };
    auto is_neg = [](const Term& t, K k) {
      return t.is(K::kNeg) && t.child(0).is(k);
    };
    std::vector<Term> pool = u_;
    for (const Term& s : Subterms(c)) AddUnique(pool, s);
    VarIndex x = Fresh(g);
    Term xv = Term::Var(x);

    if (g.HasHyp(c)) add(R::kHyp, {}, {c}).context = Without(G, c);
    if (c == True()) add(R::kZeroI, {}).context = G;
    for (const Term& h : G) add(R::kWeaken, {J(Without(G, h), c)}, {h});

    if (c.is(K::kEq)) {
      const Term &a = c.child(0), &b = c.child(1);
      add(R::kEqSym, {J(G, Term::Eq(b, a))});
      add(R::kSuccEqE, {J(G, Term::Eq(Term::Succ(a), Term::Succ(b)))});
      if (a.is(K::kSucc) && b.is(K::kSucc)) {
        add(R::kSuccEqI, {J(G, Term::Eq(a.child(0), b.child(0)))});
      }
      if (a == b) {
        add(R::kPredNatE, {J(G, NatOf(Term::Pred(a)))});
        if (a.is(K::kPred)) add(R::kPredNatI, {J(G, NatOf(a.child(0)))});
      }
      if (a.is(K::kPred) && a.child(0).is(K::kSucc) && a.child(0).child(0) == b) {
        add(R::kPredSucc, {J(G, NatOf(b))});
      }
      if (a.is(K::kCond) && a.child(1) == b) {
        add(R::kCondI1, {J(G, a.child(0)), J(G, NatOf(b))}, {a.child(2)});
      }
      if (a.is(K::kCond) && a.child(2) == b) {
        add(R::kCondI2, {J(G, Term::Neg(a.child(0))), J(G, NatOf(b))},
            {a.child(1)});
      }
    }
    if (c.is(K::kNeg)) {
      const Term& in = c.child(0);
      if (in.is(K::kNeg)) add(R::kNegNegI, {J(G, in.child(0))});
      if (in.is(K::kOr)) {
        add(R::kOrI3, {J(G, Term::Neg(in.child(0))), J(G, Term::Neg(in.child(1)))});
      }
      for (const Term& q : pool) {
        add(R::kOrE2, {J(G, Term::Neg(Term::Or(in, q)))});
        add(R::kOrE3, {J(G, Term::Neg(Term::Or(q, in)))});
      }
      if (in.is(K::kEq)) {
        const Term &a = in.child(0), &b = in.child(1);
        add(R::kSuccNeqE,
            {J(G, Term::Neg(Term::Eq(Term::Succ(a), Term::Succ(b))))});
        if (a.is(K::kSucc) && b.is(K::kSucc)) {
          add(R::kSuccNeqI, {J(G, Term::Neg(Term::Eq(a.child(0), b.child(0))))});
        }
        if (a.is(K::kSucc) && b.is(K::kZero)) {
          add(R::kSuccNeqZero, {J(G, NatOf(a.child(0)))});
        }
      }
      if (in.is(K::kExists)) {
        Term body = in.child(0);
        RuleApp& r = add(R::kExistsI2, {J(AddHyps(G, {NatOf(Term::Var(in.index()))}),
                                          Term::Neg(body))});
        r.var = in.index();
      }
      if (is_neg(c, K::kForall)) {
        VarIndex y = in.index();
        for (const Term& a : pool) {
          try {
            RuleApp& r = add(R::kForallI2,
                             {J(G, NatOf(a)),
                              J(G, Term::Neg(Subst(in.child(0), y, a)))},
                             {in.child(0)});
            r.var = y;
          } catch (const CaptureError&) {
          }
        }
      }
      for (const auto& [p, a] : Abstractions(in, x)) {
        add(R::kExistsE2, {J(G, Term::Neg(Term::Exists(x, p))), J(G, NatOf(a))});
      }
    }
    if (c.is(K::kOr)) {
      add(R::kOrI1, {J(G, c.child(0))}, {c.child(1)});
      add(R::kOrI2, {J(G, c.child(1))}, {c.child(0)});
    }
    add(R::kNegNegE, {J(G, Term::Neg(Term::Neg(c)))});
    for (const Term& q : pool) {
      add(R::kNegE, {J(G, q), J(G, Term::Neg(q))}, {c});
    }
    for (const Term& p : pool) {
      for (const Term& q : pool) {
        add(R::kOrE1, {J(G, Term::Or(p, q)), J(AddHyps(G, {p}), c),
                       J(AddHyps(G, {q}), c)});
      }
    }

    // =E, defIE in both directions.
    for (const Term& b : Subterms(c)) {
      auto sets = HoleSets(c, b);
      for (const auto& holes : sets) {
        for (const Term& a : pool) {
          if (a == b) continue;
          add(R::kEqSubst, {J(G, Term::Eq(a, b)), J(G, Fill(c, holes, a))})
              .paths = holes;
        }
        if (b.is(K::kApply) && defs_.Contains(b.index()) &&
            defs_.at(b.index()).body && defs_.at(b.index()).body->pure()) {
          const Definition& d = defs_.at(b.index());
          std::map<VarIndex, Term> s;
          for (std::size_t i = 0; i < b.arity(); ++i) {
            s.emplace(static_cast<VarIndex>(i), b.child(i));
          }
          try {
            Term inst = SubstMany(*d.body, s);
            std::vector<Judgment> prem{J(G, Fill(c, holes, inst))};
            for (const Term& arg : b.children()) prem.push_back(J(G, NatOf(arg)));
            std::vector<Term> args(b.children().begin(), b.children().end());
            RuleApp& r = add(R::kDefFold, std::move(prem), args);
            r.def = b.index();
            r.paths = holes;
          } catch (const CaptureError&) {
          }
        }
        for (DefIndex i = 0; i < defs_.size(); ++i) {
          const Definition& d = defs_.at(i);
          if (!d.body || !d.body->pure()) continue;
          std::map<VarIndex, Term> s;
          if (!Match(*d.body, b, s)) continue;
          std::vector<Term> args;
          for (std::size_t k = 0; k < d.arity; ++k) {
            auto it = s.find(static_cast<VarIndex>(k));
            args.push_back(it == s.end() ? Term::Zero() : it->second);
          }
          RuleApp& r = add(R::kDefUnfold,
                           {J(G, Fill(c, holes, Term::Apply(i, args)))});
          r.def = i;
          r.paths = holes;
        }
      }
    }

    // Induction and the quantifier rules.
    Term nx = NatOf(xv);
    for (const auto& [p, a] : Abstractions(c, x)) {
      try {
        RuleApp& r = add(R::kInd,
                         {J(G, Subst(p, x, Term::Zero())),
                          J(AddHyps(G, {nx, p}), Subst(p, x, Term::Succ(xv))),
                          J(G, NatOf(a))},
                         {p});
        r.var = x;
      } catch (const CaptureError&) {
      }
      add(R::kForallE1, {J(G, Term::Forall(x, p)), J(G, NatOf(a))});
    }
    if (c.is(K::kForall)) {
      VarIndex y = c.index();
      const Term& p = c.child(0);
      Term ny = NatOf(Term::Var(y));
      add(R::kForallI1, {J(AddHyps(G, {ny}), p)}).var = y;
      try {
        RuleApp& r = add(R::kForallInd,
                         {J(G, Subst(p, y, Term::Zero())),
                          J(AddHyps(G, {ny, p}), Subst(p, y, Term::Succ(Term::Var(y))))},
                         {p});
        r.var = y;
      } catch (const CaptureError&) {
      }
    }
    if (c.is(K::kExists)) {
      VarIndex y = c.index();
      for (const Term& a : pool) {
        try {
          RuleApp& r = add(R::kExistsI1,
                           {J(G, NatOf(a)), J(G, Subst(c.child(0), y, a))},
                           {c.child(0)});
          r.var = y;
        } catch (const CaptureError&) {
        }
      }
    }
    for (const Term& u : u_) {
      for (const auto& [p, a] : Abstractions(u, x)) {
        (void)a;
        add(R::kExistsE1, {J(G, Term::Exists(x, p)), J(AddHyps(G, {nx, p}), c)});
        add(R::kForallE2, {J(G, Term::Neg(Term::Forall(x, p))),
                           J(AddHyps(G, {nx, Term::Neg(p)}), c)});
      }
    }
  }

  const DefinitionList& defs_;
  const std::vector<Term>& u_;
  SearchStats* stats_;
  std::unordered_map<std::size_t, std::vector<std::pair<Judgment, int>>>
      failed_;
};

std::size_t Flatten(const Node& n, Proof& out) {
  std::vector<std::size_t> prem;
  for (const auto& k : n.kids) prem.push_back(Flatten(*k, out));
  out.steps.push_back({n.j, n.app, std::move(prem)});
  return out.steps.size() - 1;
}

}  // namespace

std::vector<Term> SearchUniverse(const DefinitionList& defs,
                                 const Judgment& goal) {
  std::vector<Term> u;
  std::vector<Term> roots = goal.hyps();
  roots.push_back(goal.concl());
  for (const Term& r : roots) Collect(r, u);
  std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Term t = u[i];
    if (!t.is(K::kApply) || !defs.Contains(t.index())) continue;
    const Definition& d = defs.at(t.index());
    if (!d.body || !d.body->pure() || d.arity != t.arity()) continue;
    std::map<VarIndex, Term> s;
    for (std::size_t k = 0; k < t.arity(); ++k) {
      s.emplace(static_cast<VarIndex>(k), t.child(k));
    }
    try {
      Collect(SubstMany(*d.body, s), u);
    } catch (const CaptureError&) {
    }
  }
  AddUnique(u, Term::Zero());
  AddUnique(u, Term::Succ(Term::Zero()));
  AddUnique(u, True());
  return u;
}

std::optional<Proof> BoundedSearch(const DefinitionList& defs,
                                   const Judgment& goal, int depth,
                                   const std::vector<Term>& universe,
                                   SearchStats* stats) {
  Searcher s(defs, universe, stats);
  auto n = s.Prove(goal, depth);
  if (!n) return std::nullopt;
  Proof p;
  Flatten(*n, p);
  CheckProof(defs, p);
  return p;
}

}  // namespace ga
