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

#include "ga/term.hpp"

#include <algorithm>
#include <string>

namespace ga {
namespace internal {

struct Node {
  Kind kind;
  std::uint32_t index;
  bool pure;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
  std::vector<Term> kids;
};

}  // namespace internal

using internal::Node;

namespace {

std::size_t Mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const Term& ZeroTerm() {
  static const Term* zero = new Term(Term::Zero());
  return *zero;
}

}  // namespace

const char* KindName(Kind k) {
  switch (k) {
    case Kind::kVar: return "Var";
    case Kind::kZero: return "Zero";
    case Kind::kSucc: return "Succ";
    case Kind::kPred: return "Pred";
    case Kind::kNeg: return "Neg";
    case Kind::kOr: return "Or";
    case Kind::kEq: return "Eq";
    case Kind::kCond: return "Cond";
    case Kind::kApply: return "Apply";
    case Kind::kForall: return "Forall";
    case Kind::kExists: return "Exists";
  }
  return "?";
}

Term::Term() : Term(ZeroTerm()) {}

Term Term::Make(Kind k, std::uint32_t index, std::vector<Term> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  n->pure = k != Kind::kForall && k != Kind::kExists;
  n->hash = Mix(Mix(static_cast<std::size_t>(k) + 1, index), kids.size());
  n->size = 1;
  n->depth = 1;
  for (const Term& c : kids) {
    n->pure = n->pure && c.node_->pure;
    n->hash = Mix(n->hash, c.node_->hash);
    n->size += c.node_->size;
    n->depth = std::max(n->depth, c.node_->depth + 1);
  }
  n->kids = std::move(kids);
  return Term(std::move(n));
}

Term Term::Var(VarIndex v) { return Make(Kind::kVar, v, {}); }

Term Term::Zero() {
  static const std::shared_ptr<const Node> zero = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kZero;
    n->index = 0;
    n->pure = true;
    n->hash = Mix(Mix(static_cast<std::size_t>(Kind::kZero) + 1, 0), 0);
    n->size = 1;
    n->depth = 1;
    return n;
  }();
  return Term(zero);
}

Term Term::Succ(Term t) { return Make(Kind::kSucc, 0, {std::move(t)}); }
Term Term::Pred(Term t) { return Make(Kind::kPred, 0, {std::move(t)}); }
Term Term::Neg(Term t) { return Make(Kind::kNeg, 0, {std::move(t)}); }
Term Term::Or(Term l, Term r) {
  return Make(Kind::kOr, 0, {std::move(l), std::move(r)});
}
Term Term::Eq(Term l, Term r) {
  return Make(Kind::kEq, 0, {std::move(l), std::move(r)});
}
Term Term::Cond(Term c, Term a, Term b) {
  return Make(Kind::kCond, 0, {std::move(c), std::move(a), std::move(b)});
}
Term Term::Apply(DefIndex d, std::vector<Term> args) {
  return Make(Kind::kApply, d, std::move(args));
}
Term Term::Forall(VarIndex v, Term body) {
  return Make(Kind::kForall, v, {std::move(body)});
}
Term Term::Exists(VarIndex v, Term body) {
  return Make(Kind::kExists, v, {std::move(body)});
}

Kind Term::kind() const { return node_->kind; }
std::uint32_t Term::index() const { return node_->index; }
std::span<const Term> Term::children() const { return node_->kids; }
const Term& Term::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::depth() const { return node_->depth; }
std::size_t Term::hash() const { return node_->hash; }
bool Term::pure() const { return node_->pure; }

bool operator==(const Term& a, const Term& b) {
  const Node* x = a.node_.get();
  const Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->size != y->size || x->kind != y->kind ||
      x->index != y->index || x->kids.size() != y->kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x->kids.size(); ++i) {
    if (!(x->kids[i] == y->kids[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  const Node* x = a.node_.get();
  const Node* y = b.node_.get();
  if (x == y) return std::strong_ordering::equal;
  if (auto c = x->kind <=> y->kind; c != 0) return c;
  if (auto c = x->index <=> y->index; c != 0) return c;
  if (auto c = x->kids.size() <=> y->kids.size(); c != 0) return c;
  for (std::size_t i = 0; i < x->kids.size(); ++i) {
    if (auto c = x->kids[i] <=> y->kids[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term True() { return Term::Eq(Term::Zero(), Term::Zero()); }
Term False() { return Term::Eq(Term::Zero(), Term::Succ(Term::Zero())); }
Term NatOf(Term a) { return Term::Eq(a, a); }
Term BoolOf(Term p) { return Term::Or(p, Term::Neg(p)); }
Term And(Term p, Term q) {
  return Term::Neg(Term::Or(Term::Neg(std::move(p)), Term::Neg(std::move(q))));
}
Term Implies(Term p, Term q) {
  return Term::Or(Term::Neg(std::move(p)), std::move(q));
}
Term Iff(Term p, Term q) { return And(Implies(p, q), Implies(q, p)); }
Term Neq(Term a, Term b) {
  return Term::Neg(Term::Eq(std::move(a), std::move(b)));
}

Term Numeral(Nat n) {
  Term t = Term::Zero();
  for (Nat i = 0; i < n; ++i) t = Term::Succ(t);
  return t;
}

std::optional<Nat> NumeralValue(const Term& t) {
  Nat n = 0;
  const Term* cur = &t;
  while (cur->is(Kind::kSucc)) {
    ++n;
    cur = &cur->child(0);
  }
  if (!cur->is(Kind::kZero)) return std::nullopt;
  return n;
}

namespace {

void CollectFree(const Term& t, std::vector<VarIndex>& bound,
                 std::set<VarIndex>& out) {
  switch (t.kind()) {
    case Kind::kVar:
      if (std::find(bound.begin(), bound.end(), t.index()) == bound.end()) {
        out.insert(t.index());
      }
      return;
    case Kind::kForall:
    case Kind::kExists:
      bound.push_back(t.index());
      CollectFree(t.child(0), bound, out);
      bound.pop_back();
      return;
    default:
      for (const Term& c : t.children()) CollectFree(c, bound, out);
  }
}

bool Occurs(const Term& t, VarIndex v) {
  switch (t.kind()) {
    case Kind::kVar:
      return t.index() == v;
    case Kind::kForall:
    case Kind::kExists:
      return t.index() != v && Occurs(t.child(0), v);
    default:
      for (const Term& c : t.children()) {
        if (Occurs(c, v)) return true;
      }
      return false;
  }
}

void MaxVarRec(const Term& t, std::optional<VarIndex>& m) {
  if (t.is(Kind::kVar) || t.is(Kind::kForall) || t.is(Kind::kExists)) {
    if (!m || *m < t.index()) m = t.index();
  }
  for (const Term& c : t.children()) MaxVarRec(c, m);
}

}  // namespace

std::set<VarIndex> FreeVars(const Term& t) {
  std::set<VarIndex> out;
  std::vector<VarIndex> bound;
  CollectFree(t, bound, out);
  return out;
}

bool OccursFree(const Term& t, VarIndex v) { return Occurs(t, v); }

bool HasExactlyFree(const Term& t, VarIndex v) {
  auto fv = FreeVars(t);
  return fv.size() == 1 && *fv.begin() == v;
}

bool Closed(const Term& t) { return FreeVars(t).empty(); }

std::optional<VarIndex> MaxVar(const Term& t) {
  std::optional<VarIndex> m;
  MaxVarRec(t, m);
  return m;
}

VarIndex FreshVar(std::span<const Term> terms) {
  VarIndex next = 0;
  for (const Term& t : terms) {
    if (auto m = MaxVar(t); m && *m + 1 > next) next = *m + 1;
  }
  return next;
}

VarIndex FreshVar(std::initializer_list<const Term*> terms) {
  VarIndex next = 0;
  for (const Term* t : terms) {
    if (auto m = MaxVar(*t); m && *m + 1 > next) next = *m + 1;
  }
  return next;
}

namespace {

Term Rebuild(const Term& t, std::vector<Term> kids) {
  switch (t.kind()) {
    case Kind::kSucc: return Term::Succ(std::move(kids[0]));
    case Kind::kPred: return Term::Pred(std::move(kids[0]));
    case Kind::kNeg: return Term::Neg(std::move(kids[0]));
    case Kind::kOr: return Term::Or(std::move(kids[0]), std::move(kids[1]));
    case Kind::kEq: return Term::Eq(std::move(kids[0]), std::move(kids[1]));
    case Kind::kCond:
      return Term::Cond(std::move(kids[0]), std::move(kids[1]),
                        std::move(kids[2]));
    case Kind::kApply: return Term::Apply(t.index(), std::move(kids));
    case Kind::kForall: return Term::Forall(t.index(), std::move(kids[0]));
    case Kind::kExists: return Term::Exists(t.index(), std::move(kids[0]));
    case Kind::kVar:
    case Kind::kZero:
      return t;
  }
  return t;
}

// The substitution map only contains variables that are still free here.
Term SubstRec(const Term& t, const std::map<VarIndex, Term>& s,
              const std::map<VarIndex, std::set<VarIndex>>& fv) {
  switch (t.kind()) {
    case Kind::kVar: {
      auto it = s.find(t.index());
      return it == s.end() ? t : it->second;
    }
    case Kind::kZero:
      return t;
    case Kind::kForall:
    case Kind::kExists: {
      VarIndex b = t.index();
      std::map<VarIndex, Term> inner;
      for (const auto& [v, r] : s) {
        if (v == b || !Occurs(t.child(0), v)) continue;
        if (fv.at(v).count(b)) {
          throw CaptureError("substituting v" + std::to_string(v) +
                             " would capture v" + std::to_string(b));
        }
        inner.emplace(v, r);
      }
      if (inner.empty()) return t;
      return Rebuild(t, {SubstRec(t.child(0), inner, fv)});
    }
    default: {
      std::vector<Term> kids;
      kids.reserve(t.arity());
      bool changed = false;
      for (const Term& c : t.children()) {
        kids.push_back(SubstRec(c, s, fv));
        changed = changed || kids.back().node() != c.node();
      }
      return changed ? Rebuild(t, std::move(kids)) : t;
    }
  }
}

}  // namespace

Term SubstMany(const Term& t, const std::map<VarIndex, Term>& s) {
  if (s.empty()) return t;
  std::map<VarIndex, std::set<VarIndex>> fv;
  for (const auto& [v, r] : s) fv.emplace(v, FreeVars(r));
  return SubstRec(t, s, fv);
}

Term Subst(const Term& t, VarIndex v, const Term& r) {
  return SubstMany(t, {{v, r}});
}

Term RenameBound(const Term& binder, VarIndex fresh) {
  if (!binder.is(Kind::kForall) && !binder.is(Kind::kExists)) {
    throw Error("RenameBound: not a binder");
  }
  Term body = Subst(binder.child(0), binder.index(), Term::Var(fresh));
  return binder.is(Kind::kForall) ? Term::Forall(fresh, body)
                                  : Term::Exists(fresh, body);
}

const Term& SubtermAt(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (std::uint32_t i : p) {
    if (i >= cur->arity()) throw PathError("path leaves the term");
    cur = &cur->child(i);
  }
  return *cur;
}

namespace {

Term ReplaceRec(const Term& t, const Path& p, std::size_t at, const Term& r) {
  if (at == p.size()) return r;
  if (p[at] >= t.arity()) throw PathError("path leaves the term");
  std::vector<Term> kids(t.children().begin(), t.children().end());
  kids[p[at]] = ReplaceRec(kids[p[at]], p, at + 1, r);
  return Rebuild(t, std::move(kids));
}

void FindRec(const Term& t, const Term& needle, Path& cur,
             std::vector<Path>& out) {
  if (t == needle) {
    out.push_back(cur);
    return;
  }
  if (t.size() <= needle.size()) return;
  for (std::uint32_t i = 0; i < t.arity(); ++i) {
    cur.push_back(i);
    FindRec(t.child(i), needle, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Term ReplaceAt(const Term& t, const Path& p, const Term& r) {
  return ReplaceRec(t, p, 0, r);
}

bool PathUnderBinder(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (std::uint32_t i : p) {
    if (cur->is(Kind::kForall) || cur->is(Kind::kExists)) return true;
    if (i >= cur->arity()) throw PathError("path leaves the term");
    cur = &cur->child(i);
  }
  return false;
}

std::vector<Path> FindAll(const Term& t, const Term& needle) {
  std::vector<Path> out;
  Path cur;
  FindRec(t, needle, cur, out);
  return out;
}

}  // namespace ga
