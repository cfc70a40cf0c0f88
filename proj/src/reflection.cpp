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

#include "ga/reflection.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ga/certify.hpp"
#include "ga/derivation.hpp"
#include "ga/primrec.hpp"

namespace ga {
namespace {

VarIndex DecodeVar(const Code& v) {
  Term t = DecodeTerm(v);
  if (!t.is(Kind::kVar)) throw DecodeError("not the code of a variable");
  return t.index();
}

std::optional<Proof> TryDecodeProof(const Code& n) {
  try {
    Proof p = DecodeProof(n);
    if (p.steps.empty()) return std::nullopt;
    return p;
  } catch (const DecodeError&) {
    return std::nullopt;
  }
}

bool Checks(const DefinitionList& defs, const Proof& p) {
  try {
    CheckProof(defs, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Term NatHyp(VarIndex x) { return Term::Eq(Term::Var(x), Term::Var(x)); }

// Inspected points at or after `from`, in increasing order.
class Points {
 public:
  Points(const PlusOptions& o, const Code& from) : limit_(o.scan_limit) {
    for (const Code& p : o.probes) {
      if (p >= from && p >= Code(limit_)) probes_.push_back(p);
    }
    std::sort(probes_.begin(), probes_.end());
    probes_.erase(std::unique(probes_.begin(), probes_.end()), probes_.end());
    cur_ = from;
  }

  std::optional<Code> Next() {
    if (cur_ < Code(limit_)) {
      Code r = cur_;
      cur_ += 1;
      return r;
    }
    if (i_ < probes_.size()) return probes_[i_++];
    return std::nullopt;
  }

 private:
  std::uint64_t limit_;
  std::vector<Code> probes_;
  std::size_t i_ = 0;
  Code cur_;
};

template <class Fire>
int RunningOr(const PlusOptions& o, const Code& s, Fire fire) {
  for (std::uint64_t i = 0; i < o.scan_limit && Code(i) < s; ++i) {
    if (fire(Code(i))) return 1;
  }
  for (const Code& p : o.probes) {
    if (p >= Code(o.scan_limit) && p < s && fire(p)) return 1;
  }
  return 0;
}

// E and A share the recursion; they differ in which arm is tried first.
template <class Pos, class Neg>
EvalResult LiteralSearch(const PlusOptions& o, const Code& s, Fuel fuel,
                         Nat yes, Pos pos, Neg neg) {
  bool p = RunningOr(o, s, pos) == 1;
  bool n = RunningOr(o, s, neg) == 1;
  Points pts(o, s);
  Fuel used = 0;
  while (true) {
    if (used == fuel) return {OutOfFuel{}, 0};
    ++used;
    if (p) return {Value{yes}, used};
    if (n) return {Value{1 - yes}, used};
    auto next = pts.Next();
    if (!next) return {OutOfFuel{}, 0};
    p = pos(*next);
    n = neg(*next);
  }
}

}  // namespace

int ProvesCode(const DefinitionList& defs, const Code& n, const Judgment& j) {
  auto p = TryDecodeProof(n);
  if (!p || !(p->claim() == j)) return 0;
  return Checks(defs, *p) ? 1 : 0;
}

bool EplusPoint(const DefinitionList& defs, const Code& v, const Code& p,
                const Code& point) {
  VarIndex x = DecodeVar(v);
  Term body = DecodeTerm(p);
  auto [l, r] = Unpair(point);
  auto proof = TryDecodeProof(l);
  if (!proof) return false;
  const Judgment& claim = proof->claim();
  if (!claim.hyps().empty()) return false;
  Term target = body;
  if (OccursFree(body, x)) {
    // The numeral of R(s) has R(s) + 1 nodes; a larger one cannot match.
    if (r >= Code(claim.concl().size())) return false;
    target = Subst(body, x, Numeral(r.get_ui()));
  }
  return claim.concl() == target && Checks(defs, *proof);
}

bool AplusPoint(const DefinitionList& defs, const Code& v, const Code& p,
                const Code& point) {
  VarIndex x = DecodeVar(v);
  Judgment target({NatHyp(x)}, DecodeTerm(p));
  return ProvesCode(defs, point, target) == 1;
}

int Eplus(const DefinitionList& defs, const Code& v, const Code& p,
          const Code& s, const PlusOptions& opts) {
  DecodeVar(v);
  DecodeTerm(p);
  return RunningOr(opts, s, [&](const Code& c) {
    return EplusPoint(defs, v, p, c);
  });
}

int Aplus(const DefinitionList& defs, const Code& v, const Code& p,
          const Code& s, const PlusOptions& opts) {
  DecodeVar(v);
  DecodeTerm(p);
  return RunningOr(opts, s, [&](const Code& c) {
    return AplusPoint(defs, v, p, c);
  });
}

Code NegCode(const Code& p) { return Pair(Code(4), p); }

EvalResult LiteralE(const DefinitionList& defs, const Code& v, const Code& p,
                    const Code& s, Fuel fuel, const PlusOptions& opts) {
  DecodeVar(v);
  DecodeTerm(p);
  Code np = NegCode(p);
  return LiteralSearch(
      opts, s, fuel, 1,
      [&](const Code& c) { return EplusPoint(defs, v, p, c); },
      [&](const Code& c) { return AplusPoint(defs, v, np, c); });
}

EvalResult LiteralA(const DefinitionList& defs, const Code& v, const Code& p,
                    const Code& s, Fuel fuel, const PlusOptions& opts) {
  DecodeVar(v);
  DecodeTerm(p);
  Code np = NegCode(p);
  return LiteralSearch(
      opts, s, fuel, 1,
      [&](const Code& c) { return AplusPoint(defs, v, p, c); },
      [&](const Code& c) { return EplusPoint(defs, v, np, c); });
}

// -- the engine ----------------------------------------------------------

struct Reflection::State {
  DefinitionList user;
  DefinitionList defs;
  PlusOptions opts;
  EvalOptions eval;
  DefIndex base = 0;
  std::map<std::tuple<Kind, VarIndex, Term>, DefIndex> interned;
  std::map<DefIndex, Term> formulas;
  std::vector<Proof> store;

  Term Elaborate(const Term& t);
  QuantifierVerdict Engine(Kind q, VarIndex x, const Term& p, Fuel budget,
                           bool trace);
  std::optional<Proof> Universal(VarIndex x, const Term& goal);
};

namespace {

thread_local int oracle_depth = 0;

struct DepthGuard {
  DepthGuard() { ++oracle_depth; }
  ~DepthGuard() { --oracle_depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

EvalResult NativeFailure() { return {Stuck{StuckReason::kNativeFailure}, 0}; }

// Cost of a native E+ or A+ call: one per inspected point.
Fuel PlusCost(const PlusOptions& o, const Code& s) {
  Fuel c = 1;
  for (std::uint64_t i = 0; i < o.scan_limit && Code(i) < s; ++i) ++c;
  for (const Code& p : o.probes) {
    if (p >= Code(o.scan_limit) && p < s) ++c;
  }
  return c;
}

class PlusNative : public NativeFunction {
 public:
  PlusNative(const DefinitionList* user, const PlusOptions* o, bool exists)
      : user_(user), opts_(o), exists_(exists) {}
  EvalResult Call(std::span<const Nat> a, Fuel budget) const override {
    Code v(a[0]), p(a[1]), s(a[2]);
    Fuel cost = PlusCost(*opts_, s);
    if (cost > budget) return {OutOfFuel{}, 0};
    try {
      int r = exists_ ? Eplus(*user_, v, p, s, *opts_)
                      : Aplus(*user_, v, p, s, *opts_);
      return {Value{static_cast<Nat>(r)}, cost};
    } catch (const DecodeError&) {
      return NativeFailure();
    }
  }

 private:
  const DefinitionList* user_;
  const PlusOptions* opts_;
  bool exists_;
};

class CheckNative : public NativeFunction {
 public:
  explicit CheckNative(const DefinitionList* user) : user_(user) {}
  EvalResult Call(std::span<const Nat> a, Fuel budget) const override {
    if (budget < 1) return {OutOfFuel{}, 0};
    int r = ProofCheckC(*user_, Code(a[0]), Code(a[1]));
    return {Value{static_cast<Nat>(r)}, 1};
  }

 private:
  const DefinitionList* user_;
};

class NegNative : public NativeFunction {
 public:
  EvalResult Call(std::span<const Nat> a, Fuel budget) const override {
    if (budget < 1) return {OutOfFuel{}, 0};
    Code c = NegCode(Code(a[0]));
    if (!c.fits_ulong_p()) return NativeFailure();
    return {Value{c.get_ui()}, 1};
  }
};

class OracleNative : public NativeFunction {
 public:
  OracleNative(Reflection::State* st, Kind q, VarIndex x, Term body,
               std::vector<VarIndex> params)
      : st_(st), q_(q), x_(x), body_(std::move(body)),
        params_(std::move(params)) {}

  EvalResult Call(std::span<const Nat> a, Fuel budget) const override;

 private:
  Reflection::State* st_;
  Kind q_;
  VarIndex x_;
  Term body_;
  std::vector<VarIndex> params_;
};

// Proves G |- goal for a few goal shapes; G is ctx.
std::optional<Line> AutoProve(Derivation& d, const std::vector<Term>& ctx,
                              const Term& goal, int depth) {
  if (depth > 8) return std::nullopt;
  if (std::find(ctx.begin(), ctx.end(), goal) != ctx.end()) {
    return d.Hyp(goal, ctx);
  }
  try {
    switch (goal.kind()) {
      case Kind::kEq:
        if (goal.child(0) == goal.child(1)) {
          return ProveNat(d, goal.child(0), ctx);
        }
        if (goal.child(0).is(Kind::kPred) &&
            goal.child(0).child(0).is(Kind::kSucc) &&
            goal.child(0).child(0).child(0) == goal.child(1)) {
          Line n = ProveNat(d, goal.child(1), ctx);
          return d.Rule(RuleId::kPredSucc, {n});
        }
        break;
      case Kind::kNeg: {
        const Term& in = goal.child(0);
        if (in.is(Kind::kEq) && in.child(0).is(Kind::kSucc) &&
            in.child(1).is(Kind::kZero)) {
          Line n = ProveNat(d, in.child(0).child(0), ctx);
          return d.Rule(RuleId::kSuccNeqZero, {n});
        }
        if (in.is(Kind::kNeg)) {
          if (auto l = AutoProve(d, ctx, in.child(0), depth + 1)) {
            return d.Rule(RuleId::kNegNegI, {*l});
          }
        }
        if (in.is(Kind::kOr)) {
          auto a = AutoProve(d, ctx, Term::Neg(in.child(0)), depth + 1);
          if (!a) break;
          auto b = AutoProve(d, ctx, Term::Neg(in.child(1)), depth + 1);
          if (b) return d.Rule(RuleId::kOrI3, {*a, *b});
        }
        break;
      }
      case Kind::kOr:
        if (auto a = AutoProve(d, ctx, goal.child(0), depth + 1)) {
          return d.RuleT(RuleId::kOrI1, goal.child(1), {*a});
        }
        if (auto b = AutoProve(d, ctx, goal.child(1), depth + 1)) {
          return d.RuleT(RuleId::kOrI2, goal.child(0), {*b});
        }
        break;
      default:
        break;
    }
  } catch (const Error&) {
  }
  if (Closed(goal)) {
    try {
      Line l = CertifyTruth(d, goal, kWitnessFuel);
      if (d.concl(l) == goal) return d.WeakenTo(l, ctx);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

Term Rebuild(const Term& t, std::vector<Term> kids) {
  switch (t.kind()) {
    case Kind::kVar:
    case Kind::kZero:
      return t;
    case Kind::kSucc: return Term::Succ(kids[0]);
    case Kind::kPred: return Term::Pred(kids[0]);
    case Kind::kNeg: return Term::Neg(kids[0]);
    case Kind::kOr: return Term::Or(kids[0], kids[1]);
    case Kind::kEq: return Term::Eq(kids[0], kids[1]);
    case Kind::kCond: return Term::Cond(kids[0], kids[1], kids[2]);
    case Kind::kApply: return Term::Apply(t.index(), std::move(kids));
    case Kind::kForall: return Term::Forall(t.index(), kids[0]);
    case Kind::kExists: return Term::Exists(t.index(), kids[0]);
  }
  return t;
}

}  // namespace

EvalResult OracleNative::Call(std::span<const Nat> a, Fuel budget) const {
  std::map<VarIndex, Term> sub;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (a[i] > kMaxOracleArgument) return NativeFailure();
    sub.emplace(params_[i], Numeral(a[i]));
  }
  return st_->Engine(q_, x_, SubstMany(body_, sub), budget, false).result;
}

Term Reflection::State::Elaborate(const Term& t) {
  if (t.pure()) return t;
  if (t.is(Kind::kForall) || t.is(Kind::kExists)) {
    Term body = Elaborate(t.child(0));
    VarIndex x = t.index();
    auto key = std::make_tuple(t.kind(), x, body);
    std::vector<VarIndex> params;
    for (VarIndex v : FreeVars(body)) {
      if (v != x) params.push_back(v);
    }
    auto it = interned.find(key);
    DefIndex k;
    if (it != interned.end()) {
      k = it->second;
    } else {
      std::string name = std::string(t.is(Kind::kForall) ? "forall" : "exists") +
                         "." + std::to_string(interned.size());
      k = defs.AddNative(
          name, params.size(),
          std::make_shared<OracleNative>(this, t.kind(), x, body, params));
      interned.emplace(key, k);
      formulas.emplace(k, t.is(Kind::kForall) ? Term::Forall(x, body)
                                              : Term::Exists(x, body));
    }
    std::vector<Term> args;
    for (VarIndex v : params) args.push_back(Term::Var(v));
    return Term::Apply(k, std::move(args));
  }
  std::vector<Term> kids;
  for (const Term& c : t.children()) kids.push_back(Elaborate(c));
  return Rebuild(t, std::move(kids));
}

std::optional<Proof> Reflection::State::Universal(VarIndex x,
                                                  const Term& goal) {
  Judgment target({NatHyp(x)}, goal);
  for (const Proof& p : store) {
    if (p.claim() == target) return p;
  }
  Derivation d(defs);
  auto l = AutoProve(d, target.hyps(), goal, 0);
  if (!l) return std::nullopt;
  return d.Export(*l);
}

// Stage 0 looks for a universal proof (of ~p for E, of p for A). Stage
// k + 1 tries the witness k. A stage costs one unit plus the fuel its
// evaluation uses, or kWitnessFuel when the instance has no value; costs do
// not depend on the budget, so a Value stays put when the budget grows.
QuantifierVerdict Reflection::State::Engine(Kind q, VarIndex x, const Term& p,
                                            Fuel budget, bool trace) {
  QuantifierVerdict out{{OutOfFuel{}, 0}, {}, {}, {}};
  DepthGuard guard;
  if (oracle_depth > kMaxOracleDepth) return out;
  const bool exists = q == Kind::kExists;
  const Nat found = exists ? 1 : 0;
  Fuel used = 0;
  if (budget < 1) return out;
  used = 1;
  if (auto u = Universal(x, exists ? Term::Neg(p) : p)) {
    out.result = {Value{1 - found}, used};
    if (trace) {
      out.point = EncodeProof(*u);
      out.proof = std::move(*u);
    }
    return out;
  }
  for (Nat k = 0;; ++k) {
    if (used == budget) return out;
    ++used;
    Term inst = Subst(p, x, Numeral(k));
    Fuel cap = kWitnessFuel;
    bool truncated = false;
    if (budget - used < cap) {
      cap = budget - used;
      truncated = true;
    }
    EvalResult r = EvalDetailed(defs, {}, inst, cap, eval);
    auto v = ValueOf(r.outcome);
    if (!v) {
      if (truncated) return out;
      used += cap;
      continue;
    }
    used += r.used;
    if (*v != found) continue;
    try {
      Derivation d(defs);
      Line l = CertifyTruth(d, inst, kWitnessFuel);
      out.result = {Value{found}, used};
      out.witness = k;
      if (trace) {
        Proof pr = d.Export(l);
        out.point = Pair(EncodeProof(pr), Code(k));
        out.proof = std::move(pr);
      }
      return out;
    } catch (const Uncertifiable&) {
    } catch (const NotValue&) {
    }
  }
}

Reflection::Reflection(const DefinitionList& user, const PlusOptions& opts,
                       EvalOptions eval)
    : state_(std::make_unique<State>()) {
  State& s = *state_;
  s.user = user;
  s.defs = user;
  s.opts = opts;
  s.eval = eval;
  s.base = static_cast<DefIndex>(user.size());
  DefIndex ep = s.defs.AddNative(
      "E+", 3, std::make_shared<PlusNative>(&s.user, &s.opts, true));
  DefIndex ap = s.defs.AddNative(
      "A+", 3, std::make_shared<PlusNative>(&s.user, &s.opts, false));
  DefIndex e = s.defs.Reserve("E", 3);
  DefIndex a = s.defs.Reserve("A", 3);
  s.defs.AddNative("C", 2, std::make_shared<CheckNative>(&s.user));
  DefIndex neg = s.defs.AddNative("negcode", 1, std::make_shared<NegNative>());
  Term v = Term::Var(0), p = Term::Var(1), st = Term::Var(2);
  Term one = Numeral(1);
  auto arm = [&](DefIndex plus, Term code) {
    return Term::Eq(Term::Apply(plus, {v, std::move(code), st}), one);
  };
  auto body = [&](DefIndex self, DefIndex pos, DefIndex other) {
    Term recur = Term::Apply(self, {v, p, Term::Succ(st)});
    Term np = Term::Apply(neg, {p});
    return Term::Cond(arm(pos, p), one,
                      Term::Cond(arm(other, np), Term::Zero(), recur));
  };
  s.defs.SetBody(e, body(e, ep, ap));
  s.defs.SetBody(a, body(a, ap, ep));
  for (DefIndex i = 0; i < s.base; ++i) {
    const Definition& d = s.defs.at(i);
    if (d.body && !d.body->pure()) s.defs.SetBody(i, s.Elaborate(*d.body));
  }
}

Reflection::~Reflection() = default;

const DefinitionList& Reflection::defs() const { return state_->defs; }
const DefinitionList& Reflection::user() const { return state_->user; }

DefIndex Reflection::reserved(Reserved r) const {
  return state_->base + static_cast<DefIndex>(r);
}

Term Reflection::Elaborate(const Term& t) { return state_->Elaborate(t); }

std::optional<Term> Reflection::OracleFormula(DefIndex i) const {
  auto it = state_->formulas.find(i);
  if (it == state_->formulas.end()) return std::nullopt;
  return it->second;
}

void Reflection::Plant(const Proof& p) {
  if (p.steps.empty()) throw ProofError(0, "empty proof");
  CheckProof(state_->defs, p);
  state_->store.push_back(p);
}

QuantifierVerdict Reflection::Decide(Kind q, VarIndex x, const Term& p,
                                     Fuel fuel) {
  if (q != Kind::kExists && q != Kind::kForall) {
    throw Error("Decide needs a quantifier kind");
  }
  Term body = state_->Elaborate(p);
  for (VarIndex v : FreeVars(body)) {
    if (v != x) throw Error("quantified body has another free variable");
  }
  return state_->Engine(q, x, body, fuel, true);
}

EvalResult Reflection::Evaluate(const Term& t, Fuel fuel,
                                const Assignment& a) {
  return EvalDetailed(state_->defs, a, state_->Elaborate(t), fuel,
                      state_->eval);
}

std::optional<Witness> SearchExists(const DefinitionList& defs, VarIndex v,
                                    const Term& p, Nat bound, Fuel fuel) {
  for (Nat n = 0; n <= bound; ++n) {
    Term inst = Subst(p, v, Numeral(n));
    if (ValueOf(Eval(defs, {}, inst, fuel)) != 1) continue;
    try {
      Proof pr = EvalCertify(defs, inst, fuel, CertifyMode::kTruth);
      if (pr.claim().concl() == inst) return Witness{n, std::move(pr)};
    } catch (const Uncertifiable&) {
    } catch (const NotValue&) {
    }
  }
  return std::nullopt;
}

}  // namespace ga
