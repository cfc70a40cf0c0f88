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

#include "ga/certify.hpp"

#include <unordered_map>

#include "ga/syntax.hpp"

namespace ga {
namespace {

using R = RuleId;

class Certifier {
 public:
  Certifier(Derivation& d, Fuel fuel) : d_(d), fuel_(fuel) {}

  // Checks up front that t has a value, so the recursion below terminates.
  Nat Check(const Term& t) {
    EvalOutcome o = Eval(d_.defs(), {}, t, fuel_);
    if (!IsValue(o)) {
      throw NotValue(Print(t, &d_.defs()) + " does not reduce: " + ToString(o));
    }
    return *ValueOf(o);
  }

  Line Value(const Term& t) {
    if (auto it = values_.find(t); it != values_.end()) return it->second;
    Line l = ValueUncached(t);
    values_.emplace(t, l);
    return l;
  }

  // The proof of t or of ~t, and which one.
  std::pair<Line, bool> Truth(const Term& t) {
    if (auto it = truths_.find(t); it != truths_.end()) return it->second;
    auto r = TruthUncached(t);
    truths_.emplace(t, r);
    return r;
  }

 private:
  Nat ValueOfLine(Line l) { return *NumeralValue(d_.concl(l).child(1)); }

  Line Sym(Line l) { return d_.Rule(R::kEqSym, {l}); }

  // Rewrites the numeral of `eq` (t = n) back to t at `path` of `target`.
  Line Back(Line eq, Line target, Path path) {
    const Term c = d_.concl(eq);
    if (c.child(0) == c.child(1)) return target;
    return d_.EqSubst(Sym(eq), target, {std::move(path)});
  }

  [[noreturn]] void Refuse(const Term& t, const std::string& why) {
    throw Uncertifiable("cannot certify " + Print(t, &d_.defs()) + ": " + why);
  }

  const Definition& Def(const Term& t) {
    if (!d_.defs().Contains(t.index())) {
      throw NotValue(Print(t, &d_.defs()) + " uses an undefined definition");
    }
    const Definition& def = d_.defs().at(t.index());
    if (!def.body) Refuse(t, "'" + def.name + "' is native");
    return def;
  }

  // Arguments as numerals, with their certificates.
  std::pair<std::vector<Line>, std::vector<Term>> Args(const Term& t) {
    std::vector<Line> lines;
    std::vector<Term> nums;
    for (const Term& a : t.children()) {
      lines.push_back(Value(a));
      nums.push_back(d_.concl(lines.back()).child(1));
    }
    return {lines, nums};
  }

  Line Fold(const Term& t, const std::vector<Term>& nums, Line inst_line,
            Path path) {
    RuleApp app;
    app.rule = R::kDefFold;
    app.def = t.index();
    app.terms = nums;
    app.paths = {path};
    std::vector<Line> prem = {inst_line};
    for (const Term& n : nums) prem.push_back(NumeralNat(d_, *NumeralValue(n)));
    return d_.Apply(app, prem);
  }

  Term Instance(const Definition& def, const std::vector<Term>& nums) {
    std::map<VarIndex, Term> s;
    for (std::size_t i = 0; i < nums.size(); ++i) {
      s.emplace(static_cast<VarIndex>(i), nums[i]);
    }
    return SubstMany(*def.body, s);
  }

  Line ValueUncached(const Term& t) {
    switch (t.kind()) {
      case Kind::kZero:
        return d_.ZeroI({});
      case Kind::kSucc:
        return d_.Rule(R::kSuccEqI, {Value(t.child(0))});
      case Kind::kPred: {
        Line la = Value(t.child(0));
        Nat m = ValueOfLine(la);
        if (m == 0) Refuse(t, "P(0) = 0 is not derivable");
        Line ps = d_.Rule(R::kPredSucc, {NumeralNat(d_, m - 1)});
        return Back(la, ps, {0, 0});
      }
      case Kind::kCond: {
        auto [lc, holds] = Truth(t.child(0));
        Line branch = Value(t.child(holds ? 1 : 2));
        Line eq = holds ? d_.RuleT(R::kCondI1, t.child(2),
                                   {lc, NatFromEq(d_, branch)})
                        : d_.RuleT(R::kCondI2, t.child(1),
                                   {lc, NatFromEq(d_, branch)});
        // (c ? a : b) = a and a = n give (c ? a : b) = n.
        return d_.EqSubst(branch, eq, {{1}});
      }
      case Kind::kApply: {
        const Definition& def = Def(t);
        auto [lines, nums] = Args(t);
        Line inst = Value(Instance(def, nums));
        Line cur = Fold(t, nums, inst, {0});
        for (std::size_t i = 0; i < lines.size(); ++i) {
          cur = Back(lines[i], cur, {0, static_cast<std::uint32_t>(i)});
        }
        return cur;
      }
      case Kind::kNeg:
      case Kind::kOr:
      case Kind::kEq:
        Refuse(t, "a formula has no numeric certificate");
      case Kind::kVar:
        throw NotValue(Print(t, &d_.defs()) + " is not closed");
      case Kind::kForall:
      case Kind::kExists:
        throw ContractViolation("cannot certify a quantified term");
    }
    Refuse(t, "unknown term");
  }

  // ~(n = m) for n > m.
  Line Distinct(Nat n, Nat m) {
    Line l = d_.Rule(R::kSuccNeqZero, {NumeralNat(d_, n - m - 1)});
    for (Nat i = 0; i < m; ++i) l = d_.Rule(R::kSuccNeqI, {l});
    return l;
  }

  std::pair<Line, bool> TruthUncached(const Term& t) {
    switch (t.kind()) {
      case Kind::kEq: {
        Line la = Value(t.child(0));
        Line lb = Value(t.child(1));
        Nat n = ValueOfLine(la), m = ValueOfLine(lb);
        if (n == m) return {d_.EqSubst(Sym(lb), la, {{1}}), true};
        if (n < m) {
          Refuse(t, "an equation whose left side is smaller cannot be "
                    "refuted by the rules");
        }
        Line ne = Back(la, Distinct(n, m), {0, 0});
        return {Back(lb, ne, {0, 1}), false};
      }
      case Kind::kNeg: {
        auto [l, holds] = Truth(t.child(0));
        if (holds) return {d_.Rule(R::kNegNegI, {l}), false};
        return {l, true};
      }
      case Kind::kOr: {
        const Term& p = t.child(0);
        const Term& q = t.child(1);
        EvalOutcome op = Eval(d_.defs(), {}, p, fuel_);
        if (ValueOf(op) == Nat{1}) {
          return {d_.RuleT(R::kOrI1, q, {Truth(p).first}), true};
        }
        EvalOutcome oq = Eval(d_.defs(), {}, q, fuel_);
        if (ValueOf(oq) == Nat{1}) {
          return {d_.RuleT(R::kOrI2, p, {Truth(q).first}), true};
        }
        if (ValueOf(op) == Nat{0} && ValueOf(oq) == Nat{0}) {
          return {d_.Rule(R::kOrI3, {Truth(p).first, Truth(q).first}), false};
        }
        throw NotValue(Print(t, &d_.defs()) + " does not reduce");
      }
      case Kind::kApply: {
        const Definition& def = Def(t);
        auto [lines, nums] = Args(t);
        auto [inst, holds] = Truth(Instance(def, nums));
        Path root = holds ? Path{} : Path{0};
        Line cur = Fold(t, nums, inst, root);
        for (std::size_t i = 0; i < lines.size(); ++i) {
          Path p = root;
          p.push_back(static_cast<std::uint32_t>(i));
          cur = Back(lines[i], cur, p);
        }
        return {cur, holds};
      }
      case Kind::kCond:
        Refuse(t, "no rule reasons about a conditional formula");
      case Kind::kZero:
      case Kind::kSucc:
      case Kind::kPred:
        Refuse(t, "a number is not a formula");
      case Kind::kVar:
        throw NotValue(Print(t, &d_.defs()) + " is not closed");
      case Kind::kForall:
      case Kind::kExists:
        throw ContractViolation("cannot certify a quantified term");
    }
    Refuse(t, "unknown term");
  }

  Derivation& d_;
  Fuel fuel_;
  std::unordered_map<Term, Line, TermHash> values_;
  std::unordered_map<Term, std::pair<Line, bool>, TermHash> truths_;
};

}  // namespace

Line NumeralNat(Derivation& d, Nat n) {
  Line l = d.ZeroI({});
  for (Nat i = 0; i < n; ++i) l = d.Rule(R::kSuccEqI, {l});
  return l;
}

Line NatFromEq(Derivation& d, Line eq) {
  const Term c = d.concl(eq);
  if (!c.is(Kind::kEq)) throw TacticError("expected an equation");
  if (c.child(0) == c.child(1)) return eq;
  return d.EqSubst(d.Rule(R::kEqSym, {eq}), eq, {{1}});
}

Line CertifyValue(Derivation& d, const Term& t, Fuel fuel) {
  Certifier c(d, fuel);
  c.Check(t);
  return c.Value(t);
}

Line CertifyTruth(Derivation& d, const Term& t, Fuel fuel) {
  Certifier c(d, fuel);
  Nat v = c.Check(t);
  if (v > 1) {
    throw Uncertifiable(Print(t, &d.defs()) + " reduces to " +
                        std::to_string(v) + ", not to a truth value");
  }
  return c.Truth(t).first;
}

Proof EvalCertify(const DefinitionList& defs, const Term& t, Fuel fuel,
                  CertifyMode mode) {
  Derivation d(defs);
  Line l = mode == CertifyMode::kValue ? CertifyValue(d, t, fuel)
                                       : CertifyTruth(d, t, fuel);
  return d.Export(l);
}

}  // namespace ga
