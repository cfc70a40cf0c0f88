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

#include "ga/eval.hpp"

#include <vector>

namespace ga {

std::optional<Nat> Assignment::Lookup(VarIndex v) const {
  auto it = map_.find(v);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

const char* StuckReasonName(StuckReason r) {
  switch (r) {
    case StuckReason::kUnassignedVariable: return "unassigned-variable";
    case StuckReason::kUndefinedDefinition: return "undefined-definition";
    case StuckReason::kNativeFailure: return "native-failure";
    case StuckReason::kNonBoolean: return "non-boolean";
  }
  return "?";
}

std::string ToString(const EvalOutcome& o) {
  if (auto* v = std::get_if<Value>(&o)) return "value:" + std::to_string(v->n);
  if (std::holds_alternative<OutOfFuel>(o)) return "out-of-fuel";
  return std::string("stuck:") + StuckReasonName(std::get<Stuck>(o).reason);
}

std::optional<EvalOutcome> ParseOutcome(const std::string& s) {
  if (s == "out-of-fuel") return OutOfFuel{};
  if (s.rfind("value:", 0) == 0) {
    try {
      std::size_t pos = 0;
      Nat n = std::stoull(s.substr(6), &pos);
      if (pos == s.size() - 6) return Value{n};
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  if (s.rfind("stuck:", 0) == 0) {
    for (StuckReason r :
         {StuckReason::kUnassignedVariable, StuckReason::kUndefinedDefinition,
          StuckReason::kNativeFailure, StuckReason::kNonBoolean}) {
      if (s.substr(6) == StuckReasonName(r)) return Stuck{r};
    }
  }
  return std::nullopt;
}

namespace {

enum class RK : std::uint8_t { kValue, kOut, kStuck };

struct R {
  RK k = RK::kOut;
  Nat n = 0;
  Fuel used = 0;
  StuckReason why = StuckReason::kNonBoolean;
};

R V(Nat n, Fuel used) { return {RK::kValue, n, used, {}}; }
R Oof() { return {RK::kOut, 0, 0, {}}; }
R St(StuckReason r) { return {RK::kStuck, 0, 0, r}; }

struct Frame {
  const Term* t;
  std::int64_t env;
  Fuel budget;
  std::uint8_t state = 0;
  Fuel acc = 0;
  Nat val = 0;
  std::size_t j = 0;
  std::size_t mark = 0;
  R saved;
};

class Machine {
 public:
  Machine(const DefinitionList& defs, const Assignment& a, EvalOptions opts)
      : defs_(defs), assign_(a), opts_(opts) {}

  R Run(const Term& root, Fuel budget) {
    stack_.push_back(Frame{&root, -1, budget, 0, 0, 0, 0, 0, {}});
    R ret;
    while (!stack_.empty()) {
      std::size_t top = stack_.size() - 1;
      bool finished = Step(top, ret);
      if (finished) stack_.pop_back();
    }
    return ret;
  }

 private:
  void Push(const Term& t, std::int64_t env, Fuel budget) {
    stack_.push_back(Frame{&t, env, budget, 0, 0, 0, 0, 0, {}});
  }

  bool Bool(Nat n) const { return n <= 1; }

  // Advances frame `i`. Returns true with `ret` set when the frame is done;
  // otherwise a child frame has been pushed.
  bool Step(std::size_t i, R& ret) {
    Frame& f = stack_[i];
    const Term& t = *f.t;
    if (f.state == 0 && f.budget < 1) {
      ret = Oof();
      return true;
    }
    switch (t.kind()) {
      case Kind::kZero:
        ret = V(0, 1);
        return true;
      case Kind::kVar: {
        if (f.env >= 0) {
          auto [off, len] = envs_[f.env];
          if (t.index() >= len) {
            ret = St(StuckReason::kUnassignedVariable);
            return true;
          }
          Nat n = env_vals_[off + t.index()];
          // A parameter stands for the numeral of its value.
          ret = (n < f.budget) ? V(n, n + 1) : Oof();
          return true;
        }
        auto n = assign_.Lookup(t.index());
        ret = n ? V(*n, 1) : St(StuckReason::kUnassignedVariable);
        return true;
      }
      case Kind::kSucc:
      case Kind::kPred:
      case Kind::kNeg: {
        if (f.state == 0) {
          f.state = 1;
          Push(t.child(0), f.env, f.budget - 1);
          return false;
        }
        if (ret.k != RK::kValue) return true;
        Nat n = ret.n;
        Fuel used = ret.used + 1;
        if (t.is(Kind::kSucc)) {
          ret = V(n + 1, used);
        } else if (t.is(Kind::kPred)) {
          ret = V(n == 0 ? 0 : n - 1, used);
        } else {
          ret = Bool(n) ? V(1 - n, used) : St(StuckReason::kNonBoolean);
        }
        return true;
      }
      case Kind::kEq: {
        if (f.state == 0) {
          f.state = 1;
          Push(t.child(0), f.env, f.budget - 1);
          return false;
        }
        if (f.state == 1) {
          if (ret.k != RK::kValue) return true;
          f.val = ret.n;
          f.acc = 1 + ret.used;
          f.state = 2;
          Push(t.child(1), f.env, f.budget - f.acc);
          return false;
        }
        if (ret.k != RK::kValue) return true;
        Fuel used = f.acc + ret.used;
        Nat l = f.val, r = ret.n;
        if (l == r) {
          ret = V(1, used);
        } else if (opts_.equality == EqualitySemantics::kAsymmetric && l < r) {
          ret = St(StuckReason::kNonBoolean);
        } else {
          ret = V(0, used);
        }
        return true;
      }
      case Kind::kCond: {
        if (f.state == 0) {
          f.state = 1;
          Push(t.child(0), f.env, f.budget - 1);
          return false;
        }
        if (f.state == 1) {
          if (ret.k != RK::kValue) return true;
          if (!Bool(ret.n)) {
            ret = St(StuckReason::kNonBoolean);
            return true;
          }
          f.acc = 1 + ret.used;
          f.state = 2;
          Push(t.child(ret.n == 1 ? 1 : 2), f.env, f.budget - f.acc);
          return false;
        }
        if (ret.k == RK::kValue) ret.used += f.acc;
        return true;
      }
      case Kind::kOr:
        return StepOr(f, ret);
      case Kind::kApply:
        return StepApply(f, ret);
      case Kind::kForall:
      case Kind::kExists:
        throw ContractViolation(
            "quantifier node reached the evaluator; elaborate it first");
    }
    return true;
  }

  bool StepOr(Frame& f, R& ret) {
    const Term& t = *f.t;
    Fuel b = f.budget - 1;
    switch (f.state) {
      case 0:
        f.state = 1;
        Push(t.child(0), f.env, b);
        return false;
      case 1:
        f.saved = ret;
        if (ret.k == RK::kValue && ret.n == 1) {
          if (ret.used <= 1) {
            ret = V(1, ret.used + 1);
            return true;
          }
          // A smaller derivation through the right disjunct would count.
          f.state = 2;
          Push(t.child(1), f.env, ret.used - 1);
          return false;
        }
        f.state = ret.k == RK::kValue && ret.n == 0 ? 3
                  : ret.k == RK::kOut               ? 5
                                                    : 4;
        Push(t.child(1), f.env, b);
        return false;
      case 2: {
        Fuel best = f.saved.used;
        if (ret.k == RK::kValue && ret.n == 1 && ret.used < best) {
          best = ret.used;
        }
        ret = V(1, best + 1);
        return true;
      }
      case 3:
        if (ret.k == RK::kValue) {
          if (ret.n == 1) {
            ret = V(1, ret.used + 1);
          } else if (ret.n == 0) {
            Fuel total = f.saved.used + ret.used;
            ret = total <= b ? V(0, total + 1) : Oof();
          } else {
            ret = St(StuckReason::kNonBoolean);
          }
        }
        return true;
      case 4:
        if (ret.k == RK::kValue && ret.n == 1) {
          ret = V(1, ret.used + 1);
        } else if (ret.k != RK::kOut) {
          ret = f.saved.k == RK::kStuck ? f.saved
                                        : St(StuckReason::kNonBoolean);
        }
        return true;
      default:
        if (ret.k == RK::kValue && ret.n == 1) {
          ret = V(1, ret.used + 1);
        } else {
          ret = Oof();
        }
        return true;
    }
  }

  bool StepApply(Frame& f, R& ret) {
    const Term& t = *f.t;
    if (f.state == 0) {
      if (!defs_.Contains(t.index())) {
        ret = St(StuckReason::kUndefinedDefinition);
        return true;
      }
      const Definition& d = defs_.at(t.index());
      if (!d.body && !d.native) {
        ret = St(StuckReason::kUndefinedDefinition);
        return true;
      }
      if (d.arity != t.arity()) {
        throw ContractViolation("application of '" + d.name + "' with " +
                                std::to_string(t.arity()) +
                                " arguments, arity " +
                                std::to_string(d.arity));
      }
      f.acc = 1;
      f.mark = env_vals_.size();
      f.j = 0;
      f.state = 1;
      if (t.arity() > 0) {
        Push(t.child(0), f.env, f.budget - f.acc);
        return false;
      }
      ret = R{};
      ret.k = RK::kValue;
      return StepApplyArgsDone(f, ret);
    }
    if (f.state == 1) {
      if (ret.k != RK::kValue) {
        env_vals_.resize(f.mark);
        return true;
      }
      env_vals_.push_back(ret.n);
      f.acc += ret.used;
      ++f.j;
      if (f.j < t.arity()) {
        Push(t.child(f.j), f.env, f.budget - f.acc);
        return false;
      }
      return StepApplyArgsDone(f, ret);
    }
    // Body finished.
    envs_.pop_back();
    env_vals_.resize(f.mark);
    if (ret.k == RK::kValue) ret.used += f.acc;
    return true;
  }

  bool StepApplyArgsDone(Frame& f, R& ret) {
    const Definition& d = defs_.at(f.t->index());
    Fuel left = f.budget - f.acc;
    if (d.native) {
      std::span<const Nat> args(env_vals_.data() + f.mark,
                                env_vals_.size() - f.mark);
      EvalResult r = d.native->Call(args, left);
      env_vals_.resize(f.mark);
      if (auto* v = std::get_if<Value>(&r.outcome)) {
        ret = r.used <= left ? V(v->n, f.acc + r.used) : Oof();
      } else if (auto* s = std::get_if<Stuck>(&r.outcome)) {
        ret = St(s->reason);
      } else {
        ret = Oof();
      }
      return true;
    }
    envs_.emplace_back(f.mark, env_vals_.size() - f.mark);
    f.state = 2;
    Push(*d.body, static_cast<std::int64_t>(envs_.size() - 1), left);
    return false;
  }

  const DefinitionList& defs_;
  const Assignment& assign_;
  EvalOptions opts_;
  std::vector<Frame> stack_;
  std::vector<Nat> env_vals_;
  std::vector<std::pair<std::size_t, std::size_t>> envs_;
};

}  // namespace

EvalResult EvalDetailed(const DefinitionList& defs, const Assignment& a,
                        const Term& t, Fuel fuel, EvalOptions opts) {
  Machine m(defs, a, opts);
  R r = m.Run(t, fuel);
  switch (r.k) {
    case RK::kValue: return {Value{r.n}, r.used};
    case RK::kOut: return {OutOfFuel{}, 0};
    case RK::kStuck: return {Stuck{r.why}, 0};
  }
  return {OutOfFuel{}, 0};
}

EvalOutcome Eval(const DefinitionList& defs, const Assignment& a,
                 const Term& t, Fuel fuel) {
  return EvalDetailed(defs, a, t, fuel).outcome;
}

bool EvalWithin(const DefinitionList& defs, const Term& t, Fuel k) {
  return IsValue(Eval(defs, Assignment{}, t, k));
}

bool Satisfies(const DefinitionList& defs, const Assignment& a, const Term& t,
               Fuel fuel) {
  auto v = ValueOf(Eval(defs, a, t, fuel));
  return v && *v == 1;
}

}  // namespace ga
