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

// Fueled big-step evaluation.
//
// Fuel counts rule instances of the big-step derivation. A term reduces to a
// value within fuel f iff it has a derivation with at most f rule instances;
// when both disjuncts of an Or reduce to 1, the smaller derivation counts.
// Definition applications are call by value; a parameter inside a body stands
// for the numeral of its argument and costs what evaluating that numeral costs.

#ifndef GA_EVAL_HPP_
#define GA_EVAL_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "ga/definitions.hpp"
#include "ga/term.hpp"

namespace ga {

using Fuel = std::uint64_t;

class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const VarIndex, Nat>> init)
      : map_(init) {}

  void Set(VarIndex v, Nat n) { map_[v] = n; }
  void Erase(VarIndex v) { map_.erase(v); }
  std::optional<Nat> Lookup(VarIndex v) const;
  const std::map<VarIndex, Nat>& entries() const { return map_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<VarIndex, Nat> map_;
};

enum class StuckReason {
  kUnassignedVariable,
  kUndefinedDefinition,
  kNativeFailure,
  // A connective or conditional received a value other than 0 or 1.
  kNonBoolean,
};

const char* StuckReasonName(StuckReason r);

struct Value {
  Nat n;
  friend bool operator==(const Value&, const Value&) = default;
};
struct OutOfFuel {
  friend bool operator==(const OutOfFuel&, const OutOfFuel&) = default;
};
struct Stuck {
  StuckReason reason;
  friend bool operator==(const Stuck&, const Stuck&) = default;
};

using EvalOutcome = std::variant<Value, OutOfFuel, Stuck>;

// value:<n>, out-of-fuel, stuck:<reason>
std::string ToString(const EvalOutcome& o);
std::optional<EvalOutcome> ParseOutcome(const std::string& s);

struct EvalResult {
  EvalOutcome outcome;
  // Rule instances of the derivation found; meaningful for values.
  Fuel used = 0;
};

class NativeFunction {
 public:
  virtual ~NativeFunction() = default;
  // Called with argument values; the result's `used` must not exceed budget
  // and must not depend on budget when a value is returned.
  virtual EvalResult Call(std::span<const Nat> args, Fuel budget) const = 0;
};

enum class EqualitySemantics {
  kStandard,
  // a = b reduces to 0 only when the left value is larger, and is stuck when
  // it is smaller. Used to show which facts the rules cannot reach.
  kAsymmetric,
};

struct EvalOptions {
  EqualitySemantics equality = EqualitySemantics::kStandard;
};

EvalResult EvalDetailed(const DefinitionList& defs, const Assignment& a,
                        const Term& t, Fuel fuel, EvalOptions opts = {});
EvalOutcome Eval(const DefinitionList& defs, const Assignment& a,
                 const Term& t, Fuel fuel);
bool EvalWithin(const DefinitionList& defs, const Term& t, Fuel k);
bool Satisfies(const DefinitionList& defs, const Assignment& a, const Term& t,
               Fuel fuel);

inline bool IsValue(const EvalOutcome& o) {
  return std::holds_alternative<Value>(o);
}
inline std::optional<Nat> ValueOf(const EvalOutcome& o) {
  if (auto* v = std::get_if<Value>(&o)) return v->n;
  return std::nullopt;
}

}  // namespace ga

#endif  // GA_EVAL_HPP_
