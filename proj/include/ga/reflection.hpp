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

// Quantifiers as proof search.
//
//   E+(v,p,0) = 0    E+(v,p,S(s)) = E+(v,p,s) \/ C(L(s), code(|- p[R(s)]))
//   A+(v,p,0) = 0    A+(v,p,S(s)) = A+(v,p,s) \/ C(s, code(v = v |- p))
//   E(v,p,s) = E+(v,p,s) ? 1 : A+(v,~p,s) ? 0 : E(v,p,S(s))
//   A(v,p,s) = A+(v,p,s) ? 1 : E+(v,~p,s) ? 0 : A(v,p,S(s))
//
// v is the code of a variable term and p the code of a term. The literal
// functions below evaluate these definitions exactly, except that only the
// points s' < scan_limit and the given probes are inspected; every other
// point contributes 0. The Reflection engine decides quantifiers by
// constructing the points at which the searches succeed.

#ifndef GA_REFLECTION_HPP_
#define GA_REFLECTION_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "ga/code.hpp"
#include "ga/eval.hpp"

namespace ga {

struct PlusOptions {
  std::uint64_t scan_limit = 1000;
  std::vector<Code> probes;
};

// 1 iff proof n (a code) proves the judgment j. Same as C(n, code(j)).
int ProvesCode(const DefinitionList& defs, const Code& n, const Judgment& j);

// Whether the single point s' fires: C(L(s'), code(|- p[R(s')])) for E+,
// C(s', code(v = v |- p)) for A+. Throw DecodeError for ill-formed v or p.
bool EplusPoint(const DefinitionList& defs, const Code& v, const Code& p,
                const Code& point);
bool AplusPoint(const DefinitionList& defs, const Code& v, const Code& p,
                const Code& point);

int Eplus(const DefinitionList& defs, const Code& v, const Code& p,
          const Code& s, const PlusOptions& opts = {});
int Aplus(const DefinitionList& defs, const Code& v, const Code& p,
          const Code& s, const PlusOptions& opts = {});

// The code of ~p from the code of p.
Code NegCode(const Code& p);

// E and A from s. One unit of fuel per s at which E+ or A+ can change (the
// scanned points and each probe + 1); between those points the recursion is
// idle and skipped. OutOfFuel when the fuel or the points run out.
EvalResult LiteralE(const DefinitionList& defs, const Code& v, const Code& p,
                    const Code& s, Fuel fuel, const PlusOptions& opts = {});
EvalResult LiteralA(const DefinitionList& defs, const Code& v, const Code& p,
                    const Code& s, Fuel fuel, const PlusOptions& opts = {});

// How the engine settled a quantifier. `proof` is the certificate found and
// `point` the s at which the literal search accepts it: E+ (or E+ on ~p)
// fires at point + 1 for a witness, A+ (or A+ on ~p) for a universal proof.
struct QuantifierVerdict {
  EvalResult result;
  std::optional<Nat> witness;
  std::optional<Proof> proof;
  std::optional<Code> point;
};

// Fuel one engine stage may spend evaluating and certifying an instance.
inline constexpr Fuel kWitnessFuel = 1000;
// Oracle calls nested deeper than this run out of fuel.
inline constexpr int kMaxOracleDepth = 4;
// Oracle arguments above this are refused (native failure).
inline constexpr Nat kMaxOracleArgument = 100000;

enum class Reserved { kEplus, kAplus, kE, kA, kC, kNeg };

// An evaluation environment for terms with quantifiers: the user definitions,
// the reserved oracles E+, A+, E, A, C and a ~ helper on codes, and one native
// definition per quantified subformula met by Elaborate.
class Reflection {
 public:
  explicit Reflection(const DefinitionList& user,
                      const PlusOptions& opts = {}, EvalOptions eval = {});
  ~Reflection();
  Reflection(const Reflection&) = delete;
  Reflection& operator=(const Reflection&) = delete;

  const DefinitionList& defs() const;
  // The definitions as given, before elaboration.
  const DefinitionList& user() const;
  DefIndex reserved(Reserved r) const;

  // Replaces each quantified subformula Qx.p by an application of its oracle
  // to the free variables of p other than x, in increasing order.
  Term Elaborate(const Term& t);
  // The quantifier an oracle definition stands for.
  std::optional<Term> OracleFormula(DefIndex i) const;

  // Adds a proof the negative and universal arms may use. Throws ProofError.
  void Plant(const Proof& p);

  // Decides Qx.p for p with no free variable other than x. p may contain
  // quantifiers.
  QuantifierVerdict Decide(Kind q, VarIndex x, const Term& p, Fuel fuel);

  // Elaborates and evaluates.
  EvalResult Evaluate(const Term& t, Fuel fuel, const Assignment& a = {});

  struct State;

 private:
  std::unique_ptr<State> state_;
};

struct Witness {
  Nat n;
  Proof proof;
};

// Tries n = 0..bound and returns the first n for which |- p[n] is
// certified. Finding nothing proves nothing.
std::optional<Witness> SearchExists(const DefinitionList& defs, VarIndex v,
                                    const Term& p, Nat bound, Fuel fuel);

}  // namespace ga

#endif  // GA_REFLECTION_HPP_
