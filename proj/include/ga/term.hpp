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

// Immutable, structurally shared terms of grounded arithmetic.

#ifndef GA_TERM_HPP_
#define GA_TERM_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ga/errors.hpp"

namespace ga {

using VarIndex = std::uint32_t;
using DefIndex = std::uint32_t;
using Nat = std::uint64_t;

enum class Kind : std::uint8_t {
  kVar,
  kZero,
  kSucc,
  kPred,
  kNeg,
  kOr,
  kEq,
  kCond,
  kApply,
  kForall,
  kExists,
};

const char* KindName(Kind k);

class Term;

namespace internal {
struct Node;
}

// A child position inside a term: Succ/Pred/Neg/binders have child 0, Or/Eq
// children 0 and 1, Cond 0..2 (condition, then, else), Apply one per argument.
using Path = std::vector<std::uint32_t>;

class Term {
 public:
  // The default term is Zero.
  Term();

  static Term Var(VarIndex v);
  static Term Zero();
  static Term Succ(Term t);
  static Term Pred(Term t);
  static Term Neg(Term t);
  static Term Or(Term l, Term r);
  static Term Eq(Term l, Term r);
  static Term Cond(Term c, Term a, Term b);
  static Term Apply(DefIndex d, std::vector<Term> args);
  static Term Forall(VarIndex v, Term body);
  static Term Exists(VarIndex v, Term body);

  Kind kind() const;
  // Variable index for Var, definition index for Apply, bound variable for
  // binders; zero otherwise.
  std::uint32_t index() const;
  std::span<const Term> children() const;
  const Term& child(std::size_t i) const;
  std::size_t arity() const { return children().size(); }

  // Number of nodes.
  std::size_t size() const;
  std::size_t depth() const;
  std::size_t hash() const;
  // True iff no quantifier node occurs.
  bool pure() const;

  bool is(Kind k) const { return kind() == k; }

  friend bool operator==(const Term& a, const Term& b);
  // Canonical total order used for hypothesis sets and coding.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

  const internal::Node* node() const { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const internal::Node> n)
      : node_(std::move(n)) {}
  static Term Make(Kind k, std::uint32_t index, std::vector<Term> kids);

  std::shared_ptr<const internal::Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Shorthands; each expands to core constructors only.
Term True();
Term False();
Term NatOf(Term a);
Term BoolOf(Term p);
Term And(Term p, Term q);
Term Implies(Term p, Term q);
Term Iff(Term p, Term q);
Term Neq(Term a, Term b);

Term Numeral(Nat n);
std::optional<Nat> NumeralValue(const Term& t);

std::set<VarIndex> FreeVars(const Term& t);
bool OccursFree(const Term& t, VarIndex v);
// True iff v is free in t and no other variable is.
bool HasExactlyFree(const Term& t, VarIndex v);
bool Closed(const Term& t);
// Least index not free or bound anywhere in the given terms.
VarIndex FreshVar(std::initializer_list<const Term*> terms);
VarIndex FreshVar(std::span<const Term> terms);
// Largest variable index mentioned (free or bound), if any.
std::optional<VarIndex> MaxVar(const Term& t);

// Replace free occurrences of v by r. Throws CaptureError when a binder on the
// way down binds v' with v' free in r (and v free below it).
Term Subst(const Term& t, VarIndex v, const Term& r);
// Simultaneous substitution.
Term SubstMany(const Term& t, const std::map<VarIndex, Term>& s);

// Renames a bound variable of a binder node to a fresh index.
Term RenameBound(const Term& binder, VarIndex fresh);

// Throws PathError when the path does not address a subterm.
const Term& SubtermAt(const Term& t, const Path& p);
Term ReplaceAt(const Term& t, const Path& p, const Term& r);
bool PathUnderBinder(const Term& t, const Path& p);

// All paths at which needle occurs, in preorder.
std::vector<Path> FindAll(const Term& t, const Term& needle);

}  // namespace ga

#endif  // GA_TERM_HPP_
