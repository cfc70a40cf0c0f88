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

// Termination proofs for definitions of the form
//
//   f(x1, ..., xk, y) := (y = 0) ? base : step
//
// where step calls f only as f(x1, ..., xk, P(y)), and for non-recursive
// definitions built from total material.

#ifndef GA_PRIMREC_HPP_
#define GA_PRIMREC_HPP_

#include <unordered_map>

#include "ga/derivation.hpp"

namespace ga {

// Lines already known, keyed by the term a of their conclusion a = a.
using NatFacts = std::unordered_map<Term, Line, TermHash>;

// G |- a = a, where G is `context`. Looks in `known` and the context first,
// then works by structure. Throws TacticError.
Line ProveNat(Derivation& d, const Term& a, const std::vector<Term>& context,
              const NatFacts& known = {});

// G |- f(a1..an) = f(a1..an) from G |- ai = ai.
Line ProveTotal(Derivation& d, DefIndex f, const std::vector<Line>& arg_nats,
                const NatFacts& known = {});

// v0 = v0, ..., v(n-1) = v(n-1) |- f(v0..v(n-1)) = f(v0..v(n-1)).
Line PrimrecTermination(Derivation& d, DefIndex f);
Proof PrimrecTerminationProof(const DefinitionList& defs, DefIndex f);

}  // namespace ga

#endif  // GA_PRIMREC_HPP_
