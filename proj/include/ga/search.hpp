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

// Bounded backward proof search over all primitive rules.
//
// Every rule is inverted against the goal; data the goal does not determine
// (cut formulas, equation sides, induction templates) ranges over a finite
// universe of terms. The search is exhaustive relative to that universe:
// each candidate step is confirmed by the kernel, and every proof tree of
// height <= depth whose free choices come from the universe is visited.

#ifndef GA_SEARCH_HPP_
#define GA_SEARCH_HPP_

#include <optional>
#include <vector>

#include "ga/kernel.hpp"

namespace ga {

struct SearchStats {
  std::size_t goals = 0;
  std::size_t candidates = 0;
};

// Subterms of the goal, one unfolding of each definition applied in it, and
// 0, S(0), 0 = 0.
std::vector<Term> SearchUniverse(const DefinitionList& defs,
                                 const Judgment& goal);

std::optional<Proof> BoundedSearch(const DefinitionList& defs,
                                   const Judgment& goal, int depth,
                                   const std::vector<Term>& universe,
                                   SearchStats* stats = nullptr);

}  // namespace ga

#endif  // GA_SEARCH_HPP_
