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

#ifndef GA_DEFINITIONS_HPP_
#define GA_DEFINITIONS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ga/term.hpp"

namespace ga {

class NativeFunction;

struct Definition {
  std::string name;
  // Empty for native entries.
  std::optional<Term> body;
  std::shared_ptr<const NativeFunction> native;
  std::size_t arity = 0;
};

// Arity of a body: one more than its largest free variable, 0 when closed.
std::size_t BodyArity(const Term& body);

class DefinitionList {
 public:
  DefinitionList() = default;

  DefIndex Add(std::string name, Term body);
  DefIndex AddNative(std::string name, std::size_t arity,
                     std::shared_ptr<const NativeFunction> fn);
  // Reserves an index whose body is filled later (used for recursion).
  DefIndex Reserve(std::string name, std::size_t arity);
  void SetBody(DefIndex i, Term body);

  std::size_t size() const { return defs_.size(); }
  bool Contains(DefIndex i) const { return i < defs_.size(); }
  const Definition& at(DefIndex i) const;
  std::size_t Arity(DefIndex i) const;
  std::optional<DefIndex> Find(const std::string& name) const;
  const std::vector<Definition>& entries() const { return defs_; }

 private:
  std::vector<Definition> defs_;
};

}  // namespace ga

#endif  // GA_DEFINITIONS_HPP_
