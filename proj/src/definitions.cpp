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

#include "ga/definitions.hpp"

namespace ga {

std::size_t BodyArity(const Term& body) {
  auto fv = FreeVars(body);
  return fv.empty() ? 0 : static_cast<std::size_t>(*fv.rbegin()) + 1;
}

DefIndex DefinitionList::Add(std::string name, Term body) {
  Definition d;
  d.name = std::move(name);
  d.arity = BodyArity(body);
  d.body = std::move(body);
  defs_.push_back(std::move(d));
  return static_cast<DefIndex>(defs_.size() - 1);
}

DefIndex DefinitionList::AddNative(std::string name, std::size_t arity,
                                   std::shared_ptr<const NativeFunction> fn) {
  Definition d;
  d.name = std::move(name);
  d.arity = arity;
  d.native = std::move(fn);
  defs_.push_back(std::move(d));
  return static_cast<DefIndex>(defs_.size() - 1);
}

DefIndex DefinitionList::Reserve(std::string name, std::size_t arity) {
  Definition d;
  d.name = std::move(name);
  d.arity = arity;
  defs_.push_back(std::move(d));
  return static_cast<DefIndex>(defs_.size() - 1);
}

void DefinitionList::SetBody(DefIndex i, Term body) {
  Definition& d = defs_.at(i);
  d.arity = BodyArity(body);
  d.body = std::move(body);
}

const Definition& DefinitionList::at(DefIndex i) const {
  if (i >= defs_.size()) {
    throw Error("definition index " + std::to_string(i) + " out of range");
  }
  return defs_[i];
}

std::size_t DefinitionList::Arity(DefIndex i) const { return at(i).arity; }

std::optional<DefIndex> DefinitionList::Find(const std::string& name) const {
  for (std::size_t i = defs_.size(); i-- > 0;) {
    if (defs_[i].name == name) return static_cast<DefIndex>(i);
  }
  return std::nullopt;
}

}  // namespace ga
