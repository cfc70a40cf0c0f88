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

// Concrete syntax for terms and definition files.
//
//   t ::= t '?' t ':' t | t '<->' t | t '->' t | t '\/' t | t '/\' t
//       | t '=' t | t '!=' t | '~' t | 'forall' x '.' t | 'exists' x '.' t
//       | '0' | NAT | 'v' NAT | 'S(' t ')' | 'P(' t ')' | 'true' | 'false'
//       | 'nat(' t ')' | 'bool(' t ')' | IDENT ['(' t {',' t} ')'] | '(' t ')'
//
// Decimal literals are numerals. 'dN(...)' applies definition N directly.

#ifndef GA_SYNTAX_HPP_
#define GA_SYNTAX_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ga/definitions.hpp"
#include "ga/term.hpp"

namespace ga {

inline constexpr Nat kMaxLiteral = 10000;

struct ParseContext {
  const DefinitionList* defs = nullptr;
  // Named free variables.
  std::map<std::string, VarIndex> vars;
  // When set, unknown identifiers become new variables instead of errors.
  bool auto_vars = false;
};

Term ParseTerm(std::string_view text, ParseContext& ctx);
Term ParseTerm(std::string_view text, const DefinitionList* defs = nullptr);

// Text that parses back to the same term. Definition names come from defs
// when given.
std::string Print(const Term& t, const DefinitionList* defs = nullptr);

// Appends the definitions of a .gad text to defs. Names in the text may refer
// to each other in any order. 'include "f.gad"' lines load other files first,
// relative to base_dir.
void LoadDefinitions(std::string_view text, DefinitionList& defs,
                     const std::filesystem::path& base_dir = {},
                     std::set<std::filesystem::path>* loaded = nullptr);
void LoadDefinitionFile(const std::filesystem::path& file,
                        DefinitionList& defs,
                        std::set<std::filesystem::path>* loaded = nullptr);

std::string ReadFile(const std::filesystem::path& file);

}  // namespace ga

#endif  // GA_SYNTAX_HPP_
