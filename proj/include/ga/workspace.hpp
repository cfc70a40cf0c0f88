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

// What the command line tool works on: definition files in load order,
// proof scripts, and defaults for fuel and the harness.

#ifndef GA_WORKSPACE_HPP_
#define GA_WORKSPACE_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ga/eval.hpp"
#include "ga/kernel.hpp"
#include "ga/script.hpp"

namespace ga {

struct WorkspaceConfig {
  // For eval.
  Fuel fuel = 10000;
  // Per case, for the harness.
  Fuel harness_fuel = 1000;
  Nat domain = 5;
  std::size_t cases = 1000;
  std::uint64_t seed = 1;
  int depth = 3;
};

// Reads a JSON object with any of the keys fuel, harness_fuel, domain,
// cases, seed, depth. Unknown keys and wrong types throw Error.
WorkspaceConfig LoadConfig(const std::filesystem::path& file,
                           WorkspaceConfig base = {});

// GA_FUEL from the environment, if set. Throws Error when malformed.
std::optional<Fuel> FuelFromEnvironment();

// The bundled corpus directory.
std::filesystem::path CorpusDir();

struct CheckedTheorem {
  std::string name;
  Judgment judgment;
  std::size_t steps = 0;
};

class Workspace {
 public:
  explicit Workspace(WorkspaceConfig config = {}) : config_(config) {}

  // Indices continue from the files loaded before.
  void LoadDefinitions(const std::filesystem::path& file);
  void AddScript(const std::filesystem::path& file);

  const DefinitionList& defs() const { return defs_; }
  const std::vector<std::filesystem::path>& definition_files() const {
    return files_;
  }
  const std::vector<std::filesystem::path>& scripts() const { return scripts_; }
  const WorkspaceConfig& config() const { return config_; }
  WorkspaceConfig& config() { return config_; }

  // The file that introduced a definition index.
  const std::filesystem::path& Origin(DefIndex i) const;
  // "#3 mult/2 (arith.gad)"
  std::string Describe(DefIndex i) const;

  // Replays every theorem of every script. Throws SyntaxError, ProofError.
  std::vector<CheckedTheorem> CheckScripts() const;

 private:
  WorkspaceConfig config_;
  DefinitionList defs_;
  std::set<std::filesystem::path> loaded_;
  std::vector<std::filesystem::path> files_;
  std::vector<std::filesystem::path> origin_;
  std::vector<std::filesystem::path> scripts_;
};

}  // namespace ga

#endif  // GA_WORKSPACE_HPP_
