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

#include "ga/workspace.hpp"

#include <cstdlib>

#include <json.hpp>

#include "ga/syntax.hpp"

namespace ga {

WorkspaceConfig LoadConfig(const std::filesystem::path& file,
                           WorkspaceConfig c) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(file));
  } catch (const nlohmann::json::exception& e) {
    throw Error(file.string() + ": " + e.what());
  }
  if (!j.is_object()) throw Error(file.string() + ": expected an object");
  for (const auto& [key, v] : j.items()) {
    if (!v.is_number_unsigned()) {
      throw Error(file.string() + ": '" + key + "' must be a natural number");
    }
    auto n = v.get<std::uint64_t>();
    if (key == "fuel") {
      c.fuel = n;
    } else if (key == "harness_fuel") {
      c.harness_fuel = n;
    } else if (key == "domain") {
      c.domain = n;
    } else if (key == "cases") {
      c.cases = n;
    } else if (key == "seed") {
      c.seed = n;
    } else if (key == "depth") {
      c.depth = static_cast<int>(n);
    } else {
      throw Error(file.string() + ": unknown key '" + key + "'");
    }
  }
  return c;
}

std::optional<Fuel> FuelFromEnvironment() {
  const char* s = std::getenv("GA_FUEL");
  if (!s || !*s) return std::nullopt;
  std::string str(s);
  if (str.find_first_not_of("0123456789") != std::string::npos ||
      str.size() > 18) {
    throw Error("GA_FUEL: expected a natural number, got '" + str + "'");
  }
  return std::stoull(str);
}

std::filesystem::path CorpusDir() { return GA_CORPUS_DIR; }

void Workspace::LoadDefinitions(const std::filesystem::path& file) {
  LoadDefinitionFile(file, defs_, &loaded_);
  files_.push_back(file);
  origin_.resize(defs_.size(), file);
}

void Workspace::AddScript(const std::filesystem::path& file) {
  scripts_.push_back(file);
}

const std::filesystem::path& Workspace::Origin(DefIndex i) const {
  return origin_.at(i);
}

std::string Workspace::Describe(DefIndex i) const {
  const Definition& d = defs_.at(i);
  return "#" + std::to_string(i) + " " + d.name + "/" +
         std::to_string(d.arity) + " (" + Origin(i).filename().string() + ")";
}

std::vector<CheckedTheorem> Workspace::CheckScripts() const {
  std::vector<CheckedTheorem> out;
  for (const auto& file : scripts_) {
    for (const ScriptTheorem& s : ParseScript(ReadFile(file), defs_)) {
      Theorem t = CheckScript(defs_, s);
      out.push_back({s.name, t.judgment(), s.steps.size()});
    }
  }
  return out;
}

}  // namespace ga
