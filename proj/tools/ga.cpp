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

// ga: batch front end. Exit status 0 on success, 1 when a proof or the
// harness fails, 2 on parse and configuration errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ga/code.hpp"
#include "ga/harness.hpp"
#include "ga/primrec.hpp"
#include "ga/reflection.hpp"
#include "ga/script.hpp"
#include "ga/syntax.hpp"
#include "ga/workspace.hpp"

namespace {

using namespace ga;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string config;
  std::vector<std::string> defs;
  std::optional<Fuel> fuel;

  std::string file;
  std::string text;
  std::string assign;
  std::string equality = "standard";
  std::string out;
  std::string kind = "term";
  std::string theorem;
  std::string tactic;
  bool stats = false;

  std::string rule = "all";
  std::optional<std::size_t> cases;
  std::size_t first_case = 0;
  std::optional<Nat> domain;
  std::optional<std::uint64_t> seed;
  std::optional<int> depth;
  std::size_t max_hyps = 2;
};

WorkspaceConfig Config(const Options& o) {
  WorkspaceConfig c;
  if (auto f = FuelFromEnvironment()) c.fuel = *f;
  if (!o.config.empty()) c = LoadConfig(o.config, c);
  if (o.fuel) c.fuel = c.harness_fuel = *o.fuel;
  if (o.cases) c.cases = *o.cases;
  if (o.domain) c.domain = *o.domain;
  if (o.seed) c.seed = *o.seed;
  if (o.depth) c.depth = *o.depth;
  return c;
}

Workspace Load(const Options& o, std::initializer_list<const char*> fallback) {
  Workspace ws(Config(o));
  if (o.defs.empty()) {
    for (const char* f : fallback) ws.LoadDefinitions(CorpusDir() / f);
  }
  // Bare names that are not found locally come from the bundled corpus.
  for (const std::string& f : o.defs) {
    fs::path bundled = CorpusDir() / f;
    bool local = fs::exists(f) || fs::path(f).has_parent_path();
    ws.LoadDefinitions(local || !fs::exists(bundled) ? fs::path(f) : bundled);
  }
  return ws;
}

EqualitySemantics Equality(const std::string& s) {
  return s == "asymmetric" ? EqualitySemantics::kAsymmetric
                           : EqualitySemantics::kStandard;
}

Term ParseArg(const std::string& text, const DefinitionList& defs,
              ParseContext& ctx) {
  ctx.defs = &defs;
  ctx.auto_vars = true;
  return ParseTerm(text, ctx);
}

// "v0=3,x=1"
Assignment ParseAssign(const std::string& s, const ParseContext& ctx) {
  Assignment a;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad assignment '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (value.empty() ||
        value.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("bad value in '" + item + "'");
    }
    VarIndex v;
    if (auto it = ctx.vars.find(name); it != ctx.vars.end()) {
      v = it->second;
    } else if (name.size() > 1 && name[0] == 'v' &&
               name.find_first_not_of("0123456789", 1) == std::string::npos) {
      v = std::stoul(name.substr(1));
    } else {
      throw Error("unknown variable '" + name + "'");
    }
    a.Set(v, std::stoull(value));
  }
  return a;
}

// Writes to the named file, or stdout when name is empty.
void Emit(const std::string& name, const std::string& text) {
  if (name.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(name);
  if (!f) throw Error("cannot write " + name);
  f << text;
}

void EmitCode(const std::string& name, const Code& c) {
  if (name.empty()) {
    std::cout << c << "\n";
    return;
  }
  std::ofstream f(name);
  if (!f) throw Error("cannot write " + name);
  f << c << "\n";
}

// A decimal literal, or @file holding one.
Code ReadCode(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::string s = ReadFile(arg.substr(1));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.pop_back();
    }
    return ParseCode(s);
  }
  return ParseCode(arg);
}

int Parse(const Options& o) {
  if (fs::path(o.file).extension() == ".gap") {
    Workspace ws = Load(o, {});
    for (const ScriptTheorem& s : ParseScript(ReadFile(o.file), ws.defs())) {
      std::cout << "theorem " << s.name << " : "
                << Print(s.claim, &ws.defs()) << " (" << s.steps.size()
                << " steps)\n";
    }
    return kOk;
  }
  Options only = o;
  only.defs.push_back(o.file);
  Workspace ws = Load(only, {});
  for (DefIndex i = 0; i < ws.defs().size(); ++i) {
    std::cout << ws.Describe(i) << " := "
              << Print(*ws.defs().at(i).body, &ws.defs()) << "\n";
  }
  return kOk;
}

int Check(const Options& o) {
  Workspace ws = Load(o, {});
  int status = kOk;
  for (const ScriptTheorem& s : ParseScript(ReadFile(o.file), ws.defs())) {
    try {
      Theorem t = CheckScript(ws.defs(), s);
      std::cout << s.name << " : " << Print(t.judgment(), &ws.defs()) << "\n";
    } catch (const ProofError& e) {
      std::cerr << o.file << ":" << s.line << ": theorem " << s.name << ": "
                << e.what() << "\n";
      status = kFailed;
    }
  }
  return status;
}

int EvalCommand(const Options& o) {
  Workspace ws = Load(o, {});
  ParseContext ctx;
  Term t = ParseArg(o.text, ws.defs(), ctx);
  Assignment a = ParseAssign(o.assign, ctx);
  Reflection refl(ws.defs(), PlusOptions{}, EvalOptions{Equality(o.equality)});
  EvalResult r = refl.Evaluate(t, ws.config().fuel, a);
  std::cout << ToString(r.outcome) << "\n";
  if (o.stats) std::cout << "used: " << r.used << "\n";
  return kOk;
}

int Encode(const Options& o) {
  Workspace ws = Load(o, {});
  if (o.file.empty()) {
    ParseContext ctx;
    EmitCode(o.out, EncodeTerm(ParseArg(o.text, ws.defs(), ctx)));
    return kOk;
  }
  // Proofs from a script: NAME.proof and NAME.claim under --out, or both
  // codes on stdout.
  bool found = false;
  for (const ScriptTheorem& s : ParseScript(ReadFile(o.file), ws.defs())) {
    if (!o.theorem.empty() && s.name != o.theorem) continue;
    found = true;
    Proof p = ScriptProof(ws.defs(), s);
    if (o.out.empty()) {
      std::cout << s.name << " proof " << EncodeProof(p) << "\n"
                << s.name << " claim " << EncodeJudgment(p.claim()) << "\n";
    } else {
      fs::create_directories(o.out);
      EmitCode((fs::path(o.out) / (s.name + ".proof")).string(), EncodeProof(p));
      EmitCode((fs::path(o.out) / (s.name + ".claim")).string(),
               EncodeJudgment(p.claim()));
    }
  }
  if (!found) throw Error("no theorem '" + o.theorem + "'");
  return kOk;
}

int Decode(const Options& o) {
  Workspace ws = Load(o, {});
  Code c = ReadCode(o.text);
  std::string text;
  if (o.kind == "term") {
    text = Print(DecodeTerm(c), &ws.defs()) + "\n";
  } else if (o.kind == "judgment") {
    text = Print(DecodeJudgment(c), &ws.defs()) + "\n";
  } else {
    text = PrintScript(o.theorem.empty() ? "decoded" : o.theorem,
                       DecodeProof(c), ws.defs());
  }
  Emit(o.out, text);
  return kOk;
}

int Prove(const Options& o) {
  Workspace ws = Load(o, {"arith.gad"});
  auto f = ws.defs().Find(o.text);
  if (!f) throw Error("unknown definition '" + o.text + "'");
  Proof p = PrimrecTerminationProof(ws.defs(), *f);
  std::string name = o.theorem.empty() ? o.text + "_total" : o.theorem;
  Emit(o.out, PrintScript(name, p, ws.defs()));
  return kOk;
}

int HarnessCommand(const Options& o) {
  Workspace ws = Load(o, {"arith.gad"});
  const WorkspaceConfig& c = ws.config();
  RuleInstanceSpec spec;
  spec.rule = o.rule;
  spec.cases = c.cases;
  spec.first_case = o.first_case;
  spec.domain = c.domain;
  spec.fuel = c.harness_fuel;
  spec.seed = c.seed;
  spec.depth = c.depth;
  spec.max_hyps = o.max_hyps;
  spec.equality = Equality(o.equality);
  HarnessReport rep = CheckRule(ws.defs(), spec);
  std::string text = rep.Serialize();
  Emit(o.out, text);
  if (!o.out.empty()) std::cout << text.substr(text.rfind("summary:"));
  return rep.passed() ? kOk : kFailed;
}

int Paradox(const Options& o) {
  Workspace ws = Load(o, {"paradox.gad"});
  Fuel top = o.fuel ? *o.fuel : 100000;
  auto res = ParadoxReport(ws.defs(), StandardParadoxes(ws.defs(), top),
                           o.depth ? *o.depth : 3);
  Emit(o.out, Serialize(res, ws.defs()));
  for (const ParadoxResult& r : res) {
    if (!r.passed()) return kFailed;
  }
  return kOk;
}

// Replays the bundled corpus and a few fixed evaluations.
int Selftest() {
  int status = kOk;
  auto report = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) status = kFailed;
  };
  Workspace arith;
  arith.LoadDefinitions(CorpusDir() / "arith.gad");
  for (const char* f : {"add", "sub", "mult", "even"}) {
    fs::path script = CorpusDir() / (std::string(f) + "_total.gap");
    bool ok = true;
    try {
      for (const ScriptTheorem& s : ParseScript(ReadFile(script), arith.defs())) {
        CheckScript(arith.defs(), s);
      }
    } catch (const Error& e) {
      std::cout << e.what() << "\n";
      ok = false;
    }
    report("check " + script.filename().string(), ok);
  }
  auto eval = [&](const Workspace& ws, const std::string& text, Fuel fuel) {
    return ToString(Reflection(ws.defs()).Evaluate(
                        ParseTerm(text, &ws.defs()), fuel).outcome);
  };
  report("eval add(2, 3)", eval(arith, "add(2, 3)", 1000) == "value:5");
  report("eval P(0)", eval(arith, "P(0)", 10) == "value:0");
  Workspace paradox;
  paradox.LoadDefinitions(CorpusDir() / "paradox.gad");
  report("eval liar", eval(paradox, "liar", 100000) == "out-of-fuel");
  RuleInstanceSpec spec;
  spec.rule = "negE";
  spec.cases = 100;
  report("harness negE", CheckRule(arith.defs(), spec).passed());
  spec.rule = "classical-impI";
  report("harness classical-impI canary", CheckRule(arith.defs(), spec).passed());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grounded Arithmetic proof checker and evaluator"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "JSON file with defaults")
      ->check(CLI::ExistingFile);

  auto defs = [&](CLI::App* c) {
    c->add_option("--defs", o.defs, "definition files, loaded in order");
  };
  auto fuel = [&](CLI::App* c) {
    c->add_option("--fuel", o.fuel, "fuel (default GA_FUEL or config)");
  };

  auto* parse = app.add_subcommand("parse", "parse a .gad or .gap file");
  parse->add_option("file", o.file)->required();
  defs(parse);

  auto* check = app.add_subcommand("check", "replay the proofs of a script");
  check->add_option("script", o.file)->required();
  defs(check);

  auto* eval = app.add_subcommand("eval", "evaluate a term");
  eval->add_option("term", o.text)->required();
  defs(eval);
  fuel(eval);
  eval->add_option("--assign", o.assign, "v0=3,v1=0");
  eval->add_option("--equality", o.equality)
      ->check(CLI::IsMember({"standard", "asymmetric"}));
  eval->add_flag("--stats", o.stats, "also print the fuel used");

  auto* encode = app.add_subcommand("encode", "Goedel code of a term or proof");
  encode->add_option("term", o.text);
  encode->add_option("--script", o.file, "encode the proofs of this script");
  encode->add_option("--theorem", o.theorem);
  encode->add_option("--out", o.out, "output file (directory with --script)");
  defs(encode);

  auto* decode = app.add_subcommand("decode", "term, judgment or proof of a code");
  decode->add_option("code", o.text, "decimal, or @file")->required();
  decode->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"term", "judgment", "proof"}));
  decode->add_option("--theorem", o.theorem, "name for a decoded proof");
  decode->add_option("--out", o.out);
  defs(decode);

  auto* prove = app.add_subcommand("prove", "emit a proof script");
  prove->add_option("--tactic", o.tactic)
      ->required()
      ->check(CLI::IsMember({"primrec"}));
  prove->add_option("name", o.text, "definition")->required();
  prove->add_option("--theorem", o.theorem);
  prove->add_option("--out", o.out);
  defs(prove);

  auto* harness = app.add_subcommand("harness", "truth preservation of rules");
  harness->add_option("--rule", o.rule, "rule, canary, or all");
  harness->add_option("--cases", o.cases);
  harness->add_option("--first-case", o.first_case);
  harness->add_option("--domain", o.domain);
  harness->add_option("--seed", o.seed);
  harness->add_option("--depth", o.depth);
  harness->add_option("--max-hyps", o.max_hyps);
  harness->add_option("--equality", o.equality)
      ->check(CLI::IsMember({"standard", "asymmetric"}));
  harness->add_option("--out", o.out, "report file");
  fuel(harness);
  defs(harness);

  auto* paradox = app.add_subcommand("paradox", "evaluate the paradox corpus");
  fuel(paradox);
  paradox->add_option("--depth", o.depth, "proof search depth");
  paradox->add_option("--out", o.out);
  defs(paradox);

  auto* selftest = app.add_subcommand("selftest", "run the bundled corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*parse) return Parse(o);
    if (*check) return Check(o);
    if (*eval) return EvalCommand(o);
    if (*encode) {
      if (o.file.empty() == o.text.empty()) {
        std::cerr << "encode: give a term or --script\n";
        return kBadInput;
      }
      return Encode(o);
    }
    if (*decode) return Decode(o);
    if (*prove) return Prove(o);
    if (*harness) return HarnessCommand(o);
    if (*paradox) return Paradox(o);
    if (*selftest) return Selftest();
  } catch (const ProofError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const RuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const TacticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
