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

// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "derived_table.hpp"
#include "ga/certify.hpp"
#include "ga/code.hpp"
#include "ga/harness.hpp"
#include "ga/primrec.hpp"
#include "ga/reflection.hpp"
#include "ga/script.hpp"
#include "testing.hpp"

namespace ga {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void Require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

const char* kTotals[] = {"add", "sub", "even", "mult"};

// Termination scripts replayed through the CLI, tactic regeneration, and C(n, m) = 1.
void Replay(Outcome& o) {
  DefinitionList defs = testing::Corpus("arith.gad");
  auto start = Clock::now();
  for (const char* f : kTotals) {
    std::string file = (CorpusDir() / (std::string(f) + "_total.gap")).string();
    std::string cmd = "'" GA_CLI_PATH "' check '" + file +
                      "' --defs arith.gad > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    o.Require(WIFEXITED(st) && WEXITSTATUS(st) == 0, std::string("check ") + f);
  }
  double t = Seconds(start);
  o.Require(t < 5, "check took too long");
  for (const char* f : kTotals) {
    std::string file = (CorpusDir() / (std::string(f) + "_total.gap")).string();
    auto scripts = ParseScript(ReadFile(file), defs);
    Proof bundled = ScriptProof(defs, scripts.at(0));
    Proof regenerated = PrimrecTerminationProof(defs, *defs.Find(f));
    o.Require(bundled == regenerated, std::string("regenerate ") + f);
    o.Require(ProofCheckC(defs, EncodeProof(regenerated),
                          EncodeJudgment(regenerated.claim())) == 1,
              std::string("C for ") + f);
  }
  o.notes << " check " << t << "s";
}

// Every derived rule and typing row. The general equality typing row,
// nat(a), nat(b) |- bool(a = b), is attempted as stated.
void DerivedRules(Outcome& o) {
  std::size_t rows = 0, built = 0;
  for (const testing::Case& c : testing::Table()) {
    ++rows;
    std::string err = testing::RunCase(c);
    if (err.empty()) {
      ++built;
    } else {
      o.Require(false, c.rule + ": " + err);
    }
  }
  testing::Case general{"eqTI", {{{}, "nat(A)"}, {{}, "nat(B)"}}, "bool(A = B)"};
  ++rows;
  std::string err = testing::RunCase(general);
  if (err.empty()) {
    ++built;
  } else {
    o.Require(false, "eqTI for arbitrary a, b: " + err);
  }
  o.notes << " " << built << "/" << rows << " rows";
}

// P(0), booleans, add(2, 3), agreement with machine arithmetic, fuel
// monotonicity and determinism.
void Evaluator(Outcome& o) {
  DefinitionList defs = testing::Corpus("arith.gad");
  auto start = Clock::now();
  o.Require(Eval(defs, {}, testing::T("P(0)", defs), 100) == EvalOutcome(Value{0}),
            "P(0)");
  o.Require(Eval(defs, {}, testing::T("add(2, 3)", defs), 10000) ==
                EvalOutcome(Value{5}),
            "add(2, 3)");
  testing::ClosedTerms gen(defs, 2026);
  std::size_t mismatches = 0, non_bool = 0;
  const std::size_t kTerms = 10000;
  for (std::size_t i = 0; i < kTerms; ++i) {
    bool formula = i % 2 == 1;
    auto s = formula ? gen.Formula(4) : gen.Number(4);
    EvalOutcome r = Eval(defs, {}, s.term, 1000000);
    if (s.value ? !(r == EvalOutcome(Value{*s.value})) : IsValue(r)) ++mismatches;
    if (formula && IsValue(r) && *ValueOf(r) > 1) ++non_bool;
  }
  o.Require(mismatches == 0, std::to_string(mismatches) + " reference mismatches");
  o.Require(non_bool == 0, "formula outside {0, 1}");
  DeterminismReport d = CheckDeterminism(defs, kTerms, 4, 100000, 7);
  o.Require(d.violations == 0, std::to_string(d.violations) + " violations");
  double t = Seconds(start);
  o.Require(t < 60, "too slow");
  o.notes << " " << kTerms << " reference terms, " << d.terms
          << " monotonicity terms, 0 violations required, " << t << "s";
}

void Harness(Outcome& o) {
  DefinitionList defs = testing::Corpus("arith.gad");
  auto start = Clock::now();
  RuleInstanceSpec spec;
  spec.rule = "all";
  spec.cases = 1000;
  spec.domain = 5;
  spec.fuel = 1000;
  HarnessReport r = CheckRule(defs, spec);
  std::size_t rules = 0, cex = 0;
  for (const RuleReport& rr : r.rules) {
    if (rr.canary) {
      if (rr.rule == "classical-impI") {
        o.Require(!rr.counterexamples.empty(), "canary not caught");
        o.notes << " canary " << rr.counterexamples.size() << " cex";
      }
      continue;
    }
    ++rules;
    cex += rr.counterexamples.size();
    o.Require(rr.passed(), rr.rule);
  }
  o.Require(rules == kRuleCount, "rule count");
  double t = Seconds(start);
  o.Require(t < 600, "too slow");
  o.notes << " " << rules << " rules x 1000 cases, " << cex << " cex, " << t << "s";
}

void Paradoxes(Outcome& o) {
  DefinitionList defs = testing::Corpus("paradox.gad");
  auto start = Clock::now();
  auto rs = ParadoxReport(defs, StandardParadoxes(defs, 100000), 3);
  for (const ParadoxResult& r : rs) {
    o.Require(r.passed(), r.name);
  }
  o.Require(rs.size() == 7, "corpus size");
  double t = Seconds(start);
  o.Require(t < 300, "too slow");
  o.notes << " " << rs.size() << " definitions, " << t << "s";
}

void ReflectionChecks(Outcome& o) {
  DefinitionList defs = testing::Corpus("arith.gad");
  auto start = Clock::now();
  // Pairing is a bijection on [0, 10^4].
  std::set<std::pair<std::string, std::string>> seen;
  for (unsigned long z = 0; z <= 10000; ++z) {
    auto [x, y] = Unpair(Code(z));
    if (!(Pair(x, y) == Code(z)) || !seen.insert({x.get_str(), y.get_str()}).second) {
      o.Require(false, "pairing at " + std::to_string(z));
      break;
    }
  }
  // Round-trips.
  testing::ClosedTerms gen(defs, 6);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    Term t = gen.Formula(4).term;
    if (!(DecodeTerm(EncodeTerm(t)) == t)) ++bad;
    Judgment j({gen.Formula(2).term, NatOf(Term::Var(i % 4))}, t);
    if (!(DecodeJudgment(EncodeJudgment(j)) == j)) ++bad;
  }
  std::mt19937_64 rng(99);
  std::vector<Proof> pool;
  const std::size_t kProofs = 10000;
  for (std::size_t i = 0; i < kProofs; ++i) {
    Proof p = testing::RandomProof(defs, rng);
    if (!(DecodeProof(EncodeProof(p)) == p)) ++bad;
    if (pool.size() < 200) pool.push_back(std::move(p));
  }
  o.Require(bad == 0, std::to_string(bad) + " round-trip failures");
  // C accepts the termination proofs and a few evaluation certificates.
  std::vector<Proof> valid = pool;
  for (const char* f : kTotals) {
    valid.push_back(PrimrecTerminationProof(defs, *defs.Find(f)));
  }
  const std::pair<const char*, CertifyMode> certified[] = {
      {"add(1, 2)", CertifyMode::kValue},
      {"gt(2, 1)", CertifyMode::kTruth},
      {"~(1 = 0)", CertifyMode::kTruth}};
  for (const auto& [t, mode] : certified) {
    Proof p = EvalCertify(defs, testing::T(t, defs), 10000, mode);
    pool.push_back(p);
    valid.push_back(p);
  }
  for (const Proof& p : valid) {
    o.Require(ProofCheckC(defs, EncodeProof(p), EncodeJudgment(p.claim())) == 1,
              "C rejects a valid proof");
  }
  // Corrupted codes: one digit changed.
  std::size_t disagree = 0, accepted = 0;
  for (int i = 0; i < 1000; ++i) {
    const Proof& p = pool[rng() % pool.size()];
    Code m = EncodeJudgment(p.claim());
    std::string digits = EncodeProof(p).get_str();
    std::size_t k = rng() % digits.size();
    digits[k] = static_cast<char>('0' + (digits[k] - '0' + 1 + rng() % 9) % 10);
    if (digits.size() > 1 && digits[0] == '0') digits[0] = '1';
    Code n(digits);
    int expected = 0;
    try {
      Proof q = DecodeProof(n);
      CheckProof(defs, q);
      expected = q.claim() == p.claim() ? 1 : 0;
    } catch (const Error&) {
    }
    int got = ProofCheckC(defs, n, m);
    if (got != expected) ++disagree;
    accepted += got;
  }
  o.Require(disagree == 0, std::to_string(disagree) + " C/kernel disagreements");

  // E+ and A+.
  Reflection r(defs);
  Code x = EncodeTerm(Term::Var(0));
  std::size_t points = 0;
  for (const char* text : {"v0 = S(0)", "S(v0) = 0", "add(v0, 2) = 4",
                           "~(S(v0) = 0)", "even(v0) = 0", "gt(v0, 3)"}) {
    Term p = testing::T(text, defs);
    Code pc = EncodeTerm(p);
    PlusOptions opts;
    for (Kind q : {Kind::kExists, Kind::kForall}) {
      auto v = r.Decide(q, 0, p, 100000);
      if (v.point) opts.probes.push_back(*v.point);
    }
    o.Require(Eplus(defs, x, pc, 0, opts) == 0, std::string("E+ base ") + text);
    std::vector<Code> tested;
    for (unsigned long s = 0; s < 40; ++s) tested.push_back(Code(s));
    for (const Code& c : opts.probes) {
      for (int k = 0; k < 3; ++k) tested.push_back(c + k);
    }
    std::sort(tested.begin(), tested.end());
    int last = 0;
    for (const Code& s : tested) {
      int e = Eplus(defs, x, pc, s, opts);
      o.Require(e >= last, std::string("E+ monotone ") + text);
      o.Require(!(e == 1 && Aplus(defs, x, NegCode(pc), s, opts) == 1),
                std::string("exclusivity ") + text);
      last = e;
      ++points;
    }
  }
  // Two-sided E with planted certificates.
  auto lit = [&](const char* text) {
    Term p = testing::T(text, defs);
    PlusOptions opts;
    auto v = r.Decide(Kind::kExists, 0, p, 100000);
    if (v.point) opts.probes.push_back(*v.point);
    return LiteralE(defs, x, EncodeTerm(p), 0, 5000, opts).outcome;
  };
  o.Require(lit("v0 = S(0)") == EvalOutcome(Value{1}), "E(x = S(0)) = 1");
  o.Require(lit("S(v0) = 0") == EvalOutcome(Value{0}), "E(S(x) = 0) = 0");
  double t = Seconds(start);
  o.Require(t < 600, "too slow");
  o.notes << " " << kProofs << " proof round-trips, 1000 mutants (" << accepted
          << " accepted), " << points << " E+/A+ points, " << t << "s";
}

// The four quantifier dualities for one template p over v0, as kernel
// theorems with the left side as hypothesis.
std::vector<Theorem> Duals(const DefinitionList& defs, const Term& p) {
  const VarIndex x = 0;
  Term nat = NatOf(Term::Var(x));
  Term np = Term::Neg(p);
  Term ex = Term::Exists(x, p), all = Term::Forall(x, p);
  Term all_n = Term::Forall(x, np), ex_n = Term::Exists(x, np);
  std::vector<Theorem> out;
  Derivation d(defs);
  auto check = [&](Line l) {
    out.push_back(CheckProof(defs, d.Export(l)).back());
  };
  // ~(exists x. p) |- forall x. ~p
  {
    Line h = d.Hyp(Term::Neg(ex), {nat});
    Line n = d.Hyp(nat, {Term::Neg(ex)});
    Line e = d.Rule(RuleId::kExistsE2, {h, n});
    check(d.RuleV(RuleId::kForallI1, x, {e}));
  }
  // forall x. ~p |- ~(exists x. p)
  {
    Line h = d.Hyp(all_n, {nat});
    Line n = d.Hyp(nat, {all_n});
    Line e = d.Rule(RuleId::kForallE1, {h, n});
    check(d.RuleV(RuleId::kExistsI2, x, {e}));
  }
  // ~(forall x. p) |- exists x. ~p
  {
    std::vector<Term> inner{Term::Neg(all), nat, np};
    Line n = d.Hyp(nat, CanonicalHyps({Term::Neg(all), np}));
    Line q = d.Hyp(np, CanonicalHyps({Term::Neg(all), nat}));
    Line w = d.RuleVT(RuleId::kExistsI1, x, np, {n, q});
    Line h = d.Hyp(Term::Neg(all), {});
    check(d.Rule(RuleId::kForallE2, {h, w}));
  }
  // exists x. ~p |- ~(forall x. p)
  {
    Line n = d.Hyp(nat, CanonicalHyps({ex_n, np}));
    Line q = d.Hyp(np, CanonicalHyps({ex_n, nat}));
    Line w = d.RuleVT(RuleId::kForallI2, x, p, {n, q});
    Line h = d.Hyp(ex_n, {});
    check(d.Rule(RuleId::kExistsE1, {h, w}));
  }
  return out;
}

void Quantifiers(Outcome& o) {
  DefinitionList defs = testing::Corpus("arith.gad");
  const char* corpus[] = {"v0 = S(0)",      "S(v0) = 0",     "add(v0, 2) = 4",
                          "~(S(v0) = 0)",   "even(v0) = 0",      "gt(v0, 3)",
                          "mult(v0, v0) = 9", "v0 = v0",     "gt(0, v0)",
                          "sub(v0, 1) = 5"};
  std::size_t duals = 0, agree = 0, proved = 0;
  Reflection r(defs);
  for (const char* text : corpus) {
    Term p = testing::T(text, defs);
    try {
      std::vector<Theorem> ts = Duals(defs, p);
      duals += ts.size();
    } catch (const Error& e) {
      o.Require(false, std::string("duals of ") + text + ": " + e.what());
    }
    // A kernel proof of exists x. p from a certified witness.
    bool kernel = false;
    if (auto w = SearchExists(defs, 0, p, 50, 100000)) {
      Derivation d(defs);
      std::vector<Line> replayed;
      for (const ProofStep& st : w->proof.steps) {
        std::vector<Line> prem;
        for (std::size_t k : st.premises) prem.push_back(replayed.at(k));
        replayed.push_back(d.Apply(st.rule, prem));
      }
      Line inst = replayed.back();
      Line n = NumeralNat(d, w->n);
      Line e = d.RuleVT(RuleId::kExistsI1, 0, p, {n, inst});
      Theorem t = CheckProof(defs, d.Export(e)).back();
      kernel = t.judgment() == Judgment({}, Term::Exists(0, p));
    }
    EvalOutcome v = r.Evaluate(Term::Exists(0, p), 1000000).outcome;
    bool one = v == EvalOutcome(Value{1});
    proved += kernel;
    if (kernel == one) {
      ++agree;
    } else {
      o.Require(false, std::string("exists ") + text + ": kernel " +
                           (kernel ? "proves" : "does not prove") +
                           ", evaluation " + ToString(v));
    }
  }
  std::size_t n = std::size(corpus);
  o.Require(duals == 4 * n, "duals");
  o.notes << " " << duals << " duals, " << agree << "/" << n
          << " exists agreements (" << proved << " proved)";
}

}  // namespace
}  // namespace ga

int main() {
  using Check = std::function<void(ga::Outcome&)>;
  const std::pair<const char*, Check> criteria[] = {
      {"termination script replay", ga::Replay},
      {"derived rules and typing table", ga::DerivedRules},
      {"evaluator conformance", ga::Evaluator},
      {"truth-preservation fuzzing", ga::Harness},
      {"paradox corpus", ga::Paradoxes},
      {"reflection", ga::ReflectionChecks},
      {"quantifier duality and correspondence", ga::Quantifiers},
  };
  int failed = 0;
  int i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    ga::Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.Require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << i << " " << name << ":"
              << o.notes.str() << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
