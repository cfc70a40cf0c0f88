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

#include "ga/script.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "ga/syntax.hpp"

namespace ga {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Drops a trailing comment: '#' followed by a space or the end of the line,
// outside braces.
std::string StripComment(const std::string& line) {
  int depth = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == '#' && depth == 0 &&
        (i + 1 == line.size() || IsSpace(line[i + 1]))) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::optional<std::uint32_t> Number(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::uint32_t n = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    n = n * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return n;
}

class ScriptParser {
 public:
  ScriptParser(std::string_view text, const DefinitionList& defs)
      : defs_(defs) {
    ctx_.defs = &defs;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) lines_.push_back(StripComment(line));
  }

  std::vector<ScriptTheorem> Run() {
    std::vector<ScriptTheorem> out;
    for (no_ = 0; no_ < lines_.size(); ++no_) {
      std::string l = Trim(lines_[no_]);
      if (l.empty()) continue;
      if (StartsWord(l, "vars")) {
        Vars(l.substr(4));
      } else if (StartsWord(l, "theorem")) {
        out.push_back(Theorem_(l.substr(7)));
      } else {
        Fail("expected 'theorem' or 'vars'", 1);
      }
    }
    return out;
  }

 private:
  static bool StartsWord(const std::string& l, std::string_view w) {
    return l.compare(0, w.size(), w) == 0 &&
           (l.size() == w.size() || IsSpace(l[w.size()]));
  }

  [[noreturn]] void Fail(const std::string& msg, std::size_t col) const {
    throw SyntaxError(msg, no_ + 1, col);
  }

  void Vars(const std::string& rest) {
    std::istringstream in(rest);
    std::string name;
    while (in >> name) {
      if (ctx_.vars.count(name)) Fail("variable '" + name + "' repeated", 1);
      ctx_.vars.emplace(name, static_cast<VarIndex>(ctx_.vars.size()));
    }
  }

  Term ParseT(const std::string& text, std::size_t col) {
    try {
      return ParseTerm(text, ctx_);
    } catch (const SyntaxError& e) {
      Fail(std::string("in term '") + text + "': " + e.what(), col);
    }
  }

  // Splits at commas outside parentheses.
  static std::vector<std::string> SplitTop(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(Trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!Trim(cur).empty() || !parts.empty()) parts.push_back(Trim(cur));
    return parts;
  }

  ScriptTheorem Theorem_(const std::string& rest) {
    ScriptTheorem th;
    th.line = no_ + 1;
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) Fail("expected ':' after theorem name", 1);
    th.name = Trim(rest.substr(0, colon));
    if (th.name.empty()) Fail("missing theorem name", 1);
    std::string judgment = rest.substr(colon + 1);
    std::size_t turn = judgment.find("|-");
    if (turn == std::string::npos) Fail("expected '|-' in theorem", 1);
    std::vector<Term> hyps;
    for (const std::string& h : SplitTop(judgment.substr(0, turn))) {
      if (h.empty()) Fail("empty hypothesis", 1);
      hyps.push_back(ParseT(h, 1));
    }
    th.claim = Judgment(hyps, ParseT(Trim(judgment.substr(turn + 2)), 1));

    std::map<std::string, std::size_t> labels;
    for (++no_; no_ < lines_.size(); ++no_) {
      std::string l = Trim(lines_[no_]);
      if (l.empty()) continue;
      if (l == "qed") return th;
      th.steps.push_back(Step(l, th.claim, labels));
      if (!labels.emplace(th.steps.back().label, th.steps.size() - 1).second) {
        Fail("label '" + th.steps.back().label + "' repeated", 1);
      }
    }
    Fail("missing 'qed' for theorem " + th.name, 1);
  }

  ScriptStep Step(const std::string& l, const Judgment& claim,
                  const std::map<std::string, std::size_t>& labels) {
    ScriptStep st;
    st.line = no_ + 1;
    std::size_t colon = l.find(':');
    if (colon == std::string::npos) Fail("expected 'LABEL: RULE ...'", 1);
    st.label = Trim(l.substr(0, colon));
    if (st.label.empty() || st.label.find(' ') != std::string::npos) {
      Fail("bad step label", 1);
    }
    std::size_t i = colon + 1;
    auto skip = [&] {
      while (i < l.size() && IsSpace(l[i])) ++i;
    };
    auto word = [&] {
      std::size_t b = i;
      while (i < l.size() && !IsSpace(l[i]) && l[i] != '{' && l[i] != ',') ++i;
      return l.substr(b, i - b);
    };
    skip();
    std::string rule = word();
    auto id = RuleByName(rule);
    if (!id) Fail("unknown rule '" + rule + "'", colon + 2);
    st.rule.rule = *id;
    bool under = false;
    bool has_under = false;
    for (skip(); i < l.size(); skip()) {
      std::size_t col = i + 1;
      char c = l[i];
      if (c == '{') {
        std::size_t depth = 0, j = i;
        for (; j < l.size(); ++j) {
          if (l[j] == '{') ++depth;
          if (l[j] == '}' && --depth == 0) break;
        }
        if (j == l.size()) Fail("unclosed '{'", col);
        Term t = ParseT(l.substr(i + 1, j - i - 1), col);
        (under ? st.rule.context : st.rule.terms).push_back(t);
        i = j + 1;
      } else if (c == '@') {
        ++i;
        std::string p = word();
        Path path;
        if (!p.empty()) {
          std::istringstream parts(p);
          std::string part;
          while (std::getline(parts, part, '.')) {
            auto n = Number(part);
            if (!n) Fail("bad hole position '@" + p + "'", col);
            path.push_back(*n);
          }
        }
        st.rule.paths.push_back(path);
      } else if (c == '#') {
        ++i;
        std::string name = word();
        if (auto d = defs_.Find(name)) {
          st.rule.def = *d;
        } else if (name.size() > 1 && name[0] == 'd' && Number(name.substr(1))) {
          st.rule.def = *Number(name.substr(1));
        } else {
          Fail("unknown definition '" + name + "'", col);
        }
      } else if (c == '$') {
        ++i;
        std::string name = word();
        if (auto it = ctx_.vars.find(name); it != ctx_.vars.end()) {
          st.rule.var = it->second;
        } else if (name.size() > 1 && name[0] == 'v' &&
                   Number(name.substr(1))) {
          st.rule.var = *Number(name.substr(1));
        } else {
          Fail("unknown variable '" + name + "'", col);
        }
      } else {
        std::string w = word();
        if (w == "under") {
          under = has_under = true;
        } else if (w == "from") {
          std::string rest = l.substr(i);
          for (const std::string& lab : SplitTop(rest)) {
            auto it = labels.find(lab);
            if (it == labels.end()) {
              Fail("unknown or later label '" + lab + "'", col);
            }
            st.premises.push_back(it->second);
          }
          i = l.size();
        } else {
          Fail("unexpected '" + (w.empty() ? std::string(1, c) : w) + "'", col);
        }
      }
    }
    if (!has_under && (st.rule.rule == RuleId::kZeroI ||
                       st.rule.rule == RuleId::kHyp)) {
      for (const Term& h : claim.hyps()) {
        if (st.rule.rule == RuleId::kHyp && !st.rule.terms.empty() &&
            h == st.rule.terms[0]) {
          continue;
        }
        st.rule.context.push_back(h);
      }
    }
    st.rule.context = CanonicalHyps(std::move(st.rule.context));
    return st;
  }

  const DefinitionList& defs_;
  ParseContext ctx_;
  std::vector<std::string> lines_;
  std::size_t no_ = 0;
};

std::string DefName(DefIndex d, const DefinitionList& defs) {
  if (defs.Contains(d) && !defs.at(d).name.empty() &&
      defs.Find(defs.at(d).name) == d) {
    return defs.at(d).name;
  }
  return "d" + std::to_string(d);
}

}  // namespace

std::vector<ScriptTheorem> ParseScript(std::string_view text,
                                       const DefinitionList& defs) {
  return ScriptParser(text, defs).Run();
}

Proof ScriptProof(const DefinitionList& defs, const ScriptTheorem& s) {
  if (s.steps.empty()) throw ProofError(0, "theorem " + s.name + " has no steps");
  Proof p;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const ScriptStep& st = s.steps[i];
    std::vector<Judgment> prem;
    for (std::size_t k : st.premises) prem.push_back(p.steps.at(k).judgment);
    try {
      p.steps.push_back(
          ProofStep{Conclude(defs, st.rule, prem), st.rule, st.premises});
    } catch (const RuleError& e) {
      throw ProofError(i, "line " + std::to_string(st.line) + " (" + st.label +
                              "): " + e.what());
    }
  }
  if (!(p.claim() == s.claim)) {
    throw ProofError(p.steps.size() - 1,
                     "theorem " + s.name + " proves " + Print(p.claim(), &defs) +
                         ", not the stated " + Print(s.claim, &defs));
  }
  return p;
}

Theorem CheckScript(const DefinitionList& defs, const ScriptTheorem& s) {
  return CheckProof(defs, ScriptProof(defs, s)).back();
}

std::string PrintScript(const std::string& name, const Proof& p,
                        const DefinitionList& defs) {
  std::string out = "theorem " + name + " : " + Print(p.claim(), &defs) + "\n";
  const auto& claim_hyps = p.claim().hyps();
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& s = p.steps[i];
    const RuleApp& r = s.rule;
    out += "  s" + std::to_string(i) + ": " + RuleName(r.rule);
    if (r.def) out += " #" + DefName(*r.def, defs);
    if (r.var) out += " $v" + std::to_string(*r.var);
    for (const Term& t : r.terms) out += " {" + Print(t, &defs) + "}";
    for (const Path& path : r.paths) {
      out += " @";
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (k) out += '.';
        out += std::to_string(path[k]);
      }
    }
    if (r.rule == RuleId::kZeroI || r.rule == RuleId::kHyp) {
      std::vector<Term> def_ctx;
      for (const Term& h : claim_hyps) {
        if (r.rule == RuleId::kHyp && h == r.terms.at(0)) continue;
        def_ctx.push_back(h);
      }
      if (CanonicalHyps(def_ctx) != r.context) {
        out += " under";
        for (const Term& t : r.context) out += " {" + Print(t, &defs) + "}";
      }
    }
    if (!s.premises.empty()) {
      out += " from ";
      for (std::size_t k = 0; k < s.premises.size(); ++k) {
        if (k) out += ", ";
        out += "s" + std::to_string(s.premises[k]);
      }
    }
    out += '\n';
  }
  out += "qed\n";
  return out;
}

}  // namespace ga
