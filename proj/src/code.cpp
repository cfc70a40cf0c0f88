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

#include "ga/code.hpp"

#include <limits>

namespace ga {
namespace {

std::uint32_t Small(const Code& c, const char* what) {
  if (c > std::numeric_limits<std::uint32_t>::max()) {
    throw DecodeError(std::string(what) + " out of range");
  }
  return static_cast<std::uint32_t>(c.get_ui());
}

Code Tree(const std::vector<Code>& xs, std::size_t b, std::size_t e) {
  if (e - b == 1) return xs[b];
  std::size_t mid = b + (e - b + 1) / 2;
  return Pair(Tree(xs, b, mid), Tree(xs, mid, e));
}

void Untree(const Code& c, std::size_t n, std::vector<Code>& out) {
  if (n == 1) {
    out.push_back(c);
    return;
  }
  auto [l, r] = Unpair(c);
  std::size_t first = (n + 1) / 2;
  Untree(l, first, out);
  Untree(r, n - first, out);
}

Code Opt(const std::optional<std::uint32_t>& v) {
  return v ? Code(*v) + 1 : Code(0);
}

std::optional<std::uint32_t> Unopt(const Code& c, const char* what) {
  if (c == 0) return std::nullopt;
  return Small(c - 1, what);
}

Code Path_(const Path& p) {
  std::vector<Code> xs;
  for (auto k : p) xs.emplace_back(k);
  return EncodeList(xs);
}

Code Terms(const std::vector<Term>& ts) {
  std::vector<Code> xs;
  for (const Term& t : ts) xs.push_back(EncodeTerm(t));
  return EncodeList(xs);
}

std::vector<Term> UnTerms(const Code& c) {
  std::vector<Term> ts;
  for (const Code& x : DecodeList(c)) ts.push_back(DecodeTerm(x));
  return ts;
}

Code EncodeStep(const ProofStep& s) {
  if (static_cast<std::size_t>(s.rule.rule) >= kBgaRuleCount) {
    throw NotEncodable(std::string("rule ") + RuleName(s.rule.rule) +
                       " has no code");
  }
  const RuleApp& r = s.rule;
  std::vector<Code> paths;
  for (const Path& p : r.paths) paths.push_back(Path_(p));
  Code inst = Pair(
      Terms(r.terms),
      Pair(EncodeList(paths),
           Pair(Opt(r.var), Pair(Opt(r.def), Terms(r.context)))));
  std::vector<Code> prem;
  for (std::size_t k : s.premises) prem.emplace_back(static_cast<unsigned long>(k));
  return Pair(EncodeJudgment(s.judgment),
              Pair(Code(static_cast<unsigned>(r.rule)),
                   Pair(EncodeList(prem), inst)));
}

ProofStep DecodeStep(const Code& c) {
  ProofStep s;
  auto [j, rest] = Unpair(c);
  s.judgment = DecodeJudgment(j);
  auto [id, rest2] = Unpair(rest);
  if (id >= static_cast<unsigned>(kBgaRuleCount)) {
    throw DecodeError("rule id out of range");
  }
  s.rule.rule = static_cast<RuleId>(id.get_ui());
  auto [prem, inst] = Unpair(rest2);
  for (const Code& k : DecodeList(prem)) s.premises.push_back(Small(k, "premise"));
  auto [terms, i1] = Unpair(inst);
  s.rule.terms = UnTerms(terms);
  auto [paths, i2] = Unpair(i1);
  for (const Code& p : DecodeList(paths)) {
    Path path;
    for (const Code& k : DecodeList(p)) path.push_back(Small(k, "path index"));
    s.rule.paths.push_back(std::move(path));
  }
  auto [var, i3] = Unpair(i2);
  s.rule.var = Unopt(var, "variable");
  auto [def, ctx] = Unpair(i3);
  s.rule.def = Unopt(def, "definition");
  s.rule.context = UnTerms(ctx);
  if (CanonicalHyps(s.rule.context) != s.rule.context) {
    throw DecodeError("context not in canonical order");
  }
  return s;
}

template <class F>
bool Succeeds(F f) {
  try {
    f();
    return true;
  } catch (const DecodeError&) {
    return false;
  }
}

}  // namespace

Code Pair(const Code& x, const Code& y) {
  Code s = x + y;
  Code t = s * (s + 1);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
  return t + y;
}

std::pair<Code, Code> Unpair(const Code& z) {
  Code w = 8 * z + 1;
  mpz_sqrt(w.get_mpz_t(), w.get_mpz_t());
  w = (w - 1) / 2;
  Code t = w * (w + 1) / 2;
  Code y = z - t;
  return {w - y, y};
}

Code EncodeList(const std::vector<Code>& xs) {
  if (xs.empty()) return 0;
  return Pair(Code(static_cast<unsigned long>(xs.size() - 1)),
              Tree(xs, 0, xs.size())) + 1;
}

std::vector<Code> DecodeList(const Code& c) {
  std::vector<Code> out;
  if (c == 0) return out;
  auto [len, tree] = Unpair(c - 1);
  if (len >= kMaxListLength) throw DecodeError("list too long");
  std::size_t n = len.get_ui() + 1;
  out.reserve(n);
  Untree(tree, n, out);
  return out;
}

Code EncodeTerm(const Term& t) {
  switch (t.kind()) {
    case Kind::kZero:
      return Pair(0, 0);
    case Kind::kVar:
      return Pair(1, Code(t.index()));
    case Kind::kSucc:
      return Pair(2, EncodeTerm(t.child(0)));
    case Kind::kPred:
      return Pair(3, EncodeTerm(t.child(0)));
    case Kind::kNeg:
      return Pair(4, EncodeTerm(t.child(0)));
    case Kind::kOr:
      return Pair(5, Pair(EncodeTerm(t.child(0)), EncodeTerm(t.child(1))));
    case Kind::kEq:
      return Pair(6, Pair(EncodeTerm(t.child(0)), EncodeTerm(t.child(1))));
    case Kind::kCond:
      return Pair(7, Pair(EncodeTerm(t.child(0)),
                          Pair(EncodeTerm(t.child(1)), EncodeTerm(t.child(2)))));
    case Kind::kApply: {
      std::vector<Term> args(t.children().begin(), t.children().end());
      return Pair(8, Pair(Code(t.index()), Terms(args)));
    }
    case Kind::kForall:
    case Kind::kExists:
      throw NotEncodable("quantified terms have no code");
  }
  throw NotEncodable("unknown term");
}

Term DecodeTerm(const Code& c) {
  auto [tag, pay] = Unpair(c);
  if (tag > 8) throw DecodeError("unknown term tag");
  switch (tag.get_ui()) {
    case 0:
      if (pay != 0) throw DecodeError("zero with a payload");
      return Term::Zero();
    case 1:
      return Term::Var(Small(pay, "variable"));
    case 2:
      return Term::Succ(DecodeTerm(pay));
    case 3:
      return Term::Pred(DecodeTerm(pay));
    case 4:
      return Term::Neg(DecodeTerm(pay));
    case 5: {
      auto [l, r] = Unpair(pay);
      return Term::Or(DecodeTerm(l), DecodeTerm(r));
    }
    case 6: {
      auto [l, r] = Unpair(pay);
      return Term::Eq(DecodeTerm(l), DecodeTerm(r));
    }
    case 7: {
      auto [cc, ab] = Unpair(pay);
      auto [a, b] = Unpair(ab);
      return Term::Cond(DecodeTerm(cc), DecodeTerm(a), DecodeTerm(b));
    }
    default: {
      auto [i, args] = Unpair(pay);
      return Term::Apply(Small(i, "definition"), UnTerms(args));
    }
  }
}

Code EncodeJudgment(const Judgment& j) {
  return Pair(Terms(j.hyps()), EncodeTerm(j.concl()));
}

Judgment DecodeJudgment(const Code& c) {
  auto [h, t] = Unpair(c);
  std::vector<Term> hyps = UnTerms(h);
  for (std::size_t i = 1; i < hyps.size(); ++i) {
    if (!(hyps[i - 1] < hyps[i])) {
      throw DecodeError("hypotheses not in canonical order");
    }
  }
  return Judgment(std::move(hyps), DecodeTerm(t));
}

Code EncodeProof(const Proof& p) {
  std::vector<Code> steps;
  for (const ProofStep& s : p.steps) steps.push_back(EncodeStep(s));
  return EncodeList(steps);
}

Proof DecodeProof(const Code& c) {
  Proof p;
  for (const Code& s : DecodeList(c)) p.steps.push_back(DecodeStep(s));
  return p;
}

bool WfTermCode(const Code& c) {
  return Succeeds([&] { DecodeTerm(c); });
}
bool WfJudgmentCode(const Code& c) {
  return Succeeds([&] { DecodeJudgment(c); });
}
bool WfProofCode(const Code& c) {
  return Succeeds([&] { DecodeProof(c); });
}

int ProofCheckC(const DefinitionList& defs, const Code& n, const Code& m) {
  Proof p;
  try {
    p = DecodeProof(n);
  } catch (const DecodeError&) {
    return 0;
  }
  if (p.steps.empty()) return 0;
  try {
    CheckProof(defs, p);
  } catch (const Error&) {
    return 0;
  }
  return EncodeJudgment(p.claim()) == m ? 1 : 0;
}

Code ParseCode(const std::string& decimal) {
  if (decimal.empty() ||
      decimal.find_first_not_of("0123456789") != std::string::npos) {
    throw DecodeError("not a decimal natural number: '" + decimal + "'");
  }
  return Code(decimal, 10);
}

}  // namespace ga
