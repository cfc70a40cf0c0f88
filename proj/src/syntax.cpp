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

#include "ga/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace ga {
namespace {

struct Token {
  enum Type { kEnd, kNat, kIdent, kSym, kString };
  Type type = kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> Lex(std::string_view src, std::size_t line0) {
  static const char* kSyms[] = {"<->", "->", "\\/", "/\\", "!=", ":=", "(",
                                ")",   ",",  ".",   "?",   ":",  "~",  "=",
                                "{",   "}",  "@",   "$",   "#",  ";"};
  std::vector<Token> out;
  std::size_t line = line0, col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      t.type = Token::kNat;
      t.text = std::string(src.substr(i, j - i));
    } else if (IsIdentStart(c)) {
      std::size_t j = i;
      while (j < src.size() && IsIdentChar(src[j])) ++j;
      t.type = Token::kIdent;
      t.text = std::string(src.substr(i, j - i));
    } else if (c == '"') {
      std::size_t j = src.find('"', i + 1);
      if (j == std::string_view::npos) {
        throw SyntaxError("unterminated string", line, col);
      }
      t.type = Token::kString;
      t.text = std::string(src.substr(i + 1, j - i - 1));
      ++j;
      col += j - i;
      i = j;
      out.push_back(std::move(t));
      continue;
    } else {
      bool found = false;
      for (const char* s : kSyms) {
        std::string_view sv(s);
        if (src.substr(i, sv.size()) == sv) {
          t.type = Token::kSym;
          t.text = std::string(sv);
          found = true;
          break;
        }
      }
      if (!found) {
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          line, col);
      }
    }
    col += t.text.size();
    i += t.text.size();
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

std::optional<std::uint32_t> IndexedName(const std::string& s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return std::nullopt;
  if (s.size() > 10) return std::nullopt;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  }
  if (s.size() > 2 && s[1] == '0') return std::nullopt;
  unsigned long long v = std::stoull(s.substr(1));
  if (v > 0xffffffffULL) return std::nullopt;
  return static_cast<std::uint32_t>(v);
}

bool Reserved(const std::string& s) {
  static const std::set<std::string> kWords = {
      "S", "P", "nat", "bool", "true", "false", "forall", "exists", "include"};
  return kWords.count(s) > 0;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, ParseContext& ctx)
      : toks_(std::move(toks)), ctx_(ctx) {
    std::uint32_t next = 0;
    for (const auto& [name, v] : ctx_.vars) next = std::max(next, v + 1);
    for (const Token& t : toks_) {
      if (t.type != Token::kIdent) continue;
      if (auto v = IndexedName(t.text, 'v')) next = std::max(next, *v + 1);
    }
    next_ = next;
  }

  Term ParseAll() {
    Term t = ParseCond();
    if (Peek().type != Token::kEnd) Fail("unexpected '" + Peek().text + "'");
    return t;
  }

  Term ParseCond() {
    Term c = ParseIff();
    if (AcceptSym("?")) {
      Term a = ParseCond();
      ExpectSym(":");
      Term b = ParseCond();
      return Term::Cond(c, a, b);
    }
    return c;
  }

 private:
  const Token& Peek() const { return toks_[pos_]; }
  const Token& Next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw SyntaxError(msg, Peek().line, Peek().col);
  }

  bool IsSym(const char* s) const {
    return Peek().type == Token::kSym && Peek().text == s;
  }
  bool AcceptSym(const char* s) {
    if (!IsSym(s)) return false;
    ++pos_;
    return true;
  }
  void ExpectSym(const char* s) {
    if (!AcceptSym(s)) {
      Fail(std::string("expected '") + s + "'" +
           (Peek().type == Token::kEnd ? " at end of input"
                                       : " before '" + Peek().text + "'"));
    }
  }

  Term ParseIff() {
    Term l = ParseImp();
    while (AcceptSym("<->")) l = Iff(l, ParseImp());
    return l;
  }

  Term ParseImp() {
    Term l = ParseDisj();
    if (AcceptSym("->")) return Implies(l, ParseImp());
    return l;
  }

  Term ParseDisj() {
    Term l = ParseEq();
    for (;;) {
      if (AcceptSym("\\/")) {
        l = Term::Or(l, ParseEq());
      } else if (AcceptSym("/\\")) {
        l = And(l, ParseEq());
      } else {
        return l;
      }
    }
  }

  Term ParseEq() {
    Term l = ParseUnary();
    if (AcceptSym("=")) return Term::Eq(l, ParseUnary());
    if (AcceptSym("!=")) return Neq(l, ParseUnary());
    return l;
  }

  Term ParseUnary() {
    if (AcceptSym("~")) return Term::Neg(ParseUnary());
    if (Peek().type == Token::kIdent &&
        (Peek().text == "forall" || Peek().text == "exists")) {
      bool all = Next().text == "forall";
      if (Peek().type != Token::kIdent || Reserved(Peek().text)) {
        Fail("expected a variable name after quantifier");
      }
      std::string name = Next().text;
      VarIndex v;
      if (auto idx = IndexedName(name, 'v')) {
        v = *idx;
      } else {
        v = next_++;
      }
      ExpectSym(".");
      scope_.emplace_back(name, v);
      Term body = ParseCond();
      scope_.pop_back();
      return all ? Term::Forall(v, body) : Term::Exists(v, body);
    }
    return ParseAtom();
  }

  std::vector<Term> ParseArgs() {
    std::vector<Term> args;
    ExpectSym("(");
    if (AcceptSym(")")) return args;
    do {
      args.push_back(ParseCond());
    } while (AcceptSym(","));
    ExpectSym(")");
    return args;
  }

  Term One(const char* what) {
    std::vector<Term> a = ParseArgs();
    if (a.size() != 1) Fail(std::string(what) + " takes one argument");
    return a[0];
  }

  Term ParseAtom() {
    const Token& t = Peek();
    if (AcceptSym("(")) {
      Term inner = ParseCond();
      ExpectSym(")");
      return inner;
    }
    if (t.type == Token::kNat) {
      std::string text = Next().text;
      if (text.size() > 5 || std::stoull(text) > kMaxLiteral) {
        Fail("numeral literal above " + std::to_string(kMaxLiteral));
      }
      return Numeral(std::stoull(text));
    }
    if (t.type != Token::kIdent) {
      if (t.type == Token::kEnd) Fail("unexpected end of input");
      Fail("unexpected '" + t.text + "'");
    }
    std::string name = Next().text;
    if (name == "S") return Term::Succ(One("S"));
    if (name == "P") return Term::Pred(One("P"));
    if (name == "nat") return NatOf(One("nat"));
    if (name == "bool") return BoolOf(One("bool"));
    if (name == "true") return True();
    if (name == "false") return False();
    if (Reserved(name)) Fail("unexpected '" + name + "'");
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return Term::Var(it->second);
    }
    if (auto v = IndexedName(name, 'v')) return Term::Var(*v);
    std::optional<DefIndex> def;
    if (ctx_.defs) def = ctx_.defs->Find(name);
    if (!def) {
      if (auto it = ctx_.vars.find(name); it != ctx_.vars.end()) {
        return Term::Var(it->second);
      }
    }
    if (!def) {
      if (auto d = IndexedName(name, 'd')) {
        std::vector<Term> args;
        if (IsSym("(")) args = ParseArgs();
        return Term::Apply(*d, std::move(args));
      }
    }
    if (!def) {
      if (ctx_.auto_vars && !IsSym("(")) {
        VarIndex v = next_++;
        ctx_.vars.emplace(name, v);
        return Term::Var(v);
      }
      pos_--;
      Fail("unknown definition name '" + name + "'");
    }
    std::vector<Term> args;
    if (IsSym("(")) args = ParseArgs();
    std::size_t want = ctx_.defs->Arity(*def);
    if (args.size() != want) {
      Fail("'" + name + "' expects " + std::to_string(want) + " argument" +
           (want == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
    }
    return Term::Apply(*def, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseContext& ctx_;
  std::vector<std::pair<std::string, VarIndex>> scope_;
  VarIndex next_ = 0;
};

// Precedence levels, loosest first.
enum Level { kCondL, kIffL, kImpL, kDisjL, kEqL, kUnaryL, kAtomL };

void PrintRec(const Term& t, int level, const DefinitionList* defs,
              std::string& out) {
  auto open = [&](int mine) {
    if (mine < level) out += '(';
  };
  auto close = [&](int mine) {
    if (mine < level) out += ')';
  };
  switch (t.kind()) {
    case Kind::kZero:
      out += '0';
      return;
    case Kind::kVar:
      out += 'v';
      out += std::to_string(t.index());
      return;
    case Kind::kSucc:
      if (auto n = NumeralValue(t)) {
        out += std::to_string(*n);
        return;
      }
      out += "S(";
      PrintRec(t.child(0), kCondL, defs, out);
      out += ')';
      return;
    case Kind::kPred:
      out += "P(";
      PrintRec(t.child(0), kCondL, defs, out);
      out += ')';
      return;
    case Kind::kNeg:
      out += '~';
      PrintRec(t.child(0), kUnaryL, defs, out);
      return;
    case Kind::kOr:
      open(kDisjL);
      PrintRec(t.child(0), kDisjL, defs, out);
      out += " \\/ ";
      PrintRec(t.child(1), kEqL, defs, out);
      close(kDisjL);
      return;
    case Kind::kEq:
      open(kEqL);
      PrintRec(t.child(0), kUnaryL, defs, out);
      out += " = ";
      PrintRec(t.child(1), kUnaryL, defs, out);
      close(kEqL);
      return;
    case Kind::kCond:
      open(kCondL);
      PrintRec(t.child(0), kIffL, defs, out);
      out += " ? ";
      PrintRec(t.child(1), kCondL, defs, out);
      out += " : ";
      PrintRec(t.child(2), kCondL, defs, out);
      close(kCondL);
      return;
    case Kind::kApply: {
      bool named = defs && defs->Contains(t.index()) &&
                   defs->Find(defs->at(t.index()).name) == t.index() &&
                   !defs->at(t.index()).name.empty();
      if (named) {
        out += defs->at(t.index()).name;
        if (t.arity() == 0) return;
      } else {
        out += 'd';
        out += std::to_string(t.index());
      }
      out += '(';
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ", ";
        PrintRec(t.child(i), kCondL, defs, out);
      }
      out += ')';
      return;
    }
    case Kind::kForall:
    case Kind::kExists:
      // The body extends as far right as possible, so anything but the
      // outermost position needs parentheses.
      if (level > kCondL) out += '(';
      out += t.is(Kind::kForall) ? "forall v" : "exists v";
      out += std::to_string(t.index());
      out += ". ";
      PrintRec(t.child(0), kCondL, defs, out);
      if (level > kCondL) out += ')';
      return;
  }
}

}  // namespace

Term ParseTerm(std::string_view text, ParseContext& ctx) {
  Parser p(Lex(text, 1), ctx);
  return p.ParseAll();
}

Term ParseTerm(std::string_view text, const DefinitionList* defs) {
  ParseContext ctx;
  ctx.defs = defs;
  return ParseTerm(text, ctx);
}

std::string Print(const Term& t, const DefinitionList* defs) {
  std::string out;
  PrintRec(t, kCondL, defs, out);
  return out;
}

std::string ReadFile(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

struct PendingDef {
  DefIndex index;
  std::vector<std::string> params;
  std::vector<Token> body;
  std::size_t line;
};

std::vector<Token> Slice(const std::vector<Token>& toks, std::size_t from) {
  std::vector<Token> out(toks.begin() + from, toks.end());
  return out;
}

}  // namespace

void LoadDefinitions(std::string_view text, DefinitionList& defs,
                     const std::filesystem::path& base_dir,
                     std::set<std::filesystem::path>* loaded) {
  std::set<std::filesystem::path> local;
  if (!loaded) loaded = &local;
  std::vector<PendingDef> pending;
  std::size_t first_new = defs.size();
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> toks = Lex(line, line_no);
    if (toks.size() == 1) continue;
    const Token& head = toks[0];
    if (head.type == Token::kIdent && head.text == "include") {
      if (toks[1].type != Token::kString || toks[2].type != Token::kEnd) {
        throw SyntaxError("expected include \"file\"", head.line, head.col);
      }
      LoadDefinitionFile(base_dir / toks[1].text, defs, loaded);
      first_new = defs.size();
      if (!pending.empty()) {
        throw SyntaxError("include must precede definitions", head.line,
                          head.col);
      }
      continue;
    }
    if (head.type != Token::kIdent || Reserved(head.text) ||
        IndexedName(head.text, 'v') || IndexedName(head.text, 'd')) {
      throw SyntaxError("expected a definition name", head.line, head.col);
    }
    std::size_t i = 1;
    std::vector<std::string> params;
    auto sym = [&](const char* s) {
      return toks[i].type == Token::kSym && toks[i].text == s;
    };
    if (sym("(")) {
      ++i;
      if (!sym(")")) {
        for (;;) {
          if (toks[i].type != Token::kIdent || Reserved(toks[i].text)) {
            throw SyntaxError("expected a parameter name", toks[i].line,
                              toks[i].col);
          }
          if (std::find(params.begin(), params.end(), toks[i].text) !=
              params.end()) {
            throw SyntaxError("duplicate parameter '" + toks[i].text + "'",
                              toks[i].line, toks[i].col);
          }
          params.push_back(toks[i].text);
          ++i;
          if (sym(",")) {
            ++i;
            continue;
          }
          break;
        }
      }
      if (!sym(")")) {
        throw SyntaxError("expected ')'", toks[i].line, toks[i].col);
      }
      ++i;
    }
    if (!sym(":=")) throw SyntaxError("expected ':='", toks[i].line, toks[i].col);
    ++i;
    for (std::size_t d = first_new; d < defs.size(); ++d) {
      if (defs.at(d).name == head.text) {
        throw SyntaxError("duplicate definition '" + head.text + "'",
                          head.line, head.col);
      }
    }
    if (defs.Find(head.text)) {
      throw SyntaxError("definition '" + head.text + "' already loaded",
                        head.line, head.col);
    }
    DefIndex idx = defs.Reserve(head.text, params.size());
    pending.push_back({idx, params, Slice(toks, i), line_no});
  }
  for (PendingDef& p : pending) {
    ParseContext ctx;
    ctx.defs = &defs;
    for (std::size_t k = 0; k < p.params.size(); ++k) {
      ctx.vars.emplace(p.params[k], static_cast<VarIndex>(k));
    }
    const Token head = p.body.front();
    Parser parser(std::move(p.body), ctx);
    Term body = parser.ParseAll();
    if (BodyArity(body) != p.params.size()) {
      throw SyntaxError(
          "body of '" + defs.at(p.index).name + "' must use its last parameter "
          "and no other free variables",
          head.line, head.col);
    }
    defs.SetBody(p.index, body);
  }
}

void LoadDefinitionFile(const std::filesystem::path& file,
                        DefinitionList& defs,
                        std::set<std::filesystem::path>* loaded) {
  std::set<std::filesystem::path> local;
  if (!loaded) loaded = &local;
  std::filesystem::path canon = std::filesystem::weakly_canonical(file);
  if (loaded->count(canon)) return;
  loaded->insert(canon);
  std::string text = ReadFile(file);
  try {
    LoadDefinitions(text, defs, file.parent_path(), loaded);
  } catch (const SyntaxError& e) {
    throw SyntaxError(file.filename().string() + ": " + e.what(), e.line(),
                      e.column());
  }
}

}  // namespace ga
