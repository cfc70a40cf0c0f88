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

#include <gtest/gtest.h>

#include "ga/certify.hpp"
#include "ga/errors.hpp"
#include "ga/primrec.hpp"
#include "testing.hpp"

namespace ga {
namespace {

using testing::Corpus;

// Cantor pairing on machine integers.
std::uint64_t Cantor(std::uint64_t x, std::uint64_t y) {
  return (x + y) * (x + y + 1) / 2 + y;
}

TEST(Pairing, MatchesCantorAndInverts) {
  for (std::uint64_t x = 0; x < 60; ++x) {
    for (std::uint64_t y = 0; y < 60; ++y) {
      Code z = Pair(x, y);
      EXPECT_EQ(z, Code(std::to_string(Cantor(x, y))));
      auto [a, b] = Unpair(z);
      EXPECT_EQ(a, x);
      EXPECT_EQ(b, y);
    }
  }
}

TEST(Pairing, BijectiveOnAnInitialSegment) {
  // Unpair then Pair is the identity on [0, 10^4], and the pairs are
  // distinct, so the map is a bijection onto that segment.
  std::set<std::pair<std::string, std::string>> seen;
  for (unsigned long z = 0; z <= 10000; ++z) {
    auto [x, y] = Unpair(Code(z));
    ASSERT_EQ(Pair(x, y), Code(z));
    ASSERT_TRUE(seen.insert({x.get_str(), y.get_str()}).second);
  }
}

TEST(Lists, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<Code> xs(rng() % 9);
    for (Code& x : xs) x = Code(static_cast<unsigned long>(rng() % 1000));
    EXPECT_EQ(DecodeList(EncodeList(xs)), xs);
  }
  EXPECT_EQ(EncodeList({}), Code(0));
}

TEST(Terms, RoundTrip) {
  DefinitionList defs = Corpus("arith.gad");
  testing::ClosedTerms gen(defs, 8);
  for (int i = 0; i < 1000; ++i) {
    Term t = gen.Formula(4).term;
    Code c = EncodeTerm(t);
    EXPECT_TRUE(WfTermCode(c));
    EXPECT_EQ(DecodeTerm(c), t);
  }
  EXPECT_EQ(DecodeTerm(EncodeTerm(Term::Var(3))), Term::Var(3));
  EXPECT_THROW(EncodeTerm(Term::Forall(0, True())), NotEncodable);
}

TEST(Judgments, RoundTrip) {
  Judgment j({ParseTerm("v1 = 0"), ParseTerm("v0 = v0")}, ParseTerm("S(v0) = S(v0)"));
  Code c = EncodeJudgment(j);
  EXPECT_TRUE(WfJudgmentCode(c));
  EXPECT_EQ(DecodeJudgment(c), j);
}

TEST(Proofs, RoundTripAndCheck) {
  DefinitionList defs = Corpus("arith.gad");
  for (const char* f : {"add", "sub", "mult", "even"}) {
    Proof p = PrimrecTerminationProof(defs, *defs.Find(f));
    Code n = EncodeProof(p);
    EXPECT_TRUE(WfProofCode(n));
    EXPECT_EQ(DecodeProof(n), p);
    EXPECT_EQ(ProofCheckC(defs, n, EncodeJudgment(p.claim())), 1) << f;
    Judgment other({}, True());
    EXPECT_EQ(ProofCheckC(defs, n, EncodeJudgment(other)), 0);
  }
}

// C agrees with the kernel on mutated codes.
TEST(Proofs, CheckerAgreesWithKernelOnMutants) {
  DefinitionList defs = Corpus("arith.gad");
  Proof p = EvalCertify(defs, testing::T("add(1, 2)", defs), 10000);
  Code n = EncodeProof(p);
  Code m = EncodeJudgment(p.claim());
  std::mt19937_64 rng(17);
  std::string digits = n.get_str();
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    std::string mutated = digits;
    std::size_t k = rng() % mutated.size();
    mutated[k] = static_cast<char>('0' + (mutated[k] - '0' + 1 + rng() % 9) % 10);
    Code c(mutated);
    int expected = 0;
    try {
      Proof q = DecodeProof(c);
      CheckProof(defs, q);
      expected = q.claim() == p.claim() ? 1 : 0;
    } catch (const Error&) {
      expected = 0;
    }
    EXPECT_EQ(ProofCheckC(defs, c, m), expected);
    ++agree;
  }
  EXPECT_EQ(agree, 200);
}

TEST(Decoding, RejectsMalformedCodes) {
  EXPECT_THROW(ParseCode("12a"), DecodeError);
  EXPECT_THROW(ParseCode(""), DecodeError);
  EXPECT_EQ(ParseCode("123"), Code(123));
  // Tag 99 is not a term constructor.
  EXPECT_FALSE(WfTermCode(Pair(99, 0)));
  EXPECT_THROW(DecodeTerm(Pair(99, 0)), DecodeError);
}

}  // namespace
}  // namespace ga
