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

// Goedel codes built from the Cantor pairing function.
//
//   term      0 -> <0,0>, vi -> <1,i>, S(a) -> <2,a>, P(a) -> <3,a>,
//             ~a -> <4,a>, a \/ b -> <5,<a,b>>, a = b -> <6,<a,b>>,
//             c ? a : b -> <7,<c,<a,b>>>, di(args) -> <8,<i,list(args)>>
//   list      [] -> 0, xs -> <len-1, tree(xs)> + 1, where tree([x]) = x and
//             tree(xs) pairs the trees of the two halves (first half longer)
//   judgment  <list(hyps, in canonical order), concl>
//   step      <judgment, <rule id, <list(premises), inst>>>
//   inst      <list(terms), <list(list(path)), <var?, <def?, list(context)>>>>
//             where an absent option is 0 and a present value v is v+1
//   proof     list(steps)

#ifndef GA_CODE_HPP_
#define GA_CODE_HPP_

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ga/kernel.hpp"

namespace ga {

using Code = mpz_class;

// (x+y)(x+y+1)/2 + y
Code Pair(const Code& x, const Code& y);
std::pair<Code, Code> Unpair(const Code& z);
inline Code Left(const Code& z) { return Unpair(z).first; }
inline Code Right(const Code& z) { return Unpair(z).second; }

// Decoding refuses lists longer than this.
inline constexpr std::size_t kMaxListLength = 1u << 20;

Code EncodeList(const std::vector<Code>& xs);
std::vector<Code> DecodeList(const Code& c);

// Throws NotEncodable for quantifier nodes and quantifier rules; decoding
// throws DecodeError.
Code EncodeTerm(const Term& t);
Term DecodeTerm(const Code& c);
Code EncodeJudgment(const Judgment& j);
Judgment DecodeJudgment(const Code& c);
Code EncodeProof(const Proof& p);
Proof DecodeProof(const Code& c);

bool WfTermCode(const Code& c);
bool WfJudgmentCode(const Code& c);
bool WfProofCode(const Code& c);

// 1 iff n codes a proof the kernel accepts whose claim has code m.
int ProofCheckC(const DefinitionList& defs, const Code& n, const Code& m);

Code ParseCode(const std::string& decimal);

}  // namespace ga

#endif  // GA_CODE_HPP_
