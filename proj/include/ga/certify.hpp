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

// Certificates of evaluation: a closed term that reduces is proved equal to
// its value by following the reduction backwards.

#ifndef GA_CERTIFY_HPP_
#define GA_CERTIFY_HPP_

#include "ga/derivation.hpp"
#include "ga/eval.hpp"

namespace ga {

// |- n = n for the numeral n.
Line NumeralNat(Derivation& d, Nat n);
// From G |- a = b conclude G |- a = a.
Line NatFromEq(Derivation& d, Line eq);

// |- t = n for the value n of t. Throws NotValue if t does not reduce within
// fuel, Uncertifiable if the reduction uses a step the rules cannot mirror
// (P(0), a native call, a formula used as a number).
Line CertifyValue(Derivation& d, const Term& t, Fuel fuel);
// |- t when t reduces to 1, |- ~t when it reduces to 0.
Line CertifyTruth(Derivation& d, const Term& t, Fuel fuel);

enum class CertifyMode { kValue, kTruth };

// The same as a standalone proof. Throws like the functions above.
Proof EvalCertify(const DefinitionList& defs, const Term& t, Fuel fuel,
                  CertifyMode mode = CertifyMode::kValue);

}  // namespace ga

#endif  // GA_CERTIFY_HPP_
