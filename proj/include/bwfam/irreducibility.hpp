/*
   Copyright 2026 The bwfam Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BWFAM_IRREDUCIBILITY_HPP
#define BWFAM_IRREDUCIBILITY_HPP

#include <string>

#include "bwfam/exactmath.hpp"

namespace bwfam {

enum class Irreducibility { kIrreducible, kReducible, kInconclusive };

struct IrreducibilityResult {
    Irreducibility verdict = Irreducibility::kInconclusive;
    QPoly factor;        // primitive nontrivial factor when reducible
    std::string method;  // which stage decided
};

// Irreducibility over Q of a nonconstant polynomial.
//
// Stages, in order: linear polynomials; squarefreeness over Q; a zero constant
// term; factorization degree patterns modulo up to 12 odd primes (any
// irreducible reduction, or an empty intersection of the subset sums of the
// patterns, certifies irreducibility); Kronecker's interpolation search for
// degree <= 8. Anything beyond that is reported as inconclusive.
IrreducibilityResult check_irreducible(const QPoly& f);

inline constexpr unsigned kMaxPatternPrimes = 12;
inline constexpr std::size_t kMaxKroneckerDegree = 8;

}  // namespace bwfam

#endif  // BWFAM_IRREDUCIBILITY_HPP
