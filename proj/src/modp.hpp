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

// Polynomials over F_p for small word-sized primes (p < 2^31), used only to
// read off factorization degree patterns.

#ifndef BWFAM_SRC_MODP_HPP
#define BWFAM_SRC_MODP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bwfam/exactmath.hpp"

namespace bwfam::modp {

using Poly = std::vector<std::uint64_t>;  // low to high, no trailing zeros

Poly reduce(std::span<const Integer> coefficients, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(const Poly& a, const Poly& b, std::uint64_t p);  // monic
Poly quotient(const Poly& a, const Poly& b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
// base^(p) mod m, by repeated squaring.
Poly pow_mod(const Poly& base, std::uint64_t exponent, const Poly& m, std::uint64_t p);

inline std::size_t degree(const Poly& a) { return a.empty() ? 0 : a.size() - 1; }

bool is_squarefree(const Poly& f, std::uint64_t p);
// Degrees of the irreducible factors of a squarefree f, ascending.
std::vector<unsigned> factor_degrees(const Poly& f, std::uint64_t p);

}  // namespace bwfam::modp

#endif  // BWFAM_SRC_MODP_HPP
