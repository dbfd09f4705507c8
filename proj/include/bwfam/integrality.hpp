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

// Integer-valuedness of rational polynomials, the "represents primes"
// predicate, and big-integer primality.

#ifndef BWFAM_INTEGRALITY_HPP
#define BWFAM_INTEGRALITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bwfam/exactmath.hpp"

namespace bwfam {

// f(a) is an integer exactly when a mod d lies in good_residues, where d is
// the lcm of the coefficient denominators (d*f has integer coefficients).
struct IntegralityProfile {
    Integer modulus;
    std::vector<Integer> good_residues;  // ascending, within [0, modulus)

    bool represents_integers() const noexcept { return !good_residues.empty(); }
    bool admits(const Integer& a) const;
};

// Residue enumeration is capped at this modulus.
inline constexpr unsigned long kMaxProfileModulus = 1UL << 24;

IntegralityProfile integrality_profile(const QPoly& f);

// gcd of f(a) over all integers a with f(a) integral. Throws
// Error(kNotIntegral) when f never takes an integer value.
Integer value_gcd(const QPoly& f);

struct PrimesVerdict {
    bool nonconstant = false;
    bool represents_integers = false;
    bool irreducible = false;
    bool positive_leading = false;
    Integer value_gcd = 0;   // 0 when f never takes an integer value
    std::optional<QPoly> factor;  // witness of reducibility
    bool verdict = false;
};

// Throws Error(kInconclusive) when irreducibility cannot be decided.
PrimesVerdict represents_primes(const QPoly& f);

enum class PrimalityRegime { kDeterministic, kProbabilistic };

struct PrimalityResult {
    bool prime = false;
    PrimalityRegime regime = PrimalityRegime::kDeterministic;
};

// Miller-Rabin. Below kDeterministicBound the first 13 prime bases make the
// answer exact; above it, kProbabilisticRounds random bases drawn from a
// generator seeded with (seed, n) make the result reproducible.
PrimalityResult test_prime(const Integer& n, std::uint64_t seed = 0);
bool is_prime(const Integer& n, std::uint64_t seed = 0);

// 3.317e24; the 13-base witness set {2, ..., 41} is exact below it.
Integer deterministic_bound();
inline constexpr unsigned kProbabilisticRounds = 64;

// True when n = p^e for a prime p and e >= 2.
bool is_prime_power(const Integer& n, std::uint64_t seed = 0);

}  // namespace bwfam

#endif  // BWFAM_INTEGRALITY_HPP
