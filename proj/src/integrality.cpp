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

#include "bwfam/integrality.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "bwfam/error.hpp"
#include "bwfam/irreducibility.hpp"

namespace bwfam {

bool IntegralityProfile::admits(const Integer& a) const {
    Integer r = a % modulus;
    if (sgn(r) < 0) r += modulus;
    return std::binary_search(good_residues.begin(), good_residues.end(), r);
}

IntegralityProfile integrality_profile(const QPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "integrality profile of the zero polynomial");
    IntegralityProfile profile;
    profile.modulus = f.denominator_lcm();
    if (profile.modulus > kMaxProfileModulus) {
        throw Error(ErrorCode::kInvalidArgument,
                    "coefficient denominators too large for residue enumeration (lcm " + to_string(profile.modulus) + ")");
    }
    // d*f has integer coefficients; f(a) is integral iff (d*f)(a) = 0 mod d,
    // which depends only on a mod d.
    const QPoly scaled_poly = f * Rational(profile.modulus);
    const auto scaled = scaled_poly.coefficients();
    const unsigned long d = profile.modulus.get_ui();
    for (unsigned long a = 0; a < d; ++a) {
        unsigned long acc = 0;
        for (std::size_t i = scaled.size(); i-- > 0;) {
            Integer c = scaled[i].numerator() % profile.modulus;
            if (sgn(c) < 0) c += profile.modulus;
            acc = static_cast<unsigned long>((static_cast<unsigned __int128>(acc) * a + c.get_ui()) % d);
        }
        if (acc == 0) profile.good_residues.emplace_back(a);
    }
    return profile;
}

Integer value_gcd(const QPoly& f) {
    const IntegralityProfile profile = integrality_profile(f);
    if (!profile.represents_integers()) {
        throw Error(ErrorCode::kNotIntegral, f.to_string() + " takes no integer value at integer arguments");
    }
    // For each good class a0, g(x) = f(a0 + d*x) is integer-valued on Z, so the
    // gcd of all its values is the gcd of g(0), ..., g(deg g).
    const std::size_t n = f.deg();
    Integer g = 0;
    for (const auto& a0 : profile.good_residues) {
        for (std::size_t i = 0; i <= n; ++i) {
            const Rational v = f.eval(Rational(a0 + profile.modulus * static_cast<unsigned long>(i)));
            if (!v.is_integer()) throw Error(ErrorCode::kInconsistent, "good residue produced a non-integer value");
            g = gcd(g, v.numerator());
        }
    }
    return g;
}

PrimesVerdict represents_primes(const QPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "represents_primes of the zero polynomial");
    PrimesVerdict v;
    v.nonconstant = !f.is_constant();
    v.positive_leading = f.leading().sign() > 0;
    const IntegralityProfile profile = integrality_profile(f);
    v.represents_integers = profile.represents_integers();
    if (v.represents_integers) v.value_gcd = value_gcd(f);
    if (v.nonconstant) {
        const IrreducibilityResult irr = check_irreducible(f);
        if (irr.verdict == Irreducibility::kInconclusive) {
            throw Error(ErrorCode::kInconclusive, "could not decide irreducibility of " + f.to_string() + ": " + irr.method);
        }
        v.irreducible = irr.verdict == Irreducibility::kIrreducible;
        if (!v.irreducible) v.factor = irr.factor;
    }
    v.verdict = v.nonconstant && v.irreducible && v.represents_integers && v.positive_leading && v.value_gcd == 1;
    return v;
}

// ---------------------------------------------------------------------------
// Primality

Integer deterministic_bound() { return Integer("3317044064679887385961981", 10); }

namespace {

constexpr std::array<unsigned long, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// One Miller-Rabin round; n odd > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const Integer& n, const Integer& d, unsigned long s, const Integer& base) {
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

}  // namespace

PrimalityResult test_prime(const Integer& input, std::uint64_t seed) {
    const Integer n = abs(input);
    const bool deterministic = n < deterministic_bound();
    PrimalityResult result{false, deterministic ? PrimalityRegime::kDeterministic : PrimalityRegime::kProbabilistic};
    if (n < 2) return result;
    for (unsigned long p : kWitnesses) {
        if (n == p) {
            result.prime = true;
            return result;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return result;
    }
    Integer d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (deterministic) {
        for (unsigned long p : kWitnesses) {
            if (!strong_probable_prime(n, d, s, Integer(p))) return result;
        }
        result.prime = true;
        return result;
    }

    std::uint64_t h = mix(seed);
    const std::string digits = n.get_str(16);
    for (char c : digits) h = mix(h ^ static_cast<unsigned char>(c));
    std::mt19937_64 rng(h);
    const Integer span = n - 3;
    const std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
    for (unsigned round = 0; round < kProbabilisticRounds; ++round) {
        Integer a = 0;
        for (std::size_t w = 0; w < words; ++w) {
            a <<= 64;
            a += Integer(std::to_string(rng()), 10);
        }
        a = a % span + 2;  // [2, n-2]
        if (!strong_probable_prime(n, d, s, a)) return result;
    }
    result.prime = true;
    return result;
}

bool is_prime(const Integer& n, std::uint64_t seed) { return test_prime(n, seed).prime; }

bool is_prime_power(const Integer& input, std::uint64_t seed) {
    const Integer n = abs(input);
    if (n < 4 || mpz_perfect_power_p(n.get_mpz_t()) == 0) return false;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long e = 2; e <= bits; ++e) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0 && is_prime(root, seed)) return true;
    }
    return false;
}

}  // namespace bwfam
