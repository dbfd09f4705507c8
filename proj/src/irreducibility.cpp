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

#include "bwfam/irreducibility.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "bwfam/error.hpp"
#include "modp.hpp"

namespace bwfam {

namespace {

constexpr std::size_t kMaxDegreeBits = 512;
constexpr unsigned long kTrialDivisionBound = 100000;
constexpr double kMaxKroneckerCombinations = 4e6;

using DegreeSet = std::bitset<kMaxDegreeBits>;

bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

DegreeSet subset_sums(const std::vector<unsigned>& degrees) {
    DegreeSet sums;
    sums.set(0);
    for (unsigned d : degrees) sums |= sums << d;
    return sums;
}

IrreducibilityResult reducible(QPoly factor, std::string method) {
    return {Irreducibility::kReducible, factor.primitive_part(), std::move(method)};
}

IrreducibilityResult irreducible(std::string method) {
    return {Irreducibility::kIrreducible, QPoly(), std::move(method)};
}

// Prime factorization of |n| > 0 as (prime, exponent) pairs, or nullopt when
// a large cofactor resists trial division and is not a probable prime.
std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(const Integer& n) {
    Integer rest = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * Integer(p) > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        out.emplace_back(Integer(p), e);
    }
    if (rest > 1) {
        const Integer bound = Integer(kTrialDivisionBound) * Integer(kTrialDivisionBound);
        if (rest >= bound && mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0) return std::nullopt;
        out.emplace_back(rest, 1);
    }
    return out;
}

std::vector<Integer> positive_divisors(const std::vector<std::pair<Integer, unsigned>>& factors) {
    std::vector<Integer> divisors{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divisors.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

struct SamplePoint {
    Integer at;
    std::vector<Integer> divisors;  // positive divisors of |f(at)|
};

// Newton interpolation through (xs[i], ys[i]); returns the coefficients in
// the monomial basis.
QPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
        }
    }
    QPoly acc = QPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * QPoly{Rational(Integer(-xs[i])), Rational(1)} + QPoly::constant(dd[i]);
    }
    return acc;
}

bool has_integer_coefficients(const QPoly& p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational& c) { return c.is_integer(); });
}

// Looks for an integer factor of exact degree d of the primitive polynomial f.
// Returns the factor, nullopt if none exists, or throws when the search would
// be too expensive to finish.
std::optional<QPoly> kronecker_search(const QPoly& f, std::size_t d) {
    const std::size_t n = f.deg();
    const Integer lead = f.leading().numerator();
    const Integer constant_term = f.coeff(0).numerator();

    std::vector<SamplePoint> candidates;
    const long radius = static_cast<long>(4 * n + 12);
    for (long a = 0; a <= radius; a = (a > 0 ? -a : -a + 1)) {
        const Rational v = f.eval(Rational(a));
        if (v.is_zero()) return QPoly{Rational(-a), Rational(1)};
        auto factors = factor_integer(v.numerator());
        if (!factors) continue;
        candidates.push_back({Integer(a), positive_divisors(*factors)});
        if (a < 0 && -a >= radius) break;
    }
    if (candidates.size() < d + 1) throw Error(ErrorCode::kInconclusive, "not enough factorable sample points");
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const SamplePoint& x, const SamplePoint& y) { return x.divisors.size() < y.divisors.size(); });
    candidates.resize(d + 1);

    double combinations = 1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        combinations *= static_cast<double>(candidates[i].divisors.size()) * (i == 0 ? 1.0 : 2.0);
    }
    if (combinations > kMaxKroneckerCombinations) {
        throw Error(ErrorCode::kInconclusive, "Kronecker search space too large");
    }

    std::vector<Integer> xs;
    for (const auto& c : candidates) xs.push_back(c.at);
    std::vector<Integer> ys(d + 1);
    // Odometer over divisor choices; the first value stays positive because
    // g and -g are interchangeable.
    std::vector<std::size_t> index(d + 1, 0);
    std::vector<int> sign(d + 1, 1);
    while (true) {
        for (std::size_t i = 0; i <= d; ++i) ys[i] = candidates[i].divisors[index[i]] * sign[i];
        const QPoly g = interpolate(xs, ys);
        if (!g.is_zero() && g.deg() == d && has_integer_coefficients(g)) {
            const Integer gl = g.leading().numerator();
            const Integer g0 = g.coeff(0).numerator();
            if (mpz_divisible_p(lead.get_mpz_t(), gl.get_mpz_t()) != 0 && sgn(g0) != 0 &&
                mpz_divisible_p(constant_term.get_mpz_t(), g0.get_mpz_t()) != 0 && divides(g, f)) {
                return g;
            }
        }
        std::size_t pos = 0;
        while (pos <= d) {
            if (pos > 0 && sign[pos] == 1) {
                sign[pos] = -1;
                break;
            }
            sign[pos] = 1;
            if (++index[pos] < candidates[pos].divisors.size()) break;
            index[pos] = 0;
            ++pos;
        }
        if (pos > d) break;
    }
    return std::nullopt;
}

IrreducibilityResult check_irreducible_uncached(const QPoly& input) {
    if (input.is_constant()) throw Error(ErrorCode::kInvalidArgument, "irreducibility of a constant polynomial");
    const QPoly f = input.primitive_part();
    const std::size_t n = f.deg();
    if (n == 1) return irreducible("linear");
    if (n >= kMaxDegreeBits) throw Error(ErrorCode::kInvalidArgument, "degree too large for irreducibility test");

    const QPoly g = gcd(f, f.derivative());
    if (!g.is_constant()) return reducible(g, "repeated factor");
    if (f.coeff(0).is_zero()) return reducible(QPoly::x(), "zero constant term");

    const auto ints = f.primitive_integer_coefficients();
    const Integer& lead = ints.back();
    DegreeSet possible;
    for (std::size_t d = 1; d < n; ++d) possible.set(d);

    unsigned used = 0;
    for (unsigned long p = 3; used < kMaxPatternPrimes && p < 2000; p += 2) {
        if (!is_small_prime(p) || mpz_divisible_ui_p(lead.get_mpz_t(), p) != 0) continue;
        const modp::Poly fp = modp::reduce(ints, p);
        if (modp::degree(fp) != n || !modp::is_squarefree(fp, p)) continue;
        ++used;
        const auto degrees = modp::factor_degrees(fp, p);
        if (degrees.size() == 1) return irreducible("irreducible modulo " + std::to_string(p));
        possible &= subset_sums(degrees);
        bool any = false;
        for (std::size_t d = 1; d < n && !any; ++d) any = possible.test(d);
        if (!any) return irreducible("factorization degree patterns");
    }

    if (n > kMaxKroneckerDegree) {
        return {Irreducibility::kInconclusive, QPoly(), "degree above Kronecker limit"};
    }
    try {
        for (std::size_t d = 1; d <= n / 2; ++d) {
            if (!possible.test(d) && !possible.test(n - d)) continue;
            if (auto factor = kronecker_search(f, d)) return reducible(*factor, "kronecker");
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::kInconclusive) throw;
        return {Irreducibility::kInconclusive, QPoly(), e.what()};
    }
    return irreducible("kronecker");
}

}  // namespace

// Results are memoized by primitive part; rings, validators and scans ask
// about the same moduli repeatedly.
IrreducibilityResult check_irreducible(const QPoly& input) {
    if (input.is_constant()) throw Error(ErrorCode::kInvalidArgument, "irreducibility of a constant polynomial");
    static std::mutex mutex;
    static std::map<std::string, IrreducibilityResult> cache;
    constexpr std::size_t kMaxCacheEntries = 4096;

    const std::string key = input.primitive_part().to_string();
    {
        const std::lock_guard<std::mutex> lock(mutex);
        if (const auto it = cache.find(key); it != cache.end()) return it->second;
    }
    IrreducibilityResult result = check_irreducible_uncached(input);
    const std::lock_guard<std::mutex> lock(mutex);
    if (cache.size() >= kMaxCacheEntries) cache.clear();
    cache.emplace(key, result);
    return result;
}

}  // namespace bwfam
