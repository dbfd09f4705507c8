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

#include "modp.hpp"

#include <algorithm>

namespace bwfam::modp {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime.
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return result;
}

Poly make_monic(Poly a, std::uint64_t p) {
    if (a.empty()) return a;
    const std::uint64_t inv = inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

}  // namespace

Poly reduce(std::span<const Integer> coefficients, std::uint64_t p) {
    Poly out;
    out.reserve(coefficients.size());
    const Integer modulus(static_cast<unsigned long>(p));
    for (const auto& c : coefficients) {
        Integer r = c % modulus;
        if (sgn(r) < 0) r += modulus;
        out.push_back(r.get_ui());
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

namespace {

// Long division; quotient is optional output.
Poly divide(const Poly& a, const Poly& b, std::uint64_t p, Poly* quotient) {
    Poly r = a;
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = inverse(b.back(), p);
    if (quotient) quotient->assign(r.size() >= b.size() ? r.size() - db : 0, 0);
    while (r.size() >= b.size()) {
        const std::uint64_t f = r.back() * inv % p;
        const std::size_t shift = r.size() - b.size();
        if (quotient) (*quotient)[shift] = f;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] = (r[shift + j] + p - f * b[j] % p) % p;
        trim(r);
    }
    if (quotient) trim(*quotient);
    return r;
}

}  // namespace

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divide(a, b, p, nullptr); }

Poly quotient(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q;
    divide(a, b, p, &q);
    return q;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t x = i < a.size() ? a[i] : 0;
        const std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = (x + p - y) % p;
    }
    trim(out);
    return out;
}

Poly gcd(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(std::move(x), p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % p) % p;
    trim(out);
    return out;
}

Poly pow_mod(const Poly& base, std::uint64_t exponent, const Poly& m, std::uint64_t p) {
    Poly result{1};
    Poly b = rem(base, m, p);
    while (exponent > 0) {
        if (exponent & 1U) result = rem(mul(result, b, p), m, p);
        exponent >>= 1U;
        if (exponent > 0) b = rem(mul(b, b, p), m, p);
    }
    return result;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    const Poly d = derivative(f, p);
    if (d.empty()) return false;
    return degree(gcd(f, d, p)) == 0;
}

std::vector<unsigned> factor_degrees(const Poly& f, std::uint64_t p) {
    std::vector<unsigned> degrees;
    Poly rest = make_monic(f, p);
    const Poly x{0, 1};
    Poly h = x;  // x^(p^i) mod f
    for (unsigned i = 1; 2 * i <= degree(rest); ++i) {
        h = pow_mod(h, p, f, p);
        const Poly g = gcd(rest, sub(h, x, p), p);
        const std::size_t dg = degree(g);
        if (dg > 0) {
            for (std::size_t j = 0; j < dg / i; ++j) degrees.push_back(i);
            rest = quotient(rest, g, p);
        }
    }
    if (degree(rest) > 0) degrees.push_back(static_cast<unsigned>(degree(rest)));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace bwfam::modp
