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

#include "bwfam/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "bwfam/error.hpp"

namespace bwfam {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidArgument: return "invalid argument";
        case ErrorCode::kParse: return "parse error";
        case ErrorCode::kDivisionByZero: return "division by zero";
        case ErrorCode::kReducible: return "reducible polynomial";
        case ErrorCode::kInconclusive: return "irreducibility inconclusive";
        case ErrorCode::kNotPrimitiveRoot: return "not a primitive root of unity";
        case ErrorCode::kNoSqrtRule: return "no square root of -D available";
        case ErrorCode::kBadSqrt: return "square root check failed";
        case ErrorCode::kRingMismatch: return "ring mismatch";
        case ErrorCode::kInconsistent: return "internal inconsistency";
        case ErrorCode::kNotIntegral: return "not integral";
        case ErrorCode::kUnknownName: return "unknown name";
    }
    return "unknown error";
}

// ---------------------------------------------------------------------------
// Integer helpers

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw Error(ErrorCode::kParse, "malformed integer '" + std::string(text) + "'");
    }
    Integer n(std::string(digits), 10);
    return negative ? Integer(-n) : n;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_perfect_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer integer_sqrt(const Integer& n) {
    if (sgn(n) < 0) throw Error(ErrorCode::kInvalidArgument, "integer_sqrt of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (sgn(d) == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::optional<Rational> exact_sqrt(const Rational& a) {
    if (a.sign() < 0) return std::nullopt;
    const Integer num = a.numerator();
    const Integer den = a.denominator();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return Rational(integer_sqrt(num), integer_sqrt(den));
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

QPoly::QPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return QPoly(std::move(v));
}

QPoly QPoly::from_integers(std::span<const Integer> coefficients) {
    std::vector<Rational> v;
    v.reserve(coefficients.size());
    for (const auto& c : coefficients) v.emplace_back(c);
    return QPoly(std::move(v));
}

std::optional<std::size_t> QPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t QPoly::deg() const {
    if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Rational QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

const Rational& QPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational QPoly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += constant(*it);
    }
    return acc;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const { return *this / leading(); }

Integer QPoly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : coeffs_) l = lcm(l, c.denominator());
    return l;
}

std::vector<Integer> QPoly::primitive_integer_coefficients() const {
    const Integer d = denominator_lcm();
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer content = 0;
    for (const auto& c : coeffs_) {
        out.push_back(c.numerator() * (d / c.denominator()));
        content = gcd(content, out.back());
    }
    if (sgn(content) != 0) {
        for (auto& c : out) c /= content;
    }
    return out;
}

QPoly QPoly::primitive_part() const {
    const auto ints = primitive_integer_coefficients();
    QPoly p = from_integers(ints);
    if (!p.is_zero() && p.leading().sign() < 0) p = -p;
    return p;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    normalize();
    return *this;
}

QPoly& QPoly::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial divided by zero scalar");
    for (auto& c : coeffs_) c /= rhs;
    return *this;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class TermParser {
   public:
    TermParser(std::string_view text, char variable) : variable_(variable) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) compact_.push_back(c);
        }
    }

    QPoly parse() {
        if (compact_.empty()) fail("empty polynomial");
        QPoly acc;
        bool first = true;
        while (pos_ < compact_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            acc += parse_term(negative);
        }
        return acc;
    }

   private:
    char peek() const { return pos_ < compact_.size() ? compact_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::kParse,
                    "cannot parse polynomial '" + compact_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(compact_[pos_++]);
        return out;
    }

    QPoly parse_term(bool negative) {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                const std::string d = digits();
                if (d.empty()) fail("missing denominator");
                den = Integer(d, 10);
                if (sgn(den) == 0) fail("zero denominator");
            }
            coeff = Rational(Integer(num, 10), den);
            have_coeff = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != variable_) fail("expected variable after '*'");
            }
        }
        std::size_t exponent = 0;
        if (peek() == variable_) {
            ++pos_;
            exponent = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string e = digits();
                if (e.empty()) fail("missing exponent");
                if (e.size() > 6) fail("exponent too large");
                exponent = static_cast<std::size_t>(std::stoul(e));
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or the variable");
        }
        if (negative) coeff = -coeff;
        return QPoly::monomial(coeff, exponent);
    }

    std::string compact_;
    std::size_t pos_ = 0;
    char variable_;
};

}  // namespace

QPoly QPoly::parse(std::string_view text, char variable) { return TermParser(text, variable).parse(); }

std::string QPoly::to_string(char variable) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (c.sign() < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const Rational a = c.abs();
        if (i == 0) {
            out += a.to_string();
            continue;
        }
        if (a != Rational(1)) {
            out += a.to_string();
            out += '*';
        }
        out += variable;
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Division, gcd, square roots

DivMod divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
    const std::size_t db = b.deg();
    if (a.is_zero() || a.deg() < db) return {QPoly(), a};

    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Rational> quo(rem.size() - db);
    const Rational lead = b.leading();
    const auto bc = b.coefficients();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const Rational f = rem[i] / lead;
        quo[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
    }
    rem.resize(db);
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

bool divides(const QPoly& divisor, const QPoly& dividend) { return divmod(dividend, divisor).remainder.is_zero(); }

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "gcd(0, 0) is undefined");
    QPoly x = a;
    QPoly y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "gcd(0, 0) is undefined");
    // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        QPoly s2 = s0 - qr.quotient * s1;
        QPoly t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rational lead = r0.leading();
    return {r0 / lead, s0 / lead, t0 / lead};
}

std::optional<QPoly> exact_sqrt(const QPoly& a) {
    if (a.is_zero()) return QPoly();
    const std::size_t n = a.deg();
    if (n % 2 != 0 || a.leading().sign() < 0) return std::nullopt;
    const auto root_lead = exact_sqrt(a.leading());
    if (!root_lead) return std::nullopt;

    // Match coefficients of y^2 against a from the top down: the x^(n-i)
    // coefficient of y^2 determines y_(m-i) once y_m .. y_(m-i+1) are known.
    const std::size_t m = n / 2;
    std::vector<Rational> y(m + 1);
    y[m] = *root_lead;
    const Rational two_lead = Rational(2) * y[m];
    for (std::size_t i = 1; i <= m; ++i) {
        Rational acc = a.coeff(n - i);
        for (std::size_t j = 1; j < i; ++j) acc -= y[m - j] * y[m - i + j];
        y[m - i] = acc / two_lead;
    }
    QPoly root(std::move(y));
    if (root * root != a) return std::nullopt;
    return root;
}

QPoly pow(const QPoly& base, unsigned exponent) {
    QPoly result = QPoly::constant(1);
    QPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b = b * b;
    }
    return result;
}

}  // namespace bwfam
