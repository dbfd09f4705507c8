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

// Exact rational numbers and dense univariate polynomials over Q.
//
// Every value is immutable once built and always held in canonical form:
// rationals are reduced with a positive denominator, polynomials carry no
// trailing zero coefficients, and the zero polynomial is the empty sequence.

#ifndef BWFAM_EXACTMATH_HPP
#define BWFAM_EXACTMATH_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bwfam {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);  // decimal, optional sign
std::string to_string(const Integer& n);
Integer gcd(const Integer& a, const Integer& b);  // gcd(0, n) = |n|
Integer lcm(const Integer& a, const Integer& b);
bool is_perfect_square(const Integer& n);
Integer integer_sqrt(const Integer& n);  // floor, n >= 0
Integer pow(const Integer& base, unsigned long exponent);

class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& numerator, const Integer& denominator);

    // "p" or "p/q"; throws Error(kParse).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }
    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws Error(kDivisionByZero)

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;

   private:
    mpq_class value_;
};

// Dense polynomial in one variable with rational coefficients.
class QPoly {
   public:
    QPoly() = default;  // zero
    explicit QPoly(std::vector<Rational> coefficients);  // index i is the x^i coefficient
    QPoly(std::initializer_list<Rational> coefficients);

    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, std::size_t exponent);
    static QPoly x() { return monomial(Rational(1), 1); }
    static QPoly from_integers(std::span<const Integer> coefficients);

    // Shared text format, e.g. "36*x^4+36*x^3+18*x^2+6*x+1" or "1/4*x^2-1/2".
    // Whitespace is ignored. Throws Error(kParse).
    static QPoly parse(std::string_view text, char variable = 'x');
    std::string to_string(char variable = 'x') const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    // Absent for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    // Degree of a nonzero polynomial; throws Error(kInvalidArgument) on zero.
    std::size_t deg() const;

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;  // throws on zero

    Rational eval(const Rational& at) const;
    QPoly compose(const QPoly& inner) const;  // this(inner(x))
    QPoly derivative() const;
    QPoly monic() const;  // throws on zero
    // Least common multiple of the coefficient denominators (1 for zero).
    Integer denominator_lcm() const;
    // Integer coefficients of c*f with c > 0 chosen so the content is 1.
    std::vector<Integer> primitive_integer_coefficients() const;
    QPoly primitive_part() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    QPoly& operator*=(const Rational& rhs);
    QPoly& operator/=(const Rational& rhs);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend QPoly operator*(QPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend QPoly operator*(const Rational& lhs, QPoly rhs) { return rhs *= lhs; }
    friend QPoly operator/(QPoly lhs, const Rational& rhs) { return lhs /= rhs; }
    friend bool operator==(const QPoly& a, const QPoly& b) noexcept { return a.coeffs_ == b.coeffs_; }

   private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    QPoly quotient;
    QPoly remainder;
};

struct ExtendedGcd {
    QPoly g;  // monic gcd
    QPoly u;
    QPoly v;  // u*a + v*b = g
};

// Throws Error(kDivisionByZero) when b is zero.
DivMod divmod(const QPoly& a, const QPoly& b);
bool divides(const QPoly& divisor, const QPoly& dividend);
// Monic gcd; throws Error(kInvalidArgument) when both inputs are zero.
QPoly gcd(const QPoly& a, const QPoly& b);
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);
// Square root with positive leading coefficient, or nullopt if a is not a
// perfect square in Q[x]. sqrt(0) = 0.
std::optional<QPoly> exact_sqrt(const QPoly& a);
QPoly pow(const QPoly& base, unsigned exponent);

// Rational square root of a perfect-square rational, else nullopt.
std::optional<Rational> exact_sqrt(const Rational& a);

}  // namespace bwfam

#endif  // BWFAM_EXACTMATH_HPP
