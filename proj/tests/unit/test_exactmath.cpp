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

#include <random>

#include "doctest.h"

#include "bwfam/error.hpp"
#include "bwfam/exactmath.hpp"
#include "support.hpp"

using bwfam::ErrorCode;
using bwfam::Integer;
using bwfam::QPoly;
using bwfam::Rational;
using testing::P;
using testing::Q;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const bwfam::Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::kInconsistent;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
    const Rational a(Integer(6), Integer(-8));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 4);
    CHECK(Rational(0).denominator() == 1);
    CHECK((Q(1, 2) + Q(1, 2)) == Rational(1));
    CHECK((Q(1, 3) - Q(1, 3)).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Q(-5, 2));
    CHECK(Q(-5, 2).to_string() == "-5/2");
    CHECK(Q(3, 4) < Q(4, 5));
    CHECK(code_of([] { (void)(Q(1) / Rational(0)); }) == ErrorCode::kDivisionByZero);
    CHECK(code_of([] { (void)Rational(Integer(1), Integer(0)); }) == ErrorCode::kDivisionByZero);
}

TEST_CASE("the zero polynomial has no degree") {
    const QPoly zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK_THROWS_AS((void)zero.deg(), bwfam::Error);
    CHECK((P("x^2+1") - P("x^2+1")).coefficients().empty());
    CHECK(P("0").is_zero());
    CHECK(P("5").degree() == std::optional<std::size_t>(0));
}

TEST_CASE("text format") {
    CHECK(P("36*x^4+36*x^3+18*x^2+6*x+1").to_string() == "36*x^4+36*x^3+18*x^2+6*x+1");
    CHECK(P("1/4*x^2-1/2").to_string() == "1/4*x^2-1/2");
    CHECK(P(" 2 x ^ 3 -  x + 3/6 ").to_string() == "2*x^3-x+1/2");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("x+x").to_string() == "2*x");
    CHECK(P("x^2+x^2+1").to_string() == "2*x^2+1");
    CHECK(QPoly().to_string() == "0");
    CHECK(code_of([] { (void)P("x^"); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)P("y+1"); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)P(""); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)P("x++1"); }) == ErrorCode::kParse);
    CHECK(code_of([] { (void)P("1/0*x"); }) == ErrorCode::kParse);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const QPoly f = testing::to_poly(oracle::random_coeffs(rng, static_cast<std::size_t>(i % 8), 50, 12));
        CHECK(P(f.to_string().c_str()) == f);
    }
}

TEST_CASE("addition") {
    CHECK(P("x^2+1") + P("-x^2") == P("1"));
    CHECK(QPoly() + P("x+1") == P("x+1"));
    CHECK(P("1/2*x") + P("1/2*x") == P("x"));
}

TEST_CASE("multiplication agrees with schoolbook products") {
    CHECK(P("x+1") * P("x-1") == P("x^2-1"));
    CHECK(P("6*x^2+4*x+1") * P("6*x^2+4*x+1") == P("36*x^4+48*x^3+28*x^2+8*x+1"));
    CHECK((P("3*x^5-x") * QPoly()).is_zero());

    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto a = oracle::random_coeffs(rng, rng() % 7, 30, 9);
        const auto b = oracle::random_coeffs(rng, rng() % 7, 30, 9);
        const QPoly product = testing::to_poly(a) * testing::to_poly(b);
        CHECK(testing::to_coeffs(product) == oracle::multiply(a, b));
        CHECK(product.deg() == (a.size() - 1) + (b.size() - 1));
    }
}

TEST_CASE("division with remainder") {
    const auto [q, r] = bwfam::divmod(P("x^4+1"), P("x^2+1"));
    CHECK(q == P("x^2-1"));
    CHECK(r == P("2"));

    const QPoly phi12_t = P("x^4-x^2+1").compose(P("6*x^2"));
    CHECK(bwfam::divmod(phi12_t, P("36*x^4+36*x^3+18*x^2+6*x+1")).remainder.is_zero());

    const QPoly f = P("3/7*x^5-x+2");
    CHECK(bwfam::divmod(f, f).quotient == P("1"));
    CHECK(bwfam::divmod(f, f).remainder.is_zero());
    CHECK(code_of([&] { (void)bwfam::divmod(f, QPoly()); }) == ErrorCode::kDivisionByZero);
}

TEST_CASE("gcd and extended gcd") {
    CHECK(bwfam::gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(bwfam::gcd(P("x^2+1"), P("x^4+1")) == P("1"));
    CHECK(bwfam::gcd(P("3*x^2+6"), QPoly()) == P("x^2+2"));

    auto e = bwfam::extended_gcd(P("x^2+1"), P("x"));
    CHECK(e.g == P("1"));
    CHECK(e.u == P("1"));
    CHECK(e.v == P("-x"));

    e = bwfam::extended_gcd(P("x-1"), P("x+1"));
    CHECK(e.g == P("1"));
    CHECK(e.u == P("-1/2"));
    CHECK(e.v == P("1/2"));

    e = bwfam::extended_gcd(P("x^3+x+5"), P("1"));
    CHECK(e.g == P("1"));
    CHECK(e.u.is_zero());
    CHECK(e.v == P("1"));
}

TEST_CASE("division, gcd and Bezout laws on 500 random pairs") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const auto common = oracle::random_coeffs(rng, rng() % 3, 9, 5);
        const QPoly a = testing::to_poly(oracle::multiply(common, oracle::random_coeffs(rng, rng() % 6, 20, 10)));
        const QPoly b = testing::to_poly(oracle::multiply(common, oracle::random_coeffs(rng, rng() % 5, 20, 10)));

        const auto [q, r] = bwfam::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.deg() < b.deg()));

        const QPoly g = bwfam::gcd(a, b);
        CHECK(g.leading() == Rational(1));
        CHECK(bwfam::divides(g, a));
        CHECK(bwfam::divides(g, b));
        CHECK(g.deg() >= common.size() - 1);

        const auto e = bwfam::extended_gcd(a, b);
        CHECK(e.g == g);
        CHECK(e.u * a + e.v * b == e.g);
    }
}

TEST_CASE("exact square roots") {
    CHECK(bwfam::exact_sqrt(P("36*x^4+48*x^3+28*x^2+8*x+1")) == P("6*x^2+4*x+1"));
    CHECK(bwfam::exact_sqrt(P("x^2+2*x+1")) == P("x+1"));
    CHECK_FALSE(bwfam::exact_sqrt(P("x^2+1")).has_value());
    CHECK_FALSE(bwfam::exact_sqrt(P("x^3")).has_value());
    CHECK_FALSE(bwfam::exact_sqrt(P("-x^2")).has_value());
    CHECK(bwfam::exact_sqrt(P("1/4*x^2")) == P("1/2*x"));
    CHECK(bwfam::exact_sqrt(QPoly()) == QPoly());
    CHECK_FALSE(bwfam::exact_sqrt(P("2*x^2")).has_value());
}

TEST_CASE("square root round-trip on 500 random squares") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 500; ++i) {
        const QPoly f = testing::to_poly(oracle::random_coeffs(rng, rng() % 7, 40, 10));
        const auto root = bwfam::exact_sqrt(f * f);
        REQUIRE(root.has_value());
        CHECK((*root == f || *root == -f));
        CHECK(root->leading().sign() > 0);
    }
}

TEST_CASE("evaluation and composition") {
    CHECK(P("36*x^4+36*x^3+18*x^2+6*x+1").eval(Rational(1)) == Rational(97));
    CHECK(P("36*x^4+36*x^3+24*x^2+6*x+1").eval(Rational(1)) == Rational(103));
    CHECK(P("5*x^3-x+7/3").eval(Rational(0)) == Q(7, 3));
    CHECK(P("x^4-x^2+1").compose(P("6*x^2")) == P("1296*x^8-36*x^4+1"));
    CHECK(P("2*x^3+x").compose(P("x")) == P("2*x^3+x"));
    CHECK(P("x^2").compose(P("x+1")) == P("x^2+2*x+1"));

    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        const auto f = oracle::random_coeffs(rng, rng() % 5, 10, 6);
        const auto g = oracle::random_coeffs(rng, rng() % 4, 10, 6);
        const mpq_class c = oracle::random_rational(rng, 9, 4);
        const Rational at(c.get_num(), c.get_den());
        const QPoly fg = testing::to_poly(f).compose(testing::to_poly(g));
        CHECK(fg.eval(at).raw() == oracle::evaluate(f, oracle::evaluate(g, c)));
    }
}

TEST_CASE("integer helpers") {
    CHECK(bwfam::gcd(Integer(0), Integer(-12)) == 12);
    CHECK(bwfam::lcm(Integer(4), Integer(6)) == 12);
    CHECK(bwfam::is_perfect_square(Integer(144)));
    CHECK_FALSE(bwfam::is_perfect_square(Integer(-4)));
    CHECK(bwfam::integer_sqrt(Integer(99)) == 9);
    CHECK(bwfam::parse_integer("-123456789012345678901234567890") ==
          Integer("-123456789012345678901234567890"));
    CHECK(code_of([] { (void)bwfam::parse_integer("12a"); }) == ErrorCode::kParse);
}
