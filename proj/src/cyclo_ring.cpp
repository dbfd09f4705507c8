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

#include "bwfam/cyclo_ring.hpp"

#include <map>
#include <vector>

#include "bwfam/error.hpp"
#include "bwfam/irreducibility.hpp"

namespace bwfam {

QPoly cyclotomic(unsigned k) {
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "cyclotomic index must be positive");
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= k; ++d) {
        if (k % d == 0) divisors.push_back(d);
    }
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, ascending over d | k.
    std::map<unsigned, QPoly> phi;
    for (unsigned d : divisors) {
        QPoly num = QPoly::monomial(Rational(1), d) - QPoly::constant(1);
        QPoly den = QPoly::constant(1);
        for (const auto& [e, pe] : phi) {
            if (d % e == 0) den *= pe;
        }
        DivMod qr = divmod(num, den);
        if (!qr.remainder.is_zero()) throw Error(ErrorCode::kInconsistent, "cyclotomic division left a remainder");
        phi.emplace(d, std::move(qr.quotient));
    }
    return phi.at(k);
}

std::uint64_t totient(std::uint64_t k) {
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "totient of zero");
    std::uint64_t result = k;
    std::uint64_t n = k;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---------------------------------------------------------------------------

struct ResidueRing::Data {
    QPoly modulus;
    QPoly monic;
};

ResidueRing ResidueRing::create(const QPoly& modulus) {
    if (modulus.is_constant()) throw Error(ErrorCode::kInvalidArgument, "ring modulus must be nonconstant");
    const IrreducibilityResult check = check_irreducible(modulus);
    switch (check.verdict) {
        case Irreducibility::kIrreducible: break;
        case Irreducibility::kReducible:
            throw Error(ErrorCode::kReducible,
                        "modulus " + modulus.to_string() + " is reducible (factor " + check.factor.to_string() + ")",
                        check.factor.to_string());
        case Irreducibility::kInconclusive:
            throw Error(ErrorCode::kInconclusive,
                        "could not decide irreducibility of " + modulus.to_string() + ": " + check.method);
    }
    return ResidueRing(std::make_shared<const Data>(Data{modulus, modulus.monic()}));
}

const QPoly& ResidueRing::modulus() const noexcept { return data_->modulus; }
const QPoly& ResidueRing::monic_modulus() const noexcept { return data_->monic; }
std::size_t ResidueRing::degree() const noexcept { return data_->monic.coefficients().size() - 1; }

QPoly ResidueRing::reduce(const QPoly& p) const { return divmod(p, data_->monic).remainder; }

ResidueElement ResidueRing::element(const QPoly& representative) const {
    return ResidueElement(*this, reduce(representative));
}
ResidueElement ResidueRing::zero() const { return ResidueElement(*this, QPoly()); }
ResidueElement ResidueRing::one() const { return element(QPoly::constant(1)); }
ResidueElement ResidueRing::generator() const { return element(QPoly::x()); }

bool operator==(const ResidueRing& a, const ResidueRing& b) noexcept {
    return a.data_ == b.data_ || a.data_->monic == b.data_->monic;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_ring(const ResidueElement& a, const ResidueElement& b) {
    if (!(a.ring() == b.ring())) {
        throw Error(ErrorCode::kRingMismatch, "elements of Q[x]/(" + a.ring().modulus().to_string() + ") and Q[x]/(" +
                                                  b.ring().modulus().to_string() + ")");
    }
}

}  // namespace

bool ResidueElement::is_one() const { return rep_ == QPoly::constant(1); }

ResidueElement ResidueElement::operator-() const { return ResidueElement(ring_, -rep_); }

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
    require_same_ring(a, b);
    return ResidueElement(a.ring_, a.rep_ + b.rep_);
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
    require_same_ring(a, b);
    return ResidueElement(a.ring_, a.rep_ - b.rep_);
}

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
    require_same_ring(a, b);
    return ResidueElement(a.ring_, a.ring_.reduce(a.rep_ * b.rep_));
}

ResidueElement operator*(const ResidueElement& a, const Rational& c) { return ResidueElement(a.ring_, a.rep_ * c); }

bool operator==(const ResidueElement& a, const ResidueElement& b) {
    require_same_ring(a, b);
    return a.rep_ == b.rep_;
}

ResidueElement ResidueElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in Q[x]/(" + ring_.modulus().to_string() + ")");
    const ExtendedGcd e = extended_gcd(rep_, ring_.monic_modulus());
    if (!(e.g == QPoly::constant(1))) {
        throw Error(ErrorCode::kInconsistent, "element shares a factor with an irreducible modulus");
    }
    return ResidueElement(ring_, ring_.reduce(e.u));
}

ResidueElement ResidueElement::pow(std::uint64_t exponent) const {
    ResidueElement result = ring_.one();
    ResidueElement base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

ResidueElement ResidueElement::substitute_into(const QPoly& p) const {
    ResidueElement acc = ring_.zero();
    const auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * *this + ring_.element(QPoly::constant(c[i]));
    }
    return acc;
}

// ---------------------------------------------------------------------------

ZetaImage ZetaImage::create(unsigned k, const ResidueElement& z) {
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "root of unity order must be positive");
    if (!z.substitute_into(cyclotomic(k)).is_zero()) {
        throw Error(ErrorCode::kNotPrimitiveRoot,
                    z.representative().to_string() + " is not a primitive " + std::to_string(k) +
                        "-th root of unity modulo " + z.ring().modulus().to_string(),
                    z.substitute_into(cyclotomic(k)).representative().to_string());
    }
    return ZetaImage(k, z);
}

}  // namespace bwfam
