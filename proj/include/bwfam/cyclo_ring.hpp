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

// Cyclotomic polynomials and arithmetic in the number field Q[x]/(r(x)).

#ifndef BWFAM_CYCLO_RING_HPP
#define BWFAM_CYCLO_RING_HPP

#include <cstdint>
#include <memory>

#include "bwfam/exactmath.hpp"

namespace bwfam {

QPoly cyclotomic(unsigned k);
std::uint64_t totient(std::uint64_t k);

class ResidueElement;

// Q[x]/(r(x)) for an irreducible r, so the quotient is a field. Copies share
// the same immutable modulus data.
class ResidueRing {
   public:
    // Verifies irreducibility. Throws Error(kReducible) with a factor as the
    // witness, Error(kInconclusive) when the test cannot decide, and
    // Error(kInvalidArgument) for constant moduli.
    static ResidueRing create(const QPoly& modulus);

    const QPoly& modulus() const noexcept;        // as supplied
    const QPoly& monic_modulus() const noexcept;  // used for reduction
    std::size_t degree() const noexcept;

    ResidueElement element(const QPoly& representative) const;
    ResidueElement zero() const;
    ResidueElement one() const;
    ResidueElement generator() const;  // the class of x

    QPoly reduce(const QPoly& p) const;

    // Ring identity is modulus equality.
    friend bool operator==(const ResidueRing& a, const ResidueRing& b) noexcept;

   private:
    struct Data;
    explicit ResidueRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

class ResidueElement {
   public:
    const QPoly& representative() const noexcept { return rep_; }
    const ResidueRing& ring() const noexcept { return ring_; }

    bool is_zero() const noexcept { return rep_.is_zero(); }
    bool is_one() const;

    ResidueElement operator-() const;
    // All binary operations throw Error(kRingMismatch) across rings.
    friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator*(const ResidueElement& a, const Rational& c);

    // Throws Error(kDivisionByZero) for the zero element.
    ResidueElement inverse() const;
    ResidueElement pow(std::uint64_t exponent) const;
    // p(this), evaluated inside the ring.
    ResidueElement substitute_into(const QPoly& p) const;

    friend bool operator==(const ResidueElement& a, const ResidueElement& b);

   private:
    friend class ResidueRing;
    ResidueElement(ResidueRing ring, QPoly reduced) : ring_(std::move(ring)), rep_(std::move(reduced)) {}
    ResidueRing ring_;
    QPoly rep_;
};

// A ring element known to be a primitive k-th root of unity.
class ZetaImage {
   public:
    // Throws Error(kNotPrimitiveRoot) unless Phi_k(z) = 0 in the ring.
    static ZetaImage create(unsigned k, const ResidueElement& z);

    unsigned k() const noexcept { return k_; }
    const ResidueElement& z() const noexcept { return z_; }
    const ResidueRing& ring() const noexcept { return z_.ring(); }

   private:
    ZetaImage(unsigned k, ResidueElement z) : k_(k), z_(std::move(z)) {}
    unsigned k_;
    ResidueElement z_;
};

}  // namespace bwfam

#endif  // BWFAM_CYCLO_RING_HPP
