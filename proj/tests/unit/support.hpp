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

// Conversions between oracle coefficient vectors and library polynomials.

#ifndef BWFAM_TESTS_SUPPORT_HPP
#define BWFAM_TESTS_SUPPORT_HPP

#include "bwfam/exactmath.hpp"
#include "oracles.hpp"

namespace testing {

inline bwfam::QPoly to_poly(const oracle::Coeffs& c) {
    std::vector<bwfam::Rational> v;
    for (const auto& q : c) v.emplace_back(q.get_num(), q.get_den());
    return bwfam::QPoly(std::move(v));
}

inline oracle::Coeffs to_coeffs(const bwfam::QPoly& p) {
    oracle::Coeffs out;
    for (const auto& c : p.coefficients()) out.push_back(c.raw());
    return out;
}

inline bwfam::QPoly P(const char* text) { return bwfam::QPoly::parse(text); }

inline bwfam::Rational Q(long n, long d = 1) { return bwfam::Rational(bwfam::Integer(n), bwfam::Integer(d)); }

}  // namespace testing

#endif  // BWFAM_TESTS_SUPPORT_HPP
