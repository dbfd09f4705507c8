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

// Concrete curve parameters from a family: evaluate at integer x0 and certify
// the CM-method hypotheses on the resulting integers.

#ifndef BWFAM_INSTANTIATE_HPP
#define BWFAM_INSTANTIATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bwfam/exactmath.hpp"
#include "bwfam/family.hpp"
#include "bwfam/integrality.hpp"

namespace bwfam {

enum class FailureReason {
    kRNonIntegral,
    kQNonIntegral,
    kTNonIntegral,
    kYNonIntegral,
    kRNotPositive,
    kRComposite,
    kQNotPositive,
    kQComposite,
    kQPrimePower,
    kGcdTQ,
    kOrderNotDivisible,  // r0 does not divide q0 + 1 - t0
    kCmEquation,         // D y0^2 != 4 q0 - t0^2
    kEmbeddingDegree,
};

const char* to_string(FailureReason reason) noexcept;

struct CurveParams {
    Integer x0, t0, r0, q0, y0, h0;
    unsigned k = 0;
    long D = 0;
    double rho_numeric = 0;  // log q0 / log r0
    bool k_bound_ok = false;      // k < log2(r0) / 8
    bool r_at_least_sqrt_q = false;
    bool supersingular_boundary = false;  // t0 = 2
    std::vector<unsigned> embedding_degree_set;  // {i in [1, k] : r0 | q0^i - 1}
    PrimalityRegime regime = PrimalityRegime::kDeterministic;
};

struct Instantiation {
    std::optional<CurveParams> params;
    std::optional<FailureReason> failure;
    bool ok() const noexcept { return params.has_value(); }
};

// Each check runs on the integers themselves, never on polynomial identities.
Instantiation instantiate_at(const FamilyCandidate& c, const Integer& x0, std::uint64_t seed = 0);

struct ScanOptions {
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanReport {
    enum class Mode { kRange, kBits };
    Mode mode = Mode::kRange;
    std::string family_name;
    Integer lo, hi;             // range mode, or the |x0| window in bits mode
    unsigned bits = 0, count = 0;
    std::uint64_t seed = 0;
    std::uint64_t scanned = 0;  // integer points considered
    // r(x0) or q(x0) outside their integrality profile; never evaluated.
    std::map<FailureReason, std::uint64_t> skipped;
    std::map<FailureReason, std::uint64_t> near_misses;
    std::vector<CurveParams> hits;  // ascending x0 in range mode, scan order in bits mode
    std::uint64_t supersingular_hits = 0;
    bool exhausted = false;  // bits mode: window ran out before count hits

    std::uint64_t accounted() const;  // hits + skipped + near misses
};

// Every x0 in [lo, hi]. Throws Error(kInvalidArgument) if lo > hi.
ScanReport scan_range(const FamilyCandidate& c, const Integer& lo, const Integer& hi, const ScanOptions& options = {});

// x0 ordered outward from the magnitude where r(x0) ~ 2^bits, keeping only
// points with r(x0) in [2^(bits-1), 2^(bits+1)], until count hits or the
// window is exhausted. Throws Error(kInvalidArgument) unless bits >= 8 and
// count >= 1.
ScanReport scan_bits(const FamilyCandidate& c, unsigned bits, unsigned count, const ScanOptions& options = {});

}  // namespace bwfam

#endif  // BWFAM_INSTANTIATE_HPP
