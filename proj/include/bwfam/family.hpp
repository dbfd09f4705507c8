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

// Brezing-Weng families: construction from a number field presentation,
// validation of the complete-family conditions, and rho-values.

#ifndef BWFAM_FAMILY_HPP
#define BWFAM_FAMILY_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bwfam/cyclo_ring.hpp"
#include "bwfam/exactmath.hpp"

namespace bwfam {

bool is_squarefree(long n);

// sqrt(-D) written as a polynomial in a primitive k-th root of unity.
struct SqrtMinusDRule {
    unsigned k;
    long D;
    QPoly expression;  // in the root of unity
};

std::span<const SqrtMinusDRule> sqrt_minus_d_table();
const SqrtMinusDRule* find_sqrt_rule(unsigned k, long D);

// Table value at z, sign-normalized to a positive leading coefficient.
// Throws Error(kNoSqrtRule) when (k, D) is not tabulated.
ResidueElement sqrt_minus_d(unsigned k, long D, const ZetaImage& z);

// s^2 = -D in the ring of s.
bool verify_sqrt(const ResidueElement& s, long D);

// Looks for sqrt(-D) in a ring without a caller-supplied value: the table
// rule for (z.k(), D) first, then every table rule evaluated at each
// primitive root of unity of tabulated order found among z and the powers
// x^j of the generator. Every result is verified exactly.
std::optional<ResidueElement> find_sqrt_minus_d(long D, const ZetaImage& z);

struct FamilyCandidate {
    unsigned k = 0;
    long D = 0;
    QPoly t, r, q, y, h;
    std::string name;
    std::string source;
    std::optional<QPoly> zeta;  // image of the root of unity used to build it

    // Builds a candidate from raw parts, re-checking h*r = q+1-t,
    // r | Phi_k(t-1) and D*y^2 = 4q - t^2. Throws Error(kInconsistent) on the
    // first failing identity unless diagnostic is set, in which case the
    // tuple is kept as given for the validator to report on.
    static FamilyCandidate from_parts(unsigned k, long D, QPoly t, QPoly r, QPoly q, QPoly y, QPoly h,
                                      bool diagnostic = false);
};

// Runs the construction for a primitive k-th root z in Q[x]/(r(x)):
// t = z + 1, y = (z - 1) s / (-D) reduced mod r and sign-normalized,
// q = (t^2 + D y^2) / 4 unreduced, h = (q + 1 - t) / r exactly.
// s defaults to find_sqrt_minus_d. Throws Error(kNoSqrtRule) if no square
// root is available, Error(kBadSqrt) if the supplied one is wrong, and
// Error(kInconsistent) if h does not divide out exactly.
FamilyCandidate bw_construct(unsigned k, long D, const ZetaImage& z,
                             const std::optional<ResidueElement>& s = std::nullopt);

enum class ConditionStatus { kPass, kFail, kUnknown };
const char* to_string(ConditionStatus status) noexcept;

struct ConditionResult {
    ConditionStatus status = ConditionStatus::kUnknown;
    std::string summary;
    std::string witness;  // failing residue data, factor, or nonzero remainder
};

struct DegreeReport {
    std::optional<std::size_t> t, r, q, y, h;
    std::uint64_t phi_k = 0;
    // deg r / phi(k) when phi(k) divides deg r (the n with deg r = phi(k) n).
    std::optional<std::size_t> n;
    bool deg_r_equals_2deg_t = false;
};

struct FamilyDiagnosis {
    // Index 0..4 holds conditions (i)..(v): r represents primes, q represents
    // primes, r | q+1-t, r | Phi_k(t-1), D y^2 = 4q - t^2.
    std::array<ConditionResult, 5> conditions;
    std::optional<Rational> rho;
    DegreeReport degrees;
    bool is_complete_family = false;
    bool is_ideal = false;
    std::vector<std::string> notes;
};

// Checks every condition independently; never trusts the candidate's own
// invariants.
FamilyDiagnosis validate(const FamilyCandidate& c);

// deg q / deg r. Throws Error(kInvalidArgument) for constant r or zero q,
// and Error(kInconsistent) if 2 max(deg y, deg t) / deg r disagrees on a
// candidate satisfying 4q = t^2 + D y^2.
Rational rho(const FamilyCandidate& c);

// Closed forms of q in X = t(x) - 1 that a rho = 1 family is forced into for
// k = 3, 4, 6: the branch where sqrt(-D) lies in Q(zeta_k) (a constant times
// (X+1)^2) and the branch where it does not ((X^2 + cX + 1)/4).
struct ForcedForms {
    unsigned k;
    long D;                // the discriminant of the first branch
    QPoly supersingular;   // in X
    QPoly noncyclotomic;   // in X
    QPoly dy2;             // D y^2 on the second branch: 3X, 2X, X
};

ForcedForms forced_q_forms(unsigned k);

struct ResidueRow {
    Integer residue;        // X mod 4
    Integer numerator_mod;  // 4 q(X) mod 4
};

struct ObstructionReport {
    ForcedForms forms;
    // Second branch: q never integral.
    Integer profile_modulus;
    std::vector<ResidueRow> residue_table;
    bool never_integral = false;
    // First branch: q = c * g^2 with deg g >= 1, hence reducible.
    Rational square_constant;
    QPoly square_root;
    bool constant_times_square = false;
    bool reducible = false;
    bool certified = false;  // both branches obstructed
};

ObstructionReport forced_form_obstruction(unsigned k);

}  // namespace bwfam

#endif  // BWFAM_FAMILY_HPP
