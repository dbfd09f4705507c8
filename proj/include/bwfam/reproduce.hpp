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

// Reproduction targets: rebuilding registry families from their field data,
// the forced-form obstruction for k = 3, 4, 6, a catalog scan for k = 8, 12,
// and an exhaustive small search for k = 3, 4, 6.

#ifndef BWFAM_REPRODUCE_HPP
#define BWFAM_REPRODUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwfam/family.hpp"
#include "bwfam/json_io.hpp"

namespace bwfam {

struct FieldDiff {
    std::string field;
    std::string expected;  // registry text, normalized
    std::string actual;    // reconstructed
};

struct RegistryReproduction {
    std::string name;
    FamilyCandidate expected;
    FamilyCandidate rebuilt;
    std::vector<FieldDiff> mismatches;  // empty when t, r, q, y, h all agree
    FamilyDiagnosis diagnosis;          // of the rebuilt family
    bool matches() const noexcept { return mismatches.empty(); }
};

// Throws Error(kUnknownName), or Error(kInvalidArgument) if the document has
// no zeta image.
RegistryReproduction reproduce_registry(std::string_view name);

struct ForcedFormsReproduction {
    std::vector<ObstructionReport> reports;  // k = 3, 4, 6
    bool certified = false;
};

ForcedFormsReproduction reproduce_forced_forms();

struct CatalogEntry {
    std::string label;
    unsigned k;
    long D;
    QPoly r;
    QPoly zeta;
};

// Fields Q(zeta_8) and Q(zeta_12) presented by Phi_k and by Phi_k(u(x)) for
// quadratic u, each D with sqrt(-D) in Q(zeta_k), several zeta images.
std::vector<CatalogEntry> catalog_candidates();

struct CatalogOutcome {
    CatalogEntry entry;
    std::optional<FamilyCandidate> family;
    std::optional<FamilyDiagnosis> diagnosis;
    std::string error;  // construction failure, if any
    bool excluded = false;  // deg r = 2 deg t
    bool ideal = false;
};

struct CatalogReproduction {
    std::vector<CatalogOutcome> outcomes;
    std::size_t constructed = 0;
    bool no_ideal = false;
};

CatalogReproduction reproduce_catalog_scan();

struct SearchHit {
    unsigned k;
    long D;
    QPoly t;
    QPoly r;
    Rational rho;
    bool complete;
    bool ideal;
};

struct SmallSearchReport {
    int coefficient_bound = 0;
    std::uint64_t substitutions = 0;   // (k, t) pairs examined
    std::uint64_t irreducible = 0;     // with Phi_k(t-1) irreducible
    std::uint64_t inconclusive = 0;
    std::uint64_t constructed = 0;     // (k, t, D) families built
    std::uint64_t complete = 0;
    std::vector<SearchHit> ideal;      // expected empty
};

// Every t in Z[x] with deg t in {1, 2} and coefficients in [-bound, bound],
// k in {3, 4, 6}, D in {1, 2, 3}: r is Phi_k(t-1) made primitive when it is
// irreducible (the only candidate of degree >= 2 deg t), zeta = t - 1.
SmallSearchReport exhaustive_small_search(int coefficient_bound = 3);

Json registry_reproduction_to_json(const RegistryReproduction& r);
Json forced_forms_to_json(const ForcedFormsReproduction& r);
Json catalog_reproduction_to_json(const CatalogReproduction& r);

}  // namespace bwfam

#endif  // BWFAM_REPRODUCE_HPP
