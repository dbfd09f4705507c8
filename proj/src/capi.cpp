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

#include "bwfam/bwfam.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bwfam/cyclo_ring.hpp"
#include "bwfam/error.hpp"
#include "bwfam/family.hpp"
#include "bwfam/instantiate.hpp"
#include "bwfam/json_io.hpp"
#include "bwfam/registry.hpp"
#include "bwfam/reproduce.hpp"

struct bwf_family {
    bwfam::FamilyCandidate value;
};

struct bwf_diagnosis {
    bwfam::FamilyDiagnosis value;
};

struct bwf_scan {
    bwfam::ScanReport value;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_witness;

bwf_status status_of(bwfam::ErrorCode code) {
    using bwfam::ErrorCode;
    switch (code) {
        case ErrorCode::kInvalidArgument: return BWF_ERR_INVALID_ARGUMENT;
        case ErrorCode::kParse: return BWF_ERR_PARSE;
        case ErrorCode::kDivisionByZero: return BWF_ERR_DIVISION_BY_ZERO;
        case ErrorCode::kReducible: return BWF_ERR_REDUCIBLE;
        case ErrorCode::kInconclusive: return BWF_ERR_INCONCLUSIVE;
        case ErrorCode::kNotPrimitiveRoot: return BWF_ERR_NOT_PRIMITIVE_ROOT;
        case ErrorCode::kNoSqrtRule: return BWF_ERR_NO_SQRT_RULE;
        case ErrorCode::kBadSqrt: return BWF_ERR_BAD_SQRT;
        case ErrorCode::kRingMismatch: return BWF_ERR_RING_MISMATCH;
        case ErrorCode::kInconsistent: return BWF_ERR_INCONSISTENT;
        case ErrorCode::kNotIntegral: return BWF_ERR_NOT_INTEGRAL;
        case ErrorCode::kUnknownName: return BWF_ERR_UNKNOWN_NAME;
    }
    return BWF_ERR_INTERNAL;
}

bwf_status fail(bwf_status status, std::string message, std::string witness = {}) {
    last_error = std::move(message);
    last_witness = std::move(witness);
    return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
bwf_status guarded(Body&& body) {
    try {
        last_error.clear();
        last_witness.clear();
        return body();
    } catch (const bwfam::Error& e) {
        return fail(status_of(e.code()), e.what(), e.witness());
    } catch (const std::bad_alloc&) {
        return fail(BWF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BWF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BWF_ERR_INTERNAL, "unknown failure");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bwf_status emit(const std::string& s, char** out) {
    *out = copy_string(s);
    return BWF_OK;
}

bool missing(const void* p) { return p == nullptr; }

bwf_status null_argument() { return fail(BWF_ERR_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* bwf_version(void) { return "1.0.0"; }

const char* bwf_status_name(bwf_status status) {
    switch (status) {
        case BWF_OK: return "ok";
        case BWF_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case BWF_ERR_PARSE: return "parse";
        case BWF_ERR_DIVISION_BY_ZERO: return "division_by_zero";
        case BWF_ERR_REDUCIBLE: return "reducible";
        case BWF_ERR_INCONCLUSIVE: return "inconclusive";
        case BWF_ERR_NOT_PRIMITIVE_ROOT: return "not_primitive_root";
        case BWF_ERR_NO_SQRT_RULE: return "no_sqrt_rule";
        case BWF_ERR_BAD_SQRT: return "bad_sqrt";
        case BWF_ERR_RING_MISMATCH: return "ring_mismatch";
        case BWF_ERR_INCONSISTENT: return "inconsistent";
        case BWF_ERR_NOT_INTEGRAL: return "not_integral";
        case BWF_ERR_UNKNOWN_NAME: return "unknown_name";
        case BWF_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* bwf_last_error(void) { return last_error.c_str(); }

const char* bwf_last_witness(void) { return last_witness.c_str(); }

void bwf_string_free(char* s) { std::free(s); }

bwf_status bwf_cyclotomic(unsigned k, char** out) {
    if (missing(out)) return null_argument();
    return guarded([&] {
        if (k == 0) return fail(BWF_ERR_INVALID_ARGUMENT, "k must be at least 1");
        return emit(bwfam::cyclotomic(k).to_string(), out);
    });
}

bwf_status bwf_poly_normalize(const char* text, char** out) {
    if (missing(text) || missing(out)) return null_argument();
    return guarded([&] { return emit(bwfam::QPoly::parse(text).to_string(), out); });
}

bwf_status bwf_family_construct(unsigned k, long D, const char* r, const char* zeta, const char* sqrt_or_null,
                                bwf_family** out) {
    if (missing(r) || missing(zeta) || missing(out)) return null_argument();
    return guarded([&] {
        if (k == 0) return fail(BWF_ERR_INVALID_ARGUMENT, "k must be at least 1");
        const bwfam::QPoly r_poly = bwfam::QPoly::parse(r);
        const bwfam::QPoly z_poly = bwfam::QPoly::parse(zeta);
        std::optional<bwfam::QPoly> s_poly;
        if (sqrt_or_null != nullptr) s_poly = bwfam::QPoly::parse(sqrt_or_null);

        const auto ring = bwfam::ResidueRing::create(r_poly);
        const auto z = bwfam::ZetaImage::create(k, ring.element(z_poly));
        std::optional<bwfam::ResidueElement> s;
        if (s_poly) s = ring.element(*s_poly);
        *out = new bwf_family{bwfam::bw_construct(k, D, z, s)};
        return BWF_OK;
    });
}

bwf_status bwf_family_load_json(const char* text, int diagnostic, bwf_family** out) {
    if (missing(text) || missing(out)) return null_argument();
    return guarded([&] {
        *out = new bwf_family{bwfam::family_from_json_text(text, diagnostic != 0)};
        return BWF_OK;
    });
}

bwf_status bwf_family_load_registry(const char* name, bwf_family** out) {
    if (missing(name) || missing(out)) return null_argument();
    return guarded([&] {
        *out = new bwf_family{bwfam::registry_family(name)};
        return BWF_OK;
    });
}

bwf_status bwf_family_to_json(const bwf_family* family, char** out) {
    if (missing(family) || missing(out)) return null_argument();
    return guarded([&] { return emit(bwfam::family_to_json(family->value).dump(), out); });
}

bwf_status bwf_family_field(const bwf_family* family, const char* field, char** out) {
    if (missing(family) || missing(field) || missing(out)) return null_argument();
    return guarded([&] {
        const std::string f = field;
        const bwfam::FamilyCandidate& c = family->value;
        if (f == "t") return emit(c.t.to_string(), out);
        if (f == "r") return emit(c.r.to_string(), out);
        if (f == "q") return emit(c.q.to_string(), out);
        if (f == "y") return emit(c.y.to_string(), out);
        if (f == "h") return emit(c.h.to_string(), out);
        return fail(BWF_ERR_INVALID_ARGUMENT, "unknown family field " + f);
    });
}

void bwf_family_free(bwf_family* family) { delete family; }

bwf_status bwf_validate(const bwf_family* family, bwf_diagnosis** out) {
    if (missing(family) || missing(out)) return null_argument();
    return guarded([&] {
        *out = new bwf_diagnosis{bwfam::validate(family->value)};
        return BWF_OK;
    });
}

int bwf_diagnosis_is_complete(const bwf_diagnosis* diagnosis) {
    return diagnosis != nullptr && diagnosis->value.is_complete_family ? 1 : 0;
}

int bwf_diagnosis_is_ideal(const bwf_diagnosis* diagnosis) {
    return diagnosis != nullptr && diagnosis->value.is_ideal ? 1 : 0;
}

int bwf_diagnosis_condition(const bwf_diagnosis* diagnosis, int index) {
    if (diagnosis == nullptr || index < 0 || index >= 5) return -1;
    switch (diagnosis->value.conditions[static_cast<std::size_t>(index)].status) {
        case bwfam::ConditionStatus::kPass: return BWF_CONDITION_PASS;
        case bwfam::ConditionStatus::kFail: return BWF_CONDITION_FAIL;
        case bwfam::ConditionStatus::kUnknown: return BWF_CONDITION_UNKNOWN;
    }
    return -1;
}

bwf_status bwf_diagnosis_rho(const bwf_diagnosis* diagnosis, char** out) {
    if (missing(diagnosis) || missing(out)) return null_argument();
    return guarded([&] {
        if (!diagnosis->value.rho) return fail(BWF_ERR_INVALID_ARGUMENT, "rho is undefined for this candidate");
        return emit(diagnosis->value.rho->to_string(), out);
    });
}

bwf_status bwf_diagnosis_to_json(const bwf_diagnosis* diagnosis, char** out) {
    if (missing(diagnosis) || missing(out)) return null_argument();
    return guarded([&] { return emit(bwfam::diagnosis_to_json(diagnosis->value).dump(), out); });
}

void bwf_diagnosis_free(bwf_diagnosis* diagnosis) { delete diagnosis; }

bwf_status bwf_scan_range(const bwf_family* family, const char* lo, const char* hi, uint64_t seed, unsigned threads,
                          bwf_scan** out) {
    if (missing(family) || missing(lo) || missing(hi) || missing(out)) return null_argument();
    return guarded([&] {
        const bwfam::ScanOptions options{seed, threads};
        *out = new bwf_scan{
            bwfam::scan_range(family->value, bwfam::parse_integer(lo), bwfam::parse_integer(hi), options)};
        return BWF_OK;
    });
}

bwf_status bwf_scan_bits(const bwf_family* family, unsigned bits, unsigned count, uint64_t seed, unsigned threads,
                         bwf_scan** out) {
    if (missing(family) || missing(out)) return null_argument();
    return guarded([&] {
        const bwfam::ScanOptions options{seed, threads};
        *out = new bwf_scan{bwfam::scan_bits(family->value, bits, count, options)};
        return BWF_OK;
    });
}

size_t bwf_scan_hit_count(const bwf_scan* scan) { return scan == nullptr ? 0 : scan->value.hits.size(); }

bwf_status bwf_scan_to_json(const bwf_scan* scan, char** out) {
    if (missing(scan) || missing(out)) return null_argument();
    return guarded([&] { return emit(bwfam::scan_report_to_json(scan->value).dump(), out); });
}

void bwf_scan_free(bwf_scan* scan) { delete scan; }

bwf_status bwf_reproduce(const char* target, char** json_out, int* passed) {
    if (missing(target) || missing(json_out) || missing(passed)) return null_argument();
    return guarded([&] {
        const std::string t = target;
        if (t == "theorem1") {
            const auto r = bwfam::reproduce_forced_forms();
            *passed = r.certified ? 1 : 0;
            return emit(bwfam::forced_forms_to_json(r).dump(), json_out);
        }
        if (t == "theorem3-scan") {
            const auto r = bwfam::reproduce_catalog_scan();
            *passed = r.no_ideal ? 1 : 0;
            return emit(bwfam::catalog_reproduction_to_json(r).dump(), json_out);
        }
        if (!bwfam::registry_contains(t)) return fail(BWF_ERR_UNKNOWN_NAME, "unknown reproduction target " + t);
        const auto r = bwfam::reproduce_registry(t);
        *passed = r.matches() ? 1 : 0;
        return emit(bwfam::registry_reproduction_to_json(r).dump(), json_out);
    });
}

bwf_status bwf_registry_list(char** json_out) {
    if (missing(json_out)) return null_argument();
    return guarded([&] { return emit(bwfam::Json(bwfam::registry_names()).dump(), json_out); });
}

}  // extern "C"
