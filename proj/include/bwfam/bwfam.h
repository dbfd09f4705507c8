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

/* C interface to the bwfam library. Objects are opaque handles released by
 * their matching *_free function. Strings returned through char** belong to
 * the caller and are released with bwf_string_free. Every function that
 * returns bwf_status records a message for bwf_last_error on failure. */

#ifndef BWFAM_BWFAM_H
#define BWFAM_BWFAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BWFAM_BUILDING_LIBRARY)
#    define BWF_API __declspec(dllexport)
#  else
#    define BWF_API __declspec(dllimport)
#  endif
#else
#  define BWF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bwf_status {
    BWF_OK = 0,
    BWF_ERR_INVALID_ARGUMENT = 1,
    BWF_ERR_PARSE = 2,
    BWF_ERR_DIVISION_BY_ZERO = 3,
    BWF_ERR_REDUCIBLE = 4,
    BWF_ERR_INCONCLUSIVE = 5,
    BWF_ERR_NOT_PRIMITIVE_ROOT = 6,
    BWF_ERR_NO_SQRT_RULE = 7,
    BWF_ERR_BAD_SQRT = 8,
    BWF_ERR_RING_MISMATCH = 9,
    BWF_ERR_INCONSISTENT = 10,
    BWF_ERR_NOT_INTEGRAL = 11,
    BWF_ERR_UNKNOWN_NAME = 12,
    BWF_ERR_INTERNAL = 13
} bwf_status;

typedef enum bwf_condition {
    BWF_CONDITION_PASS = 0,
    BWF_CONDITION_FAIL = 1,
    BWF_CONDITION_UNKNOWN = 2
} bwf_condition;

typedef struct bwf_family bwf_family;
typedef struct bwf_diagnosis bwf_diagnosis;
typedef struct bwf_scan bwf_scan;

BWF_API const char* bwf_version(void);
BWF_API const char* bwf_status_name(bwf_status status);
/* Message and witness of the last failure on the calling thread. */
BWF_API const char* bwf_last_error(void);
BWF_API const char* bwf_last_witness(void);
BWF_API void bwf_string_free(char* s);

BWF_API bwf_status bwf_cyclotomic(unsigned k, char** out);
BWF_API bwf_status bwf_poly_normalize(const char* text, char** out);

/* sqrt_or_null: NULL to use the built-in square roots of -D. */
BWF_API bwf_status bwf_family_construct(unsigned k, long D, const char* r, const char* zeta,
                                        const char* sqrt_or_null, bwf_family** out);
/* diagnostic != 0 keeps inconsistent tuples for the validator. */
BWF_API bwf_status bwf_family_load_json(const char* text, int diagnostic, bwf_family** out);
BWF_API bwf_status bwf_family_load_registry(const char* name, bwf_family** out);
BWF_API bwf_status bwf_family_to_json(const bwf_family* family, char** out);
/* field: one of "t", "r", "q", "y", "h". */
BWF_API bwf_status bwf_family_field(const bwf_family* family, const char* field, char** out);
BWF_API void bwf_family_free(bwf_family* family);

BWF_API bwf_status bwf_validate(const bwf_family* family, bwf_diagnosis** out);
BWF_API int bwf_diagnosis_is_complete(const bwf_diagnosis* diagnosis);
BWF_API int bwf_diagnosis_is_ideal(const bwf_diagnosis* diagnosis);
/* index 0..4 for conditions (i)..(v); -1 on a bad index or handle. */
BWF_API int bwf_diagnosis_condition(const bwf_diagnosis* diagnosis, int index);
/* Exact rational, or an error when rho is undefined. */
BWF_API bwf_status bwf_diagnosis_rho(const bwf_diagnosis* diagnosis, char** out);
BWF_API bwf_status bwf_diagnosis_to_json(const bwf_diagnosis* diagnosis, char** out);
BWF_API void bwf_diagnosis_free(bwf_diagnosis* diagnosis);

/* lo and hi are decimal integers; threads = 0 uses every core. */
BWF_API bwf_status bwf_scan_range(const bwf_family* family, const char* lo, const char* hi, uint64_t seed,
                                  unsigned threads, bwf_scan** out);
BWF_API bwf_status bwf_scan_bits(const bwf_family* family, unsigned bits, unsigned count, uint64_t seed,
                                 unsigned threads, bwf_scan** out);
BWF_API size_t bwf_scan_hit_count(const bwf_scan* scan);
BWF_API bwf_status bwf_scan_to_json(const bwf_scan* scan, char** out);
BWF_API void bwf_scan_free(bwf_scan* scan);

/* target: "bn", "example-k4-d2", "example-k6-d1", "theorem1" or
 * "theorem3-scan". *passed is 1 when the reproduction agrees. */
BWF_API bwf_status bwf_reproduce(const char* target, char** json_out, int* passed);
/* JSON array of registry family names. */
BWF_API bwf_status bwf_registry_list(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* BWFAM_BWFAM_H */
