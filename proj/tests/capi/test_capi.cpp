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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>
#include <thread>

#include "bwfam/bwfam.h"
#include "json.hpp"

using nlohmann::json;

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    bwf_string_free(s);
    return out;
}

constexpr const char* kBnR = "36*x^4+36*x^3+18*x^2+6*x+1";

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(bwf_version()).size() > 0);
    CHECK(std::string(bwf_status_name(BWF_OK)) == "ok");
    CHECK(std::string(bwf_status_name(BWF_ERR_REDUCIBLE)) == "reducible");
    CHECK(std::string(bwf_status_name(static_cast<bwf_status>(99))) == "unknown");
}

TEST_CASE("polynomials") {
    char* out = nullptr;
    REQUIRE(bwf_cyclotomic(12, &out) == BWF_OK);
    CHECK(take(out) == "x^4-x^2+1");
    REQUIRE(bwf_poly_normalize("2*x + x^2 - 2*x", &out) == BWF_OK);
    CHECK(take(out) == "x^2");
    CHECK(bwf_poly_normalize("x^^2", &out) == BWF_ERR_PARSE);
    CHECK(std::string(bwf_last_error()).size() > 0);
    CHECK(bwf_cyclotomic(0, &out) == BWF_ERR_INVALID_ARGUMENT);
    CHECK(bwf_cyclotomic(3, nullptr) == BWF_ERR_INVALID_ARGUMENT);
    CHECK(bwf_poly_normalize(nullptr, &out) == BWF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("construct and validate BN") {
    bwf_family* family = nullptr;
    REQUIRE(bwf_family_construct(12, 3, kBnR, "6*x^2", nullptr, &family) == BWF_OK);
    char* out = nullptr;
    REQUIRE(bwf_family_field(family, "t", &out) == BWF_OK);
    CHECK(take(out) == "6*x^2+1");
    REQUIRE(bwf_family_field(family, "q", &out) == BWF_OK);
    CHECK(take(out) == "36*x^4+36*x^3+24*x^2+6*x+1");
    REQUIRE(bwf_family_field(family, "y", &out) == BWF_OK);
    CHECK(take(out) == "6*x^2+4*x+1");
    REQUIRE(bwf_family_field(family, "h", &out) == BWF_OK);
    CHECK(take(out) == "1");
    CHECK(bwf_family_field(family, "w", &out) == BWF_ERR_INVALID_ARGUMENT);

    bwf_diagnosis* diagnosis = nullptr;
    REQUIRE(bwf_validate(family, &diagnosis) == BWF_OK);
    CHECK(bwf_diagnosis_is_complete(diagnosis) == 1);
    CHECK(bwf_diagnosis_is_ideal(diagnosis) == 1);
    for (int i = 0; i < 5; ++i) CHECK(bwf_diagnosis_condition(diagnosis, i) == BWF_CONDITION_PASS);
    CHECK(bwf_diagnosis_condition(diagnosis, 5) == -1);
    REQUIRE(bwf_diagnosis_rho(diagnosis, &out) == BWF_OK);
    CHECK(take(out) == "1");
    REQUIRE(bwf_diagnosis_to_json(diagnosis, &out) == BWF_OK);
    CHECK(json::parse(take(out))["is_ideal"] == true);
    bwf_diagnosis_free(diagnosis);

    REQUIRE(bwf_family_to_json(family, &out) == BWF_OK);
    const std::string text = take(out);
    bwf_family* again = nullptr;
    REQUIRE(bwf_family_load_json(text.c_str(), 0, &again) == BWF_OK);
    REQUIRE(bwf_family_to_json(again, &out) == BWF_OK);
    CHECK(take(out) == text);
    bwf_family_free(again);
    bwf_family_free(family);
}

TEST_CASE("construction failures report witnesses") {
    bwf_family* family = nullptr;
    CHECK(bwf_family_construct(4, 1, "x^4-1", "x", nullptr, &family) == BWF_ERR_REDUCIBLE);
    CHECK(std::string(bwf_last_witness()).size() > 0);
    CHECK(family == nullptr);
    CHECK(bwf_family_construct(5, 7, "x^4+x^3+x^2+x+1", "x", nullptr, &family) == BWF_ERR_NO_SQRT_RULE);
    CHECK(bwf_family_construct(4, 1, "x^2+1", "x", "x+1", &family) == BWF_ERR_BAD_SQRT);
    CHECK(bwf_family_construct(4, 1, "x^2+1", "1", nullptr, &family) == BWF_ERR_NOT_PRIMITIVE_ROOT);
    CHECK(bwf_family_construct(4, 1, nullptr, "x", nullptr, &family) == BWF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("inconsistent documents") {
    const char* text =
        R"({"k": 12, "D": 3, "t": "6*x^2+1", "r": "36*x^4+36*x^3+18*x^2+6*x+1",
            "q": "36*x^4+36*x^3+24*x^2+6*x+2", "y": "6*x^2+4*x+1", "h": "1"})";
    bwf_family* family = nullptr;
    CHECK(bwf_family_load_json(text, 0, &family) == BWF_ERR_INCONSISTENT);
    REQUIRE(bwf_family_load_json(text, 1, &family) == BWF_OK);
    bwf_diagnosis* diagnosis = nullptr;
    REQUIRE(bwf_validate(family, &diagnosis) == BWF_OK);
    CHECK(bwf_diagnosis_is_complete(diagnosis) == 0);
    CHECK(bwf_diagnosis_condition(diagnosis, 2) == BWF_CONDITION_FAIL);
    CHECK(bwf_diagnosis_condition(diagnosis, 4) == BWF_CONDITION_FAIL);
    bwf_diagnosis_free(diagnosis);
    bwf_family_free(family);
    CHECK(bwf_family_load_json("{", 0, &family) == BWF_ERR_PARSE);
}

TEST_CASE("registry and scans") {
    char* out = nullptr;
    REQUIRE(bwf_registry_list(&out) == BWF_OK);
    CHECK(json::parse(take(out)) == json({"bn", "example-k4-d2", "example-k6-d1"}));

    bwf_family* bn = nullptr;
    CHECK(bwf_family_load_registry("mnt", &bn) == BWF_ERR_UNKNOWN_NAME);
    REQUIRE(bwf_family_load_registry("bn", &bn) == BWF_OK);

    bwf_scan* scan = nullptr;
    REQUIRE(bwf_scan_range(bn, "1", "1", 0, 1, &scan) == BWF_OK);
    CHECK(bwf_scan_hit_count(scan) == 1);
    REQUIRE(bwf_scan_to_json(scan, &out) == BWF_OK);
    const json doc = json::parse(take(out));
    CHECK(doc["hits"][0]["r0"] == "97");
    CHECK(doc["hits"][0]["q0"] == "103");
    bwf_scan_free(scan);

    CHECK(bwf_scan_range(bn, "5", "1", 0, 1, &scan) == BWF_ERR_INVALID_ARGUMENT);
    CHECK(bwf_scan_range(bn, "one", "2", 0, 1, &scan) == BWF_ERR_PARSE);
    CHECK(bwf_scan_bits(bn, 32, 0, 0, 1, &scan) == BWF_ERR_INVALID_ARGUMENT);

    REQUIRE(bwf_scan_bits(bn, 32, 1, 7, 2, &scan) == BWF_OK);
    CHECK(bwf_scan_hit_count(scan) == 1);
    REQUIRE(bwf_scan_to_json(scan, &out) == BWF_OK);
    CHECK(json::parse(take(out))["hits"][0]["r0"] == "4674969529");
    bwf_scan_free(scan);
    bwf_family_free(bn);
}

TEST_CASE("reproduction targets") {
    char* out = nullptr;
    int passed = 0;
    REQUIRE(bwf_reproduce("bn", &out, &passed) == BWF_OK);
    CHECK(passed == 1);
    bwf_string_free(out);
    REQUIRE(bwf_reproduce("theorem1", &out, &passed) == BWF_OK);
    CHECK(passed == 1);
    CHECK(json::parse(take(out))["certified"] == true);
    CHECK(bwf_reproduce("theorem9", &out, &passed) == BWF_ERR_UNKNOWN_NAME);
}

TEST_CASE("null handles") {
    char* out = nullptr;
    CHECK(bwf_family_to_json(nullptr, &out) == BWF_ERR_INVALID_ARGUMENT);
    CHECK(bwf_validate(nullptr, nullptr) == BWF_ERR_INVALID_ARGUMENT);
    CHECK(bwf_diagnosis_is_complete(nullptr) == 0);
    CHECK(bwf_scan_hit_count(nullptr) == 0);
    bwf_family_free(nullptr);
    bwf_diagnosis_free(nullptr);
    bwf_scan_free(nullptr);
    bwf_string_free(nullptr);
}

TEST_CASE("errors are per thread") {
    char* out = nullptr;
    CHECK(bwf_poly_normalize("x^^", &out) == BWF_ERR_PARSE);
    const std::string here = bwf_last_error();
    std::string there;
    std::thread worker([&] {
        char* s = nullptr;
        (void)bwf_cyclotomic(0, &s);
        there = bwf_last_error();
    });
    worker.join();
    CHECK(std::string(bwf_last_error()) == here);
    CHECK(there != here);
}
