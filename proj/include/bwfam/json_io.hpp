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

// JSON documents. Object keys come out sorted; polynomials use the shared
// text format and every big integer is a decimal string.
//
// Family document:
//   { "D": 3, "k": 12, "t": "...", "r": "...", "q": "...",
//     "y": "...", "h": "...",                 (optional on input)
//     "name": "...", "source": "...", "zeta": "..." }  (optional)

#ifndef BWFAM_JSON_IO_HPP
#define BWFAM_JSON_IO_HPP

#include <string_view>

#include "json.hpp"

#include "bwfam/family.hpp"
#include "bwfam/instantiate.hpp"

namespace bwfam {

using Json = nlohmann::json;

Json family_to_json(const FamilyCandidate& c);
// Throws Error(kParse) on schema violations. Missing y and h are derived
// when possible. Without diagnostic mode the identities are re-verified.
FamilyCandidate family_from_json(const Json& doc, bool diagnostic = false);
FamilyCandidate family_from_json_text(std::string_view text, bool diagnostic = false);

Json diagnosis_to_json(const FamilyDiagnosis& d);
Json curve_params_to_json(const CurveParams& p);
Json scan_report_to_json(const ScanReport& r);

}  // namespace bwfam

#endif  // BWFAM_JSON_IO_HPP
