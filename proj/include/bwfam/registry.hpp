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

// Built-in family documents, stored as JSON text so reconstruction can be
// checked against values transcribed independently of the constructor.

#ifndef BWFAM_REGISTRY_HPP
#define BWFAM_REGISTRY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bwfam/family.hpp"
#include "bwfam/json_io.hpp"

namespace bwfam {

std::vector<std::string> registry_names();
bool registry_contains(std::string_view name);
// Both throw Error(kUnknownName) for names outside registry_names().
const Json& registry_document(std::string_view name);
FamilyCandidate registry_family(std::string_view name);

}  // namespace bwfam

#endif  // BWFAM_REGISTRY_HPP
