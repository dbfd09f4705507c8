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

#include "bwfam/registry.hpp"

#include <map>
#include <string>

#include "bwfam/error.hpp"

namespace bwfam {

namespace {

constexpr std::string_view kDocuments = R"json({
  "bn": {
    "name": "bn", "source": "Barreto-Naehrig curves",
    "k": 12, "D": 3,
    "t": "6*x^2+1",
    "r": "36*x^4+36*x^3+18*x^2+6*x+1",
    "q": "36*x^4+36*x^3+24*x^2+6*x+1",
    "y": "6*x^2+4*x+1",
    "h": "1",
    "zeta": "6*x^2"
  },
  "example-k4-d2": {
    "name": "example-k4-d2", "source": "k = 4 in the eighth cyclotomic field, D = 2",
    "k": 4, "D": 2,
    "t": "x^2+1",
    "r": "x^4+1",
    "q": "1/4*x^4+x^2+1/4",
    "y": "x",
    "h": "1/4",
    "zeta": "x^2"
  },
  "example-k6-d1": {
    "name": "example-k6-d1", "source": "k = 6 in the twelfth cyclotomic field, D = 1",
    "k": 6, "D": 1,
    "t": "x^2+1",
    "r": "x^4-x^2+1",
    "q": "1/4*x^4+3/4*x^2+1/4",
    "y": "x",
    "h": "1/4",
    "zeta": "x^2"
  }
})json";

const Json& documents() {
    static const Json docs = Json::parse(kDocuments);
    return docs;
}

}  // namespace

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const auto& [name, doc] : documents().items()) names.push_back(name);
    return names;
}

bool registry_contains(std::string_view name) { return documents().contains(std::string(name)); }

const Json& registry_document(std::string_view name) {
    const auto it = documents().find(std::string(name));
    if (it == documents().end()) throw Error(ErrorCode::kUnknownName, "no registry family named " + std::string(name));
    return *it;
}

FamilyCandidate registry_family(std::string_view name) { return family_from_json(registry_document(name)); }

}  // namespace bwfam
