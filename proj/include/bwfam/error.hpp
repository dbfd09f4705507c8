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

#ifndef BWFAM_ERROR_HPP
#define BWFAM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace bwfam {

enum class ErrorCode {
    kInvalidArgument,
    kParse,
    kDivisionByZero,
    kReducible,         // witness: a nontrivial factor
    kInconclusive,      // irreducibility could not be decided
    kNotPrimitiveRoot,  // Phi_k(z) != 0 in the ring
    kNoSqrtRule,        // no square root of -D available for (k, D)
    kBadSqrt,           // supplied s does not square to -D
    kRingMismatch,
    kInconsistent,      // internal identity failed; a bug or corrupt input
    kNotIntegral,
    kUnknownName,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what, std::string witness = {})
        : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

    ErrorCode code() const noexcept { return code_; }
    // Empty unless the failure carries evidence (a factor, a remainder, ...).
    const std::string& witness() const noexcept { return witness_; }

   private:
    ErrorCode code_;
    std::string witness_;
};

}  // namespace bwfam

#endif  // BWFAM_ERROR_HPP
