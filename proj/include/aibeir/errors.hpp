// Copyright 2026 The AIBEIR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AIBEIR_ERRORS_HPP
#define AIBEIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aibeir {

// Why a decode was rejected. Structural kinds (bad_magic, bad_version,
// bad_object, malformed_length) indicate broken framing; value kinds
// (not_on_curve, not_in_subgroup, invalid_value) indicate well-framed
// bytes that fail a mathematical validity check.
enum class DecodeFailure {
    malformed_length,
    bad_magic,
    bad_version,
    bad_object,
    not_on_curve,
    not_in_subgroup,
    invalid_value,
};

inline const char* to_string(DecodeFailure f) {
    switch (f) {
        case DecodeFailure::malformed_length: return "malformed-length";
        case DecodeFailure::bad_magic: return "bad-magic";
        case DecodeFailure::bad_version: return "bad-version";
        case DecodeFailure::bad_object: return "bad-object";
        case DecodeFailure::not_on_curve: return "not-on-curve";
        case DecodeFailure::not_in_subgroup: return "not-in-subgroup";
        case DecodeFailure::invalid_value: return "invalid-value";
    }
    return "unknown";
}

class FormatError : public std::runtime_error {
public:
    FormatError(DecodeFailure kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
          kind_(kind) {}

    DecodeFailure kind() const noexcept { return kind_; }

    bool structural() const noexcept {
        return kind_ == DecodeFailure::malformed_length ||
               kind_ == DecodeFailure::bad_magic ||
               kind_ == DecodeFailure::bad_version ||
               kind_ == DecodeFailure::bad_object;
    }

private:
    DecodeFailure kind_;
};

// Failures of cryptographic meaning rather than byte layout: reserved
// identities, oversize plaintexts, wrong-key decryptions that surface as
// unparseable inner plaintext, exhausted parameter searches.
class CryptoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem-level failures: missing or ambiguous keystore entries,
// unwritable directories.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aibeir

#endif  // AIBEIR_ERRORS_HPP
