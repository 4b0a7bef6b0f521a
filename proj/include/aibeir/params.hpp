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

#ifndef AIBEIR_PARAMS_HPP
#define AIBEIR_PARAMS_HPP

#include <string>

#include "aibeir/bigint.hpp"
#include "aibeir/wire.hpp"

namespace aibeir {

// Supersingular curve y^2 = x^3 + x over F_q with q ≡ 3 (mod 4), so
// #E(F_q) = q + 1 and F_q2 = F_q(i). The pairing group is the order-p
// subgroup, p prime with p | q + 1. Embedding degree is exactly 2.
struct CurveParams {
    BigInt q;             // base field prime, q ≡ 3 (mod 4)
    BigInt p;             // prime subgroup order, p | q + 1
    BigInt cofactor;      // (q + 1) / p
    size_t field_width;   // ceil(bits(q) / 8), fixed encoding width
    std::string security_label;  // "toy" | "desk" | "demo"

    bool operator==(const CurveParams& other) const {
        return q == other.q && p == other.p && cofactor == other.cofactor;
    }
};

inline std::string classify_security(size_t subgroup_bits) {
    if (subgroup_bits <= 32) return "toy";
    if (subgroup_bits <= 160) return "desk";
    return "demo";
}

namespace detail {

inline CurveParams finish_params(const BigInt& q, const BigInt& p,
                                 const BigInt& cofactor) {
    CurveParams cp;
    cp.q = q;
    cp.p = p;
    cp.cofactor = cofactor;
    cp.field_width = (bit_length(q) + 7) / 8;
    cp.security_label = classify_security(bit_length(p));
    return cp;
}

}  // namespace detail

// Deterministic parameter search: draw a candidate subgroup order of the
// requested width from the seed, advance it to the next prime p, then scan
// cofactors c ∈ {4, 8, 12, ...} until q = c·p − 1 is prime. Since 4 | c and
// p is odd, q ≡ 3 (mod 4) holds automatically.
inline CurveParams generate_params(unsigned subgroup_bits, const Bytes& seed) {
    if (subgroup_bits < 8)
        throw std::invalid_argument("subgroup_bits must be at least 8");
    if (subgroup_bits > 384)
        throw std::invalid_argument("subgroup_bits above 384 unsupported");

    XofRng rng(xof("AIBE-PARAMS", seed, 32));
    size_t width = (subgroup_bits + 7) / 8;
    const int kPrimeScan = 65536;
    BigInt p;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= kPrimeScan)
            throw CryptoError("parameter search exhausted: no subgroup prime");
        p = from_bytes_be(rng.bytes(width));
        // Pin the width: top bit set, low bit set.
        p |= BigInt(1) << (subgroup_bits - 1);
        p &= (BigInt(1) << subgroup_bits) - 1;
        p |= 1;
        if (is_prime(p)) break;
    }

    const int kCofactorScan = 65536;
    for (int k = 1; k <= kCofactorScan; ++k) {
        BigInt c = BigInt(4) * k;
        BigInt q = c * p - 1;
        if (is_prime(q)) return detail::finish_params(q, p, c);
    }
    throw CryptoError("parameter search exhausted: no cofactor found");
}

// Revalidates everything a hostile encoding could violate.
inline void validate_params(const CurveParams& cp) {
    if (cp.q < 5 || !is_prime(cp.q))
        throw FormatError(DecodeFailure::invalid_value, "q not prime");
    if (mod(cp.q, 4) != 3)
        throw FormatError(DecodeFailure::invalid_value, "q != 3 mod 4");
    if (cp.p < 2 || !is_prime(cp.p))
        throw FormatError(DecodeFailure::invalid_value, "p not prime");
    if ((cp.q + 1) % cp.p != 0)
        throw FormatError(DecodeFailure::invalid_value, "p does not divide q+1");
    if (cp.cofactor * cp.p != cp.q + 1)
        throw FormatError(DecodeFailure::invalid_value, "wrong cofactor");
    if (bit_length(cp.q) > 512)
        throw FormatError(DecodeFailure::invalid_value, "field too wide");
}

inline Bytes serialize_params(const CurveParams& cp) {
    ByteWriter w;
    w.bigint16(cp.q);
    w.bigint16(cp.p);
    w.bigint16(cp.cofactor);
    return frame(obj::kCurveParams, w.view());
}

inline CurveParams deserialize_params(std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kCurveParams, data);
    ByteReader r(payload);
    BigInt q = r.bigint16();
    BigInt p = r.bigint16();
    BigInt c = r.bigint16();
    r.expect_end();
    CurveParams cp = detail::finish_params(q, p, c);
    validate_params(cp);
    return cp;
}

}  // namespace aibeir

#endif  // AIBEIR_PARAMS_HPP
