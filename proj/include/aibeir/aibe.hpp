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

#ifndef AIBEIR_AIBE_HPP
#define AIBEIR_AIBE_HPP

#include <utility>

#include "aibeir/pairing.hpp"
#include "aibeir/wire.hpp"

// Boneh–Franklin-style anonymous IBE with a stream-KDF payload so it
// encrypts byte strings of any length up to 2^16-1. Ciphertexts are
// (r·P, masked payload): the group element is identity-independent and the
// mask is a fresh XOF stream, so the serialized layout depends only on the
// payload length, never on the recipient identity.
namespace aibeir::aibe {

struct PublicKey {
    CurveParams params;
    GroupElement P;      // fixed generator, hash-derived
    GroupElement P_pub;  // s·P
};

struct MasterKey {
    Scalar s;
};

struct UserKey {
    GroupElement d_id;  // s·H1(id)
};

struct Ciphertext {
    GroupElement U;  // r·P
    Bytes V;         // KDF-masked payload, |V| = payload length
};

inline constexpr size_t kMaxMessage = 0xffff;

inline GroupElement identity_point(const CurveParams& cp,
                                   std::span<const uint8_t> id) {
    return hash_to_group("AIBE-H1", id, cp);
}

inline std::pair<PublicKey, MasterKey> setup(const CurveParams& cp,
                                             XofRng& rng) {
    PublicKey pk;
    pk.params = cp;
    pk.P = hash_to_group("AIBE-BASE", "P", cp);
    Scalar s = random_nonzero_scalar(cp, rng);
    pk.P_pub = point_mul(cp, pk.P, s);
    return {std::move(pk), MasterKey{s}};
}

// Deterministic: the key for an identity is a pure function of (msk, id).
inline UserKey extract(const PublicKey& pk, const MasterKey& msk,
                       std::span<const uint8_t> id) {
    return UserKey{point_mul(pk.params, identity_point(pk.params, id), msk.s)};
}

// e(d_id, P) = e(H1(id), P_pub).
inline bool key_sanity(const PublicKey& pk, std::span<const uint8_t> id,
                       const UserKey& sk) {
    const CurveParams& cp = pk.params;
    return pairing(cp, sk.d_id, pk.P) ==
           pairing(cp, identity_point(cp, id), pk.P_pub);
}

namespace detail {

inline Bytes mask_stream(const CurveParams& cp, const GroupElement& U,
                         const GtElement& shared, size_t len) {
    Shake256 h;
    h.absorb("AIBE-MASK").absorb_u8(0x00);
    Bytes ub = serialize_g(cp, U);
    h.absorb(std::span<const uint8_t>(ub.data(), ub.size()));
    Bytes sb = serialize_gt(cp, shared);
    h.absorb(std::span<const uint8_t>(sb.data(), sb.size()));
    return h.squeeze(len);
}

inline Bytes xor_bytes(std::span<const uint8_t> a, std::span<const uint8_t> b) {
    Bytes out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

}  // namespace detail

inline Ciphertext encrypt_with(const PublicKey& pk, std::span<const uint8_t> id,
                               std::span<const uint8_t> msg, const Scalar& r) {
    if (msg.size() > kMaxMessage)
        throw std::invalid_argument("message exceeds 2^16-1 bytes");
    const CurveParams& cp = pk.params;
    Ciphertext ct;
    ct.U = point_mul(cp, pk.P, r);
    GtElement shared =
        gt_pow(cp, pairing(cp, identity_point(cp, id), pk.P_pub), r);
    ct.V = detail::xor_bytes(msg,
                             detail::mask_stream(cp, ct.U, shared, msg.size()));
    return ct;
}

inline Ciphertext encrypt(const PublicKey& pk, std::span<const uint8_t> id,
                          std::span<const uint8_t> msg, XofRng& rng) {
    return encrypt_with(pk, id, msg, random_scalar(pk.params, rng));
}

// A mismatched key unmasks to garbage bytes; higher layers detect that
// through framing of the recovered plaintext.
inline Bytes decrypt(const PublicKey& pk, const UserKey& sk,
                     const Ciphertext& ct) {
    const CurveParams& cp = pk.params;
    GtElement shared = pairing(cp, sk.d_id, ct.U);
    return detail::xor_bytes(
        ct.V, detail::mask_stream(cp, ct.U, shared, ct.V.size()));
}

// --- Serialization ---

inline Bytes serialize_public_key(const PublicKey& pk) {
    ByteWriter w;
    w.blob16(serialize_params(pk.params));
    w.blob16(serialize_g(pk.params, pk.P));
    w.blob16(serialize_g(pk.params, pk.P_pub));
    return frame(obj::kAibePublicKey, w.view());
}

inline PublicKey deserialize_public_key(std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kAibePublicKey, data);
    ByteReader r(payload);
    PublicKey pk;
    pk.params = deserialize_params(r.blob16());
    pk.P = deserialize_g(pk.params, r.blob16());
    pk.P_pub = deserialize_g(pk.params, r.blob16());
    r.expect_end();
    if (pk.P.infinity)
        throw FormatError(DecodeFailure::invalid_value, "identity generator");
    return pk;
}

inline Bytes serialize_master_key(const MasterKey& msk) {
    ByteWriter w;
    w.bigint16(msk.s);
    return frame(obj::kAibeMasterKey, w.view());
}

inline MasterKey deserialize_master_key(const CurveParams& cp,
                                        std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kAibeMasterKey, data);
    ByteReader r(payload);
    Scalar s = r.bigint16();
    r.expect_end();
    if (s == 0 || s >= cp.p)
        throw FormatError(DecodeFailure::invalid_value, "s outside [1, p)");
    return MasterKey{s};
}

inline Bytes serialize_user_key(const CurveParams& cp, const UserKey& sk) {
    ByteWriter w;
    w.blob16(serialize_g(cp, sk.d_id));
    return frame(obj::kAibeUserKey, w.view());
}

inline UserKey deserialize_user_key(const CurveParams& cp,
                                    std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kAibeUserKey, data);
    ByteReader r(payload);
    UserKey sk{deserialize_g(cp, r.blob16())};
    r.expect_end();
    return sk;
}

// Payload layout fixed as serialize_g(U) ‖ u16 length ‖ V.
inline Bytes serialize_ciphertext(const CurveParams& cp, const Ciphertext& ct) {
    ByteWriter w;
    w.raw(serialize_g(cp, ct.U));
    w.blob16(ct.V);
    return frame(obj::kAibeCiphertext, w.view());
}

inline Ciphertext deserialize_ciphertext(const CurveParams& cp,
                                         std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kAibeCiphertext, data);
    ByteReader r(payload);
    Ciphertext ct;
    ct.U = read_g(cp, r);
    ct.V = r.blob16();
    r.expect_end();
    return ct;
}

}  // namespace aibeir::aibe

#endif  // AIBEIR_AIBE_HPP
