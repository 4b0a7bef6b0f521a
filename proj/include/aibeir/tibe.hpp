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

#ifndef AIBEIR_TIBE_HPP
#define AIBEIR_TIBE_HPP

#include <utility>
#include <vector>

#include "aibeir/pairing.hpp"
#include "aibeir/wire.hpp"

// Waters-style testable IBE. Identities are n-bit strings; a ciphertext
// splits into an identity-bound core (g^t, (u'·∏u_i)^t) that carries no
// message information and a payload part that carries no identity
// information. The public Test predicate decides core/identity consistency
// without any secret input.
namespace aibeir::tibe {

struct BitIdentity {
    std::vector<bool> bits;

    size_t size() const { return bits.size(); }

    // Indices i with bit i set (0-based; the set 𝒱 of the construction).
    std::vector<size_t> one_indices() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) out.push_back(i);
        return out;
    }

    // Arbitrary byte-string identities map onto n bits through the XOF;
    // collisions across distinct strings are possible below n = 128 and
    // cryptographically negligible at the default n = 128.
    static BitIdentity from_bytes(std::span<const uint8_t> id, size_t n) {
        Bytes h = xof("TIBE-ID", id, (n + 7) / 8);
        BitIdentity v;
        v.bits.resize(n);
        for (size_t i = 0; i < n; ++i)
            v.bits[i] = (h[i / 8] >> (7 - i % 8)) & 1;
        return v;
    }

    static BitIdentity from_bits(std::vector<bool> b) {
        return BitIdentity{std::move(b)};
    }

    bool operator==(const BitIdentity& o) const { return bits == o.bits; }
};

struct PublicKey {
    CurveParams params;
    GroupElement g;
    GroupElement g1;  // g^α
    GroupElement g2;
    GroupElement u_prime;
    std::vector<GroupElement> u_vec;

    size_t n() const { return u_vec.size(); }
};

struct MasterKey {
    GroupElement g2_alpha;  // g2^α, the working master secret
    // α itself, kept so definitional identities (g1 = g^α, msk = g2^α) are
    // checkable in tests. Serialization may omit it.
    std::optional<Scalar> alpha;
};

struct UserKey {
    GroupElement d1;  // g2^α · (u'·∏u_i)^r
    GroupElement d2;  // g^r
};

// The testable core c0 = (C2, C3) = (g^t, (u'·∏u_i)^t).
struct CipherCore {
    GroupElement c2;
    GroupElement c3;

    bool operator==(const CipherCore& o) const {
        return c2 == o.c2 && c3 == o.c3;
    }
};

enum class PayloadMode : uint8_t { kNative = 0, kBytes = 1 };

struct Ciphertext {
    CipherCore core;
    PayloadMode mode = PayloadMode::kNative;
    GtElement payload_gt;  // native mode: e(g1,g2)^t · M
    Bytes payload_mask;    // byte mode: KDF(e(g1,g2)^t) ⊕ plaintext
};

inline constexpr size_t kMaxByteMessage = 0xffff;

// --- Setup / key generation ---

inline std::pair<PublicKey, MasterKey> setup(const CurveParams& cp, size_t n,
                                             XofRng& rng) {
    if (n < 1) throw std::invalid_argument("identity bit-length must be >= 1");
    PublicKey pk;
    pk.params = cp;
    pk.g = hash_to_group("TIBE-GEN", rng.bytes(32), cp);
    pk.g2 = hash_to_group("TIBE-GEN", rng.bytes(32), cp);
    Scalar alpha = random_scalar(cp, rng);
    pk.g1 = point_mul(cp, pk.g, alpha);
    pk.u_prime = hash_to_group("TIBE-GEN", rng.bytes(32), cp);
    pk.u_vec.reserve(n);
    for (size_t i = 0; i < n; ++i)
        pk.u_vec.push_back(hash_to_group("TIBE-GEN", rng.bytes(32), cp));
    MasterKey msk;
    msk.g2_alpha = point_mul(cp, pk.g2, alpha);
    msk.alpha = alpha;
    return {std::move(pk), std::move(msk)};
}

// u' · ∏_{i∈𝒱} u_i for the identity v.
inline GroupElement hash_product(const PublicKey& pk, const BitIdentity& v) {
    if (v.size() != pk.n())
        throw std::invalid_argument("identity length mismatch");
    GroupElement acc = pk.u_prime;
    for (size_t i = 0; i < v.bits.size(); ++i)
        if (v.bits[i]) acc = point_add(pk.params, acc, pk.u_vec[i]);
    return acc;
}

inline UserKey extract(const PublicKey& pk, const MasterKey& msk,
                       const BitIdentity& v, XofRng& rng) {
    const CurveParams& cp = pk.params;
    Scalar r = random_scalar(cp, rng);
    GroupElement hv = hash_product(pk, v);
    UserKey sk;
    sk.d1 = point_add(cp, msk.g2_alpha, point_mul(cp, hv, r));
    sk.d2 = point_mul(cp, pk.g, r);
    return sk;
}

// e(d1, g) = e(g1, g2) · e(hash_product(v), d2); holds for every key the
// extractor emits for v.
inline bool key_sanity(const PublicKey& pk, const BitIdentity& v,
                       const UserKey& sk) {
    const CurveParams& cp = pk.params;
    GtElement lhs = pairing(cp, sk.d1, pk.g);
    GtElement rhs = gt_mul(cp, pairing(cp, pk.g1, pk.g2),
                           pairing(cp, hash_product(pk, v), sk.d2));
    return lhs == rhs;
}

// --- Encryption ---

namespace detail {

inline Bytes payload_kdf(const CurveParams& cp, const GtElement& key,
                         size_t len) {
    return xof("TIBE-MASK", serialize_gt(cp, key), len);
}

inline Bytes xor_bytes(std::span<const uint8_t> a, std::span<const uint8_t> b) {
    Bytes out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

}  // namespace detail

inline CipherCore make_core(const PublicKey& pk, const BitIdentity& v,
                            const Scalar& t) {
    const CurveParams& cp = pk.params;
    return CipherCore{point_mul(cp, pk.g, t),
                      point_mul(cp, hash_product(pk, v), t)};
}

inline Ciphertext encrypt_with(const PublicKey& pk, const BitIdentity& v,
                               const GtElement& msg, const Scalar& t) {
    const CurveParams& cp = pk.params;
    Ciphertext ct;
    ct.core = make_core(pk, v, t);
    ct.mode = PayloadMode::kNative;
    GtElement key = gt_pow(cp, pairing(cp, pk.g1, pk.g2), t);
    ct.payload_gt = gt_mul(cp, key, msg);
    return ct;
}

inline Ciphertext encrypt(const PublicKey& pk, const BitIdentity& v,
                          const GtElement& msg, XofRng& rng) {
    return encrypt_with(pk, v, msg, random_scalar(pk.params, rng));
}

inline Ciphertext encrypt_bytes_with(const PublicKey& pk, const BitIdentity& v,
                                     std::span<const uint8_t> msg,
                                     const Scalar& t) {
    if (msg.size() > kMaxByteMessage)
        throw std::invalid_argument("byte message exceeds 2^16-1");
    const CurveParams& cp = pk.params;
    Ciphertext ct;
    ct.core = make_core(pk, v, t);
    ct.mode = PayloadMode::kBytes;
    GtElement key = gt_pow(cp, pairing(cp, pk.g1, pk.g2), t);
    ct.payload_mask = detail::xor_bytes(msg, detail::payload_kdf(cp, key, msg.size()));
    return ct;
}

inline Ciphertext encrypt_bytes(const PublicKey& pk, const BitIdentity& v,
                                std::span<const uint8_t> msg, XofRng& rng) {
    return encrypt_bytes_with(pk, v, msg, random_scalar(pk.params, rng));
}

// --- Decryption ---
// Wrong-key decryption yields garbage by design; callers detect mismatches
// through Test or through framing of the recovered plaintext.

inline GtElement decrypt(const PublicKey& pk, const UserKey& sk,
                         const Ciphertext& ct) {
    if (ct.mode != PayloadMode::kNative)
        throw std::invalid_argument("ciphertext not in native mode");
    const CurveParams& cp = pk.params;
    // C1 · e(d2, C3) / e(d1, C2)
    GtElement num = pairing(cp, sk.d2, ct.core.c3);
    GtElement den = pairing(cp, sk.d1, ct.core.c2);
    return gt_mul(cp, ct.payload_gt, gt_mul(cp, num, gt_inv(cp, den)));
}

inline Bytes decrypt_bytes(const PublicKey& pk, const UserKey& sk,
                           const Ciphertext& ct) {
    if (ct.mode != PayloadMode::kBytes)
        throw std::invalid_argument("ciphertext not in byte mode");
    const CurveParams& cp = pk.params;
    // e(d1, C2) / e(d2, C3) = e(g1, g2)^t on a matching key.
    GtElement key = gt_mul(cp, pairing(cp, sk.d1, ct.core.c2),
                           gt_inv(cp, pairing(cp, sk.d2, ct.core.c3)));
    return detail::xor_bytes(
        ct.payload_mask,
        detail::payload_kdf(cp, key, ct.payload_mask.size()));
}

// --- Test ---
// Public predicate: e(g, C3) == e(C2, u'·∏u_i). No secret inputs. Note the
// degenerate core (identity, identity) satisfies the equation for every
// identity; layers that care reject an identity C2 before testing.
inline bool test(const PublicKey& pk, const BitIdentity& v,
                 const CipherCore& core) {
    const CurveParams& cp = pk.params;
    GtElement lhs = pairing(cp, pk.g, core.c3);
    GtElement rhs = pairing(cp, core.c2, hash_product(pk, v));
    return lhs == rhs;
}

// --- Serialization ---

inline Bytes serialize_public_key(const PublicKey& pk) {
    ByteWriter w;
    w.blob16(serialize_params(pk.params));
    w.blob16(serialize_g(pk.params, pk.g));
    w.blob16(serialize_g(pk.params, pk.g1));
    w.blob16(serialize_g(pk.params, pk.g2));
    w.blob16(serialize_g(pk.params, pk.u_prime));
    w.u16(static_cast<uint16_t>(pk.n()));
    for (const auto& u : pk.u_vec) w.blob16(serialize_g(pk.params, u));
    return frame(obj::kTibePublicKey, w.view());
}

inline PublicKey deserialize_public_key(std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kTibePublicKey, data);
    ByteReader r(payload);
    PublicKey pk;
    pk.params = deserialize_params(r.blob16());
    pk.g = deserialize_g(pk.params, r.blob16());
    pk.g1 = deserialize_g(pk.params, r.blob16());
    pk.g2 = deserialize_g(pk.params, r.blob16());
    pk.u_prime = deserialize_g(pk.params, r.blob16());
    size_t n = r.u16();
    if (n < 1)
        throw FormatError(DecodeFailure::invalid_value, "n must be >= 1");
    pk.u_vec.reserve(n);
    for (size_t i = 0; i < n; ++i)
        pk.u_vec.push_back(deserialize_g(pk.params, r.blob16()));
    r.expect_end();
    return pk;
}

inline Bytes serialize_master_key(const CurveParams& cp, const MasterKey& msk,
                                  bool include_alpha = true) {
    ByteWriter w;
    bool with_alpha = include_alpha && msk.alpha.has_value();
    w.u8(with_alpha ? 1 : 0);
    w.blob16(serialize_g(cp, msk.g2_alpha));
    if (with_alpha) w.bigint16(*msk.alpha);
    return frame(obj::kTibeMasterKey, w.view());
}

inline MasterKey deserialize_master_key(const CurveParams& cp,
                                        std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kTibeMasterKey, data);
    ByteReader r(payload);
    uint8_t with_alpha = r.u8();
    if (with_alpha > 1)
        throw FormatError(DecodeFailure::invalid_value, "bad alpha flag");
    MasterKey msk;
    msk.g2_alpha = deserialize_g(cp, r.blob16());
    if (with_alpha) {
        Scalar a = r.bigint16();
        if (a >= cp.p)
            throw FormatError(DecodeFailure::invalid_value, "alpha not reduced");
        msk.alpha = a;
    }
    r.expect_end();
    return msk;
}

inline Bytes serialize_user_key(const CurveParams& cp, const UserKey& sk) {
    ByteWriter w;
    w.blob16(serialize_g(cp, sk.d1));
    w.blob16(serialize_g(cp, sk.d2));
    return frame(obj::kTibeUserKey, w.view());
}

inline UserKey deserialize_user_key(const CurveParams& cp,
                                    std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kTibeUserKey, data);
    ByteReader r(payload);
    UserKey sk;
    sk.d1 = deserialize_g(cp, r.blob16());
    sk.d2 = deserialize_g(cp, r.blob16());
    r.expect_end();
    return sk;
}

inline Bytes serialize_ciphertext(const CurveParams& cp, const Ciphertext& ct) {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(ct.mode));
    w.blob16(serialize_g(cp, ct.core.c2));
    w.blob16(serialize_g(cp, ct.core.c3));
    if (ct.mode == PayloadMode::kNative)
        w.blob16(serialize_gt(cp, ct.payload_gt));
    else
        w.blob16(ct.payload_mask);  // u16 length ‖ mask
    return frame(obj::kTibeCiphertext, w.view());
}

inline Ciphertext deserialize_ciphertext(const CurveParams& cp,
                                         std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kTibeCiphertext, data);
    ByteReader r(payload);
    uint8_t mode = r.u8();
    if (mode > 1)
        throw FormatError(DecodeFailure::invalid_value, "bad payload mode");
    Ciphertext ct;
    ct.mode = static_cast<PayloadMode>(mode);
    ct.core.c2 = deserialize_g(cp, r.blob16());
    ct.core.c3 = deserialize_g(cp, r.blob16());
    if (ct.mode == PayloadMode::kNative)
        ct.payload_gt = deserialize_gt(cp, r.blob16());
    else
        ct.payload_mask = r.blob16();
    r.expect_end();
    return ct;
}

}  // namespace aibeir::tibe

#endif  // AIBEIR_TIBE_HPP
