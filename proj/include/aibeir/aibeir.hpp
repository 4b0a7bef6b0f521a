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

#ifndef AIBEIR_AIBEIR_HPP
#define AIBEIR_AIBEIR_HPP

#include <optional>
#include <tuple>

#include "aibeir/aibe.hpp"
#include "aibeir/tibe.hpp"

// Anonymous IBE with identity recovery, composed from the anonymous scheme
// and the testable scheme over one shared pairing group. A ciphertext is
//   c1: testable-IBE payload part for the message,
//   c2: anonymous encryption of the serialized testable core,
//   c3: testable-IBE encryption of the recipient identity under the
//       recovery manager's reserved identity.
// Everyone except the recovery manager sees an anonymous ciphertext; the
// manager can recover the identity from (c2, c3) but learns nothing about
// the message, which lives only in c1.
namespace aibeir {

struct PublicKey {
    aibe::PublicKey mpk_a;
    tibe::PublicKey mpk_t;
    Bytes id_epsilon;  // reserved recovery-manager identity, non-empty

    const CurveParams& params() const { return mpk_t.params; }
    size_t n() const { return mpk_t.n(); }
};

struct MasterKey {
    aibe::MasterKey msk_a;
    tibe::MasterKey msk_t;
};

// Recovery key: the anonymous master secret plus the testable user key for
// the reserved identity. Can open c2 for any identity and decrypt c3, but
// holds nothing that touches c1.
struct IrmKey {
    aibe::MasterKey msk_a;
    tibe::UserKey sk_t_epsilon;
};

struct UserKey {
    aibe::UserKey sk_a;
    tibe::UserKey sk_t;
    Bytes id;
};

// The three randomness draws of one encryption. Disclosing them lets a
// third party re-encrypt deterministically and adjudicate ciphertext
// validity (the recovery game's witness mechanism).
struct EncryptRandomness {
    Scalar t_payload;  // testable encryption of the message
    Scalar r_wrap;     // anonymous encryption of the core
    Scalar t_escrow;   // testable encryption of the identity
};

// Composed ciphertext with instrumented field access: each accessor counts
// reads so tests can certify which parts an algorithm touched (recovery
// must never read c1).
class Ciphertext {
public:
    Ciphertext() = default;
    Ciphertext(Bytes c1, aibe::Ciphertext c2, tibe::Ciphertext c3)
        : c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {}

    const Bytes& c1() const {
        ++c1_reads_;
        return c1_;
    }
    const aibe::Ciphertext& c2() const {
        ++c2_reads_;
        return c2_;
    }
    const tibe::Ciphertext& c3() const {
        ++c3_reads_;
        return c3_;
    }

    uint64_t c1_reads() const { return c1_reads_; }
    uint64_t c2_reads() const { return c2_reads_; }
    uint64_t c3_reads() const { return c3_reads_; }

    void reset_access_counts() const { c1_reads_ = c2_reads_ = c3_reads_ = 0; }

private:
    Bytes c1_;
    aibe::Ciphertext c2_;
    tibe::Ciphertext c3_;
    mutable uint64_t c1_reads_ = 0;
    mutable uint64_t c2_reads_ = 0;
    mutable uint64_t c3_reads_ = 0;
};

// Ciphertext wire overhead leaves 65533 bytes for the message once the
// payload segment's own u16 length prefix is accounted for.
inline constexpr size_t kMaxMessage = 0xffff - 2;
inline constexpr size_t kMaxIdentity = 255;

struct SetupResult {
    PublicKey mpk;
    MasterKey msk;
    IrmKey irm;  // handed to the recovery manager over a private channel
};

inline SetupResult setup(const CurveParams& cp, size_t n,
                         const Bytes& id_epsilon, XofRng& rng) {
    if (id_epsilon.empty())
        throw std::invalid_argument("reserved identity must be non-empty");
    if (id_epsilon.size() > kMaxIdentity)
        throw std::invalid_argument("reserved identity too long");
    SetupResult out;
    auto [apk, amsk] = aibe::setup(cp, rng);
    auto [tpk, tmsk] = tibe::setup(cp, n, rng);
    out.mpk = PublicKey{std::move(apk), std::move(tpk), id_epsilon};
    out.irm.msk_a = amsk;
    out.irm.sk_t_epsilon =
        tibe::extract(out.mpk.mpk_t, tmsk,
                      tibe::BitIdentity::from_bytes(id_epsilon, n), rng);
    out.msk = MasterKey{std::move(amsk), std::move(tmsk)};
    return out;
}

// The reserved identity is not extractable: a user holding its testable
// key could open every escrow part and break anonymity for everyone.
inline void require_not_reserved(const PublicKey& mpk,
                                 std::span<const uint8_t> id) {
    if (id.size() == mpk.id_epsilon.size() &&
        std::equal(id.begin(), id.end(), mpk.id_epsilon.begin()))
        throw CryptoError("identity is reserved for the recovery manager");
}

inline UserKey extract(const PublicKey& mpk, const MasterKey& msk,
                       const Bytes& id, XofRng& rng) {
    require_not_reserved(mpk, id);
    if (id.size() > kMaxIdentity)
        throw std::invalid_argument("identity exceeds 255 bytes");
    UserKey sk;
    sk.sk_a = aibe::extract(mpk.mpk_a, msk.msk_a, id);
    sk.sk_t = tibe::extract(mpk.mpk_t, msk.msk_t,
                            tibe::BitIdentity::from_bytes(id, mpk.n()), rng);
    sk.id = id;
    return sk;
}

namespace detail {

inline Bytes serialize_core(const CurveParams& cp, const tibe::CipherCore& c0) {
    ByteWriter w;
    w.raw(serialize_g(cp, c0.c2));
    w.raw(serialize_g(cp, c0.c3));
    return w.take();
}

inline tibe::CipherCore deserialize_core(const CurveParams& cp,
                                         std::span<const uint8_t> data) {
    ByteReader r(data);
    tibe::CipherCore c0;
    c0.c2 = read_g(cp, r);
    c0.c3 = read_g(cp, r);
    r.expect_end();
    return c0;
}

}  // namespace detail

inline Ciphertext encrypt_with(const PublicKey& mpk, const Bytes& id,
                               std::span<const uint8_t> msg,
                               const EncryptRandomness& rnd) {
    require_not_reserved(mpk, id);
    if (id.empty() || id.size() > kMaxIdentity)
        throw std::invalid_argument("identity must be 1..255 bytes");
    if (msg.size() > kMaxMessage)
        throw std::invalid_argument("message exceeds byte-mode bound");
    const CurveParams& cp = mpk.params();
    tibe::BitIdentity v = tibe::BitIdentity::from_bytes(id, mpk.n());
    tibe::Ciphertext tc =
        tibe::encrypt_bytes_with(mpk.mpk_t, v, msg, rnd.t_payload);
    Bytes core_bytes = detail::serialize_core(cp, tc.core);
    aibe::Ciphertext c2 =
        aibe::encrypt_with(mpk.mpk_a, id, core_bytes, rnd.r_wrap);
    tibe::Ciphertext c3 = tibe::encrypt_bytes_with(
        mpk.mpk_t, tibe::BitIdentity::from_bytes(mpk.id_epsilon, mpk.n()), id,
        rnd.t_escrow);
    return Ciphertext(std::move(tc.payload_mask), std::move(c2), std::move(c3));
}

inline Ciphertext encrypt(const PublicKey& mpk, const Bytes& id,
                          std::span<const uint8_t> msg, XofRng& rng) {
    const CurveParams& cp = mpk.params();
    EncryptRandomness rnd{random_scalar(cp, rng), random_scalar(cp, rng),
                          random_scalar(cp, rng)};
    return encrypt_with(mpk, id, msg, rnd);
}

// Opens c2 to the testable core and finishes with the testable decryption
// of (core, c1). The core bytes carry full point validation, so a wrong
// user's key surfaces as malformed-c0 rather than silent garbage.
inline Bytes decrypt(const PublicKey& mpk, const UserKey& sk,
                     const Ciphertext& ct) {
    const CurveParams& cp = mpk.params();
    Bytes core_bytes = aibe::decrypt(mpk.mpk_a, sk.sk_a, ct.c2());
    tibe::CipherCore core;
    try {
        core = detail::deserialize_core(cp, core_bytes);
    } catch (const FormatError&) {
        throw CryptoError("malformed c0: wrong key or corrupt ciphertext");
    }
    tibe::Ciphertext tc;
    tc.core = core;
    tc.mode = tibe::PayloadMode::kBytes;
    tc.payload_mask = ct.c1();
    return tibe::decrypt_bytes(mpk.mpk_t, sk.sk_t, tc);
}

// Recovery: decrypt c3 to a candidate identity, derive its anonymous key,
// open c2, and accept the identity only if the recovered core parses, has
// a non-identity C2 (the degenerate core passes Test for every identity),
// and passes Test. Every failure collapses to ⊥ (nullopt). Touches only
// c2 and c3; never reads c1.
inline std::optional<Bytes> recover(const PublicKey& mpk, const IrmKey& irm,
                                    const Ciphertext& ct) {
    const CurveParams& cp = mpk.params();
    Bytes id = tibe::decrypt_bytes(mpk.mpk_t, irm.sk_t_epsilon, ct.c3());
    aibe::UserKey sk_a = aibe::extract(mpk.mpk_a, irm.msk_a, id);
    Bytes core_bytes = aibe::decrypt(mpk.mpk_a, sk_a, ct.c2());
    tibe::CipherCore core;
    try {
        core = detail::deserialize_core(cp, core_bytes);
    } catch (const FormatError&) {
        return std::nullopt;
    }
    if (core.c2.infinity) return std::nullopt;
    if (!tibe::test(mpk.mpk_t, tibe::BitIdentity::from_bytes(id, mpk.n()),
                    core))
        return std::nullopt;
    return id;
}

// --- Serialization ---

inline Bytes serialize_public_key(const PublicKey& mpk) {
    ByteWriter w;
    w.blob16(aibe::serialize_public_key(mpk.mpk_a));
    w.blob16(tibe::serialize_public_key(mpk.mpk_t));
    w.blob16(mpk.id_epsilon);
    return frame(obj::kPublicKey, w.view());
}

inline PublicKey deserialize_public_key(std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kPublicKey, data);
    ByteReader r(payload);
    PublicKey mpk;
    mpk.mpk_a = aibe::deserialize_public_key(r.blob16());
    mpk.mpk_t = tibe::deserialize_public_key(r.blob16());
    mpk.id_epsilon = r.blob16();
    r.expect_end();
    if (!(mpk.mpk_a.params == mpk.mpk_t.params))
        throw FormatError(DecodeFailure::invalid_value,
                          "sub-scheme parameter mismatch");
    if (mpk.id_epsilon.empty())
        throw FormatError(DecodeFailure::invalid_value,
                          "empty reserved identity");
    return mpk;
}

inline Bytes serialize_master_key(const CurveParams& cp, const MasterKey& msk,
                                  bool include_alpha = true) {
    ByteWriter w;
    w.u8(kSecretMarker);
    w.blob16(serialize_params(cp));
    w.blob16(aibe::serialize_master_key(msk.msk_a));
    w.blob16(tibe::serialize_master_key(cp, msk.msk_t, include_alpha));
    return frame(obj::kMasterKey, w.view());
}

inline std::pair<MasterKey, CurveParams> deserialize_master_key(
    std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kMasterKey, data);
    ByteReader r(payload);
    if (r.u8() != kSecretMarker)
        throw FormatError(DecodeFailure::invalid_value, "missing secret marker");
    CurveParams cp = deserialize_params(r.blob16());
    MasterKey msk;
    msk.msk_a = aibe::deserialize_master_key(cp, r.blob16());
    msk.msk_t = tibe::deserialize_master_key(cp, r.blob16());
    r.expect_end();
    return {std::move(msk), std::move(cp)};
}

inline Bytes serialize_irm_key(const CurveParams& cp, const IrmKey& irm) {
    ByteWriter w;
    w.u8(kSecretMarker);
    w.blob16(serialize_params(cp));
    w.blob16(aibe::serialize_master_key(irm.msk_a));
    w.blob16(tibe::serialize_user_key(cp, irm.sk_t_epsilon));
    return frame(obj::kIrmKey, w.view());
}

inline std::pair<IrmKey, CurveParams> deserialize_irm_key(
    std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kIrmKey, data);
    ByteReader r(payload);
    if (r.u8() != kSecretMarker)
        throw FormatError(DecodeFailure::invalid_value, "missing secret marker");
    CurveParams cp = deserialize_params(r.blob16());
    IrmKey irm;
    irm.msk_a = aibe::deserialize_master_key(cp, r.blob16());
    irm.sk_t_epsilon = tibe::deserialize_user_key(cp, r.blob16());
    r.expect_end();
    return {std::move(irm), std::move(cp)};
}

// User key files embed the public key so decryption needs no other input.
inline Bytes serialize_user_key(const PublicKey& mpk, const UserKey& sk) {
    ByteWriter w;
    w.blob16(serialize_public_key(mpk));
    w.blob16(aibe::serialize_user_key(mpk.params(), sk.sk_a));
    w.blob16(tibe::serialize_user_key(mpk.params(), sk.sk_t));
    w.blob16(sk.id);
    return frame(obj::kUserKey, w.view());
}

inline std::pair<UserKey, PublicKey> deserialize_user_key(
    std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kUserKey, data);
    ByteReader r(payload);
    PublicKey mpk = deserialize_public_key(r.blob16());
    UserKey sk;
    sk.sk_a = aibe::deserialize_user_key(mpk.params(), r.blob16());
    sk.sk_t = tibe::deserialize_user_key(mpk.params(), r.blob16());
    sk.id = r.blob16();
    r.expect_end();
    return {std::move(sk), std::move(mpk)};
}

// c1, c2, c3 as u16-length-prefixed segments; c1 is the byte-mode payload
// framing (u16 plaintext length ‖ mask), c2 and c3 are framed sub-scheme
// ciphertexts.
inline Bytes serialize_ciphertext(const CurveParams& cp, const Ciphertext& ct) {
    ByteWriter c1seg;
    c1seg.blob16(ct.c1());
    ByteWriter w;
    w.blob16(c1seg.view());
    w.blob16(aibe::serialize_ciphertext(cp, ct.c2()));
    w.blob16(tibe::serialize_ciphertext(cp, ct.c3()));
    return frame(obj::kCiphertext, w.view());
}

inline Ciphertext deserialize_ciphertext(const CurveParams& cp,
                                         std::span<const uint8_t> data) {
    Bytes payload = unframe(obj::kCiphertext, data);
    ByteReader r(payload);
    Bytes c1seg = r.blob16();
    Bytes c2seg = r.blob16();
    Bytes c3seg = r.blob16();
    r.expect_end();
    ByteReader c1r(c1seg);
    Bytes c1 = c1r.blob16();
    c1r.expect_end();
    aibe::Ciphertext c2 = aibe::deserialize_ciphertext(cp, c2seg);
    tibe::Ciphertext c3 = tibe::deserialize_ciphertext(cp, c3seg);
    if (c3.mode != tibe::PayloadMode::kBytes)
        throw FormatError(DecodeFailure::invalid_value,
                          "escrow part must be byte mode");
    return Ciphertext(std::move(c1), std::move(c2), std::move(c3));
}

}  // namespace aibeir

#endif  // AIBEIR_AIBEIR_HPP
