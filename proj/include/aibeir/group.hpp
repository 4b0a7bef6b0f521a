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

#ifndef AIBEIR_GROUP_HPP
#define AIBEIR_GROUP_HPP

#include <optional>

#include "aibeir/params.hpp"

namespace aibeir {

// Exponent in Z_p. Callers keep values reduced mod p; the samplers below
// guarantee it.
using Scalar = BigInt;

// Point on E: y^2 = x^3 + x over F_q, affine or the point at infinity.
struct GroupElement {
    bool infinity = true;
    BigInt x = 0;
    BigInt y = 0;

    static GroupElement identity() { return GroupElement{}; }

    static GroupElement affine(BigInt px, BigInt py) {
        return GroupElement{false, std::move(px), std::move(py)};
    }

    bool operator==(const GroupElement& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

// Element of F_q2 = F_q[i]/(i^2 + 1), re + im·i. Target-group values are
// the subset of order dividing p (the unitary elements with norm 1).
struct GtElement {
    BigInt re = 1;
    BigInt im = 0;

    static GtElement one() { return GtElement{1, 0}; }

    bool is_one() const { return re == 1 && im == 0; }

    bool operator==(const GtElement& o) const {
        return re == o.re && im == o.im;
    }
};

namespace fq2 {

inline GtElement mul(const CurveParams& cp, const GtElement& a,
                     const GtElement& b) {
    // (a.re + a.im i)(b.re + b.im i) with i^2 = −1
    return GtElement{mod(a.re * b.re - a.im * b.im, cp.q),
                     mod(a.re * b.im + a.im * b.re, cp.q)};
}

inline GtElement sqr(const CurveParams& cp, const GtElement& a) {
    return GtElement{mod(a.re * a.re - a.im * a.im, cp.q),
                     mod(2 * a.re * a.im, cp.q)};
}

inline GtElement conj(const CurveParams& cp, const GtElement& a) {
    return GtElement{a.re, mod(-a.im, cp.q)};
}

inline BigInt norm(const CurveParams& cp, const GtElement& a) {
    return mod(a.re * a.re + a.im * a.im, cp.q);
}

inline GtElement inv(const CurveParams& cp, const GtElement& a) {
    BigInt n = norm(cp, a);
    if (n == 0) throw std::domain_error("inverse of zero in F_q2");
    BigInt ninv = mod_inv(n, cp.q);
    return GtElement{mod(a.re * ninv, cp.q), mod(-a.im * ninv, cp.q)};
}

inline GtElement pow(const CurveParams& cp, const GtElement& base,
                     const BigInt& e) {
    GtElement acc = GtElement::one();
    if (e == 0) return acc;
    for (size_t i = bit_length(e); i-- > 0;) {
        acc = sqr(cp, acc);
        if (bit_test(e, i)) acc = mul(cp, acc, base);
    }
    return acc;
}

}  // namespace fq2

// --- Target group operations (unitary subgroup of F_q2^*) ---

inline GtElement gt_mul(const CurveParams& cp, const GtElement& a,
                        const GtElement& b) {
    return fq2::mul(cp, a, b);
}

// Order-p elements are unitary, so the inverse is the conjugate.
inline GtElement gt_inv(const CurveParams& cp, const GtElement& a) {
    return fq2::conj(cp, a);
}

inline GtElement gt_pow(const CurveParams& cp, const GtElement& a,
                        const Scalar& k) {
    return fq2::pow(cp, a, k);
}

// Uniform element of the order-p target subgroup, via a random unit.
inline GtElement gt_random(const CurveParams& cp, XofRng& rng) {
    for (;;) {
        GtElement z{rand_below(rng, cp.q), rand_below(rng, cp.q)};
        if (fq2::norm(cp, z) == 0) continue;
        // Clear everything but the order-p part: (q^2−1)/p exponent.
        GtElement u = fq2::mul(cp, fq2::conj(cp, z), fq2::inv(cp, z));
        GtElement g = fq2::pow(cp, u, cp.cofactor);
        if (!g.is_one()) return g;
    }
}

// --- Curve group operations ---

inline bool is_on_curve(const CurveParams& cp, const GroupElement& P) {
    if (P.infinity) return true;
    if (P.x < 0 || P.x >= cp.q || P.y < 0 || P.y >= cp.q) return false;
    BigInt lhs = mod(P.y * P.y, cp.q);
    BigInt rhs = mod(P.x * P.x * P.x + P.x, cp.q);
    return lhs == rhs;
}

inline GroupElement point_neg(const CurveParams& cp, const GroupElement& P) {
    if (P.infinity) return P;
    return GroupElement::affine(P.x, mod(-P.y, cp.q));
}

inline GroupElement point_add(const CurveParams& cp, const GroupElement& P,
                              const GroupElement& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    BigInt lambda;
    if (P.x == Q.x) {
        if (mod(P.y + Q.y, cp.q) == 0) return GroupElement::identity();
        // Tangent at P; curve is y^2 = x^3 + x so dy/dx = (3x^2 + 1)/(2y).
        lambda = mod_mul(3 * P.x * P.x + 1, mod_inv(2 * P.y, cp.q), cp.q);
    } else {
        lambda = mod_mul(Q.y - P.y, mod_inv(Q.x - P.x, cp.q), cp.q);
    }
    BigInt x3 = mod(lambda * lambda - P.x - Q.x, cp.q);
    BigInt y3 = mod(lambda * (P.x - x3) - P.y, cp.q);
    return GroupElement::affine(x3, y3);
}

inline GroupElement point_double(const CurveParams& cp, const GroupElement& P) {
    return point_add(cp, P, P);
}

namespace detail {

// Jacobian coordinates (X, Y, Z) with x = X/Z^2, y = Y/Z^3; Z = 0 marks
// the identity. Keeps the double-and-add ladder inversion-free.
struct JacPoint {
    BigInt X = 1, Y = 1, Z = 0;
};

inline JacPoint jac_double(const CurveParams& cp, const JacPoint& P) {
    if (P.Z == 0 || P.Y == 0) return JacPoint{};
    BigInt Y2 = mod(P.Y * P.Y, cp.q);
    BigInt S = mod(4 * P.X * Y2, cp.q);
    BigInt Z2 = mod(P.Z * P.Z, cp.q);
    // M = 3X^2 + aZ^4 with a = 1.
    BigInt M = mod(3 * P.X * P.X + Z2 * Z2, cp.q);
    BigInt X3 = mod(M * M - 2 * S, cp.q);
    BigInt Y3 = mod(M * (S - X3) - 8 * Y2 * Y2, cp.q);
    BigInt Z3 = mod(2 * P.Y * P.Z, cp.q);
    return JacPoint{X3, Y3, Z3};
}

// Mixed addition with an affine second operand.
inline JacPoint jac_add_affine(const CurveParams& cp, const JacPoint& P,
                               const GroupElement& Q) {
    if (Q.infinity) return P;
    if (P.Z == 0) return JacPoint{Q.x, Q.y, 1};
    BigInt Z2 = mod(P.Z * P.Z, cp.q);
    BigInt U2 = mod(Q.x * Z2, cp.q);
    BigInt S2 = mod(Q.y * Z2 * P.Z, cp.q);
    BigInt H = mod(U2 - P.X, cp.q);
    BigInt R = mod(S2 - P.Y, cp.q);
    if (H == 0) {
        if (R == 0) return jac_double(cp, P);
        return JacPoint{};
    }
    BigInt H2 = mod(H * H, cp.q);
    BigInt H3 = mod(H2 * H, cp.q);
    BigInt XH2 = mod(P.X * H2, cp.q);
    BigInt X3 = mod(R * R - H3 - 2 * XH2, cp.q);
    BigInt Y3 = mod(R * (XH2 - X3) - P.Y * H3, cp.q);
    BigInt Z3 = mod(H * P.Z, cp.q);
    return JacPoint{X3, Y3, Z3};
}

inline GroupElement jac_to_affine(const CurveParams& cp, const JacPoint& P) {
    if (P.Z == 0) return GroupElement::identity();
    BigInt zinv = mod_inv(P.Z, cp.q);
    BigInt zinv2 = mod(zinv * zinv, cp.q);
    return GroupElement::affine(mod(P.X * zinv2, cp.q),
                                mod(P.Y * zinv2 * zinv, cp.q));
}

}  // namespace detail

// Double-and-add for arbitrary non-negative k (not reduced mod p); used
// for cofactor clearing and subgroup checks as well as scalar multiples.
inline GroupElement point_mul_raw(const CurveParams& cp, const GroupElement& P,
                                  const BigInt& k) {
    if (k < 0) throw std::invalid_argument("negative multiplier");
    if (k == 0 || P.infinity) return GroupElement::identity();
    detail::JacPoint acc;
    for (size_t i = bit_length(k); i-- > 0;) {
        acc = detail::jac_double(cp, acc);
        if (bit_test(k, i)) acc = detail::jac_add_affine(cp, acc, P);
    }
    return detail::jac_to_affine(cp, acc);
}

inline GroupElement point_mul(const CurveParams& cp, const GroupElement& P,
                              const Scalar& k) {
    return point_mul_raw(cp, P, mod(k, cp.p));
}

inline bool in_subgroup(const CurveParams& cp, const GroupElement& P) {
    if (!is_on_curve(cp, P)) return false;
    return point_mul_raw(cp, P, cp.p).infinity;
}

// --- Sampling ---

inline Scalar random_scalar(const CurveParams& cp, XofRng& rng) {
    return rand_below(rng, cp.p);
}

inline Scalar random_nonzero_scalar(const CurveParams& cp, XofRng& rng) {
    return rand_range(rng, 1, cp.p);
}

// Square root mod q for q ≡ 3 (mod 4): a^((q+1)/4), valid iff a is square.
inline std::optional<BigInt> sqrt_mod_q(const CurveParams& cp, const BigInt& a) {
    BigInt r = mod_exp(a, (cp.q + 1) / 4, cp.q);
    if (mod_mul(r, r, cp.q) != mod(a, cp.q)) return std::nullopt;
    return r;
}

// Try-and-increment hash to the order-p subgroup: derive an x candidate
// from (tag, msg, counter), solve the curve equation, clear the cofactor.
// Never returns the identity.
inline GroupElement hash_to_group(std::string_view tag,
                                  std::span<const uint8_t> msg,
                                  const CurveParams& cp) {
    for (uint32_t counter = 0; counter < 65536; ++counter) {
        Shake256 h;
        h.absorb("AIBE-H2C").absorb_u8(0x00);
        h.absorb_u16(static_cast<uint16_t>(tag.size()));
        h.absorb(tag);
        h.absorb(msg);
        h.absorb_u16(static_cast<uint16_t>(counter));
        // 16 extra bytes make the reduction mod q statistically uniform.
        BigInt x = mod(from_bytes_be(h.squeeze(cp.field_width + 16)), cp.q);
        BigInt rhs = mod(x * x * x + x, cp.q);
        auto y = sqrt_mod_q(cp, rhs);
        if (!y) continue;
        GroupElement P = point_mul_raw(cp, GroupElement::affine(x, *y),
                                       cp.cofactor);
        if (!P.infinity) return P;
    }
    throw CryptoError("hash_to_group: counter space exhausted");
}

inline GroupElement hash_to_group(std::string_view tag, std::string_view msg,
                                  const CurveParams& cp) {
    return hash_to_group(
        tag,
        std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(msg.data()),
                                 msg.size()),
        cp);
}

// Canonical base point shared by samplers that need a fixed generator.
inline GroupElement base_point(const CurveParams& cp) {
    return hash_to_group("AIBE-BASE", "G", cp);
}

// Uniform subgroup element with the discrete log left behind.
inline GroupElement random_point(const CurveParams& cp, XofRng& rng) {
    return point_mul(cp, base_point(cp), random_scalar(cp, rng));
}

// --- Serialization ---
// Identity: single 0x00 byte. Affine: 0x04 ‖ x ‖ y, fixed field_width each.

inline Bytes serialize_g(const CurveParams& cp, const GroupElement& P) {
    if (P.infinity) return Bytes{0x00};
    ByteWriter w;
    w.u8(0x04);
    w.raw(to_bytes_be(P.x, cp.field_width));
    w.raw(to_bytes_be(P.y, cp.field_width));
    return w.take();
}

inline GroupElement read_g(const CurveParams& cp, ByteReader& r) {
    uint8_t tag = r.u8();
    if (tag == 0x00) return GroupElement::identity();
    if (tag != 0x04)
        throw FormatError(DecodeFailure::invalid_value, "bad point tag");
    BigInt x = from_bytes_be(r.raw(cp.field_width));
    BigInt y = from_bytes_be(r.raw(cp.field_width));
    GroupElement P = GroupElement::affine(std::move(x), std::move(y));
    if (!is_on_curve(cp, P))
        throw FormatError(DecodeFailure::not_on_curve, "point not on curve");
    if (!point_mul_raw(cp, P, cp.p).infinity)
        throw FormatError(DecodeFailure::not_in_subgroup,
                          "point outside prime subgroup");
    return P;
}

inline GroupElement deserialize_g(const CurveParams& cp,
                                  std::span<const uint8_t> data) {
    ByteReader r(data);
    GroupElement P = read_g(cp, r);
    r.expect_end();
    return P;
}

inline Bytes serialize_gt(const CurveParams& cp, const GtElement& z) {
    ByteWriter w;
    w.raw(to_bytes_be(z.re, cp.field_width));
    w.raw(to_bytes_be(z.im, cp.field_width));
    return w.take();
}

inline GtElement read_gt(const CurveParams& cp, ByteReader& r) {
    BigInt re = from_bytes_be(r.raw(cp.field_width));
    BigInt im = from_bytes_be(r.raw(cp.field_width));
    GtElement z{std::move(re), std::move(im)};
    if (z.re >= cp.q || z.im >= cp.q)
        throw FormatError(DecodeFailure::invalid_value,
                          "field element exceeds modulus");
    if (fq2::norm(cp, z) == 0)
        throw FormatError(DecodeFailure::invalid_value, "zero norm");
    if (!fq2::pow(cp, z, cp.p).is_one())
        throw FormatError(DecodeFailure::not_in_subgroup,
                          "element outside order-p subgroup");
    return z;
}

inline GtElement deserialize_gt(const CurveParams& cp,
                                std::span<const uint8_t> data) {
    ByteReader r(data);
    GtElement z = read_gt(cp, r);
    r.expect_end();
    return z;
}

}  // namespace aibeir

#endif  // AIBEIR_GROUP_HPP
