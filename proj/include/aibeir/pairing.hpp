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

#ifndef AIBEIR_PAIRING_HPP
#define AIBEIR_PAIRING_HPP

#include "aibeir/group.hpp"

namespace aibeir {

namespace detail {

// One chord-and-tangent step: advances T to T+B (doubling when T == B)
// and evaluates the line through T and B at the distorted point
// φ(Q) = (−x_Q, i·y_Q). The slope is computed once and shared between the
// line value and the point update. Vertical lines evaluate into F_q^* and
// are erased by the final exponentiation, so they contribute 1.
struct MillerStep {
    GroupElement next;
    GtElement line;
};

inline MillerStep miller_step(const CurveParams& cp, const GroupElement& T,
                              const GroupElement& B, const GroupElement& Q) {
    if (T.infinity) return {B, GtElement::one()};
    if (B.infinity) return {T, GtElement::one()};
    BigInt lambda;
    if (T == B) {
        if (T.y == 0) return {GroupElement::identity(), GtElement::one()};
        lambda = mod_mul(3 * T.x * T.x + 1, mod_inv(2 * T.y, cp.q), cp.q);
    } else {
        if (T.x == B.x) return {GroupElement::identity(), GtElement::one()};
        lambda = mod_mul(B.y - T.y, mod_inv(B.x - T.x, cp.q), cp.q);
    }
    BigInt x3 = mod(lambda * lambda - T.x - B.x, cp.q);
    BigInt y3 = mod(lambda * (T.x - x3) - T.y, cp.q);
    // l(φ(Q)) = i·y_Q − y_T − λ(−x_Q − x_T); the imaginary part is y_Q ≠ 0
    // for points of odd order, so the line value never vanishes.
    GtElement line{mod(lambda * (Q.x + T.x) - T.y, cp.q), Q.y};
    return {GroupElement::affine(std::move(x3), std::move(y3)), line};
}

// f^((q^2−1)/p) = (conj(f)·f^−1)^cofactor, using a^q = conj(a) in F_q(i).
inline GtElement final_exponentiation(const CurveParams& cp, const GtElement& f) {
    GtElement g = fq2::mul(cp, fq2::conj(cp, f), fq2::inv(cp, f));
    return fq2::pow(cp, g, cp.cofactor);
}

}  // namespace detail

// Reduced Tate pairing composed with the distortion map:
//   e(P, Q) = f_{p,P}(φ(Q))^((q^2−1)/p),  φ(x, y) = (−x, i·y).
// Miller's double-and-add over the bits of p; denominators are eliminated
// because embedding degree 2 puts every vertical-line value in F_q^*.
// Bilinear, symmetric, non-degenerate on the order-p subgroup; identity
// inputs map to the unit of the target group.
inline GtElement pairing(const CurveParams& cp, const GroupElement& P,
                         const GroupElement& Q) {
    if (P.infinity || Q.infinity) return GtElement::one();
    GtElement f = GtElement::one();
    GroupElement T = P;
    for (size_t i = bit_length(cp.p) - 1; i-- > 0;) {
        auto dbl = detail::miller_step(cp, T, T, Q);
        f = fq2::mul(cp, fq2::sqr(cp, f), dbl.line);
        T = dbl.next;
        if (bit_test(cp.p, i)) {
            auto add = detail::miller_step(cp, T, P, Q);
            f = fq2::mul(cp, f, add.line);
            T = add.next;
        }
    }
    return detail::final_exponentiation(cp, f);
}

}  // namespace aibeir

#endif  // AIBEIR_PAIRING_HPP
