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

// Test-only oracles: brute-force recomputations that stay independent of
// the implementation paths they check.

#ifndef AIBEIR_TEST_ORACLES_HPP
#define AIBEIR_TEST_ORACLES_HPP

#include <cmath>
#include <map>
#include <vector>

#include "aibeir/group.hpp"

namespace aibeir::testing {

// Fixed parameter sets shared across suites, generated once per process.
inline const CurveParams& toy_params() {
    static const CurveParams cp = generate_params(8, bytes_of("toy-fixture"));
    return cp;
}

inline const CurveParams& desk_params() {
    static const CurveParams cp = generate_params(64, bytes_of("desk-fixture"));
    return cp;
}

// All p multiples of G by repeated addition: 0, G, 2G, ... (p-1)G. Checks
// scalar multiplication and subgroup order without going through the
// double-and-add ladder.
inline std::vector<GroupElement> enumerate_subgroup(const CurveParams& cp,
                                                    const GroupElement& G) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(cp.p));
    GroupElement acc = GroupElement::identity();
    for (BigInt i = 0; i < cp.p; ++i) {
        out.push_back(acc);
        acc = point_add(cp, acc, G);
    }
    return out;
}

// Exhaustive discrete log against G; only sensible at toy sizes.
inline uint64_t brute_force_dlog(const CurveParams& cp, const GroupElement& G,
                                 const GroupElement& P) {
    GroupElement acc = GroupElement::identity();
    for (uint64_t i = 0;; ++i) {
        if (acc == P) return i;
        acc = point_add(cp, acc, G);
        if (BigInt(i) > cp.p) throw std::logic_error("dlog not found");
    }
}

// Trial-division primality for cross-checking Miller-Rabin at small sizes.
inline bool trial_division_prime(const BigInt& n) {
    if (n < 2) return false;
    for (BigInt d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// 99% binomial acceptance: |wins/trials - expected| within the half-width
// the estimator itself reports.
inline bool within_binomial_99(uint64_t wins, uint64_t trials,
                               double expected) {
    double phat = static_cast<double>(wins) / static_cast<double>(trials);
    double bound = 2.576 * std::sqrt(phat * (1.0 - phat) /
                                     static_cast<double>(trials));
    return std::abs(phat - expected) <= bound;
}

// A toy-sized seed whose first scalar draw is zero, for forcing the r = 0
// key-extraction edge through the ordinary rng path.
inline XofRng rng_with_zero_first_scalar(const CurveParams& cp) {
    for (uint64_t s = 0;; ++s) {
        XofRng candidate = XofRng::from_label("zero-scalar-" + std::to_string(s));
        XofRng probe = candidate;
        if (random_scalar(cp, probe) == 0) return candidate;
        if (s > 100000) throw std::logic_error("no zero-scalar seed found");
    }
}

}  // namespace aibeir::testing

#endif  // AIBEIR_TEST_ORACLES_HPP
