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

#ifndef AIBEIR_BIGINT_HPP
#define AIBEIR_BIGINT_HPP

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

#include "aibeir/bytes.hpp"
#include "aibeir/hash.hpp"

namespace aibeir {

// Stack-allocated big integer. 1024 bits of magnitude is enough for every
// quantity in this library: base fields stay below 512 bits (enforced by
// generate_params) and the widest intermediate is q^2 in the final
// exponentiation exponent.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    1024, 1024, boost::multiprecision::signed_magnitude,
    boost::multiprecision::unchecked, void>>;

inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline BigInt mod_mul(const BigInt& a, const BigInt& b, const BigInt& m) {
    return mod(a * b, m);
}

inline BigInt mod_exp(const BigInt& base, const BigInt& exp, const BigInt& m) {
    return boost::multiprecision::powm(mod(base, m), exp, m);
}

// Inverse modulo a prime, extended Euclid. Much cheaper than the Fermat
// route at the field sizes used here.
inline BigInt mod_inv(const BigInt& a, const BigInt& prime) {
    BigInt r = mod(a, prime);
    if (r == 0) throw std::domain_error("inverse of zero");
    BigInt inv = boost::integer::mod_inverse(r, prime);
    if (inv == 0) throw std::domain_error("not invertible");
    return inv;
}

inline size_t bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return boost::multiprecision::msb(n) + 1;
}

inline bool bit_test(const BigInt& n, size_t i) {
    return boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
}

// Big-endian, fixed width; throws if n does not fit.
inline Bytes to_bytes_be(const BigInt& n, size_t width) {
    if (n < 0) throw std::invalid_argument("negative integer");
    Bytes out(width, 0);
    BigInt v = n;
    for (size_t i = 0; i < width; ++i) {
        out[width - 1 - i] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
    if (v != 0) throw std::invalid_argument("integer too wide for encoding");
    return out;
}

// Big-endian, minimal width (empty for zero).
inline Bytes to_bytes_be(const BigInt& n) {
    size_t width = (bit_length(n) + 7) / 8;
    return to_bytes_be(n, width);
}

inline BigInt from_bytes_be(std::span<const uint8_t> bytes) {
    BigInt v = 0;
    for (uint8_t b : bytes) v = (v << 8) | b;
    return v;
}

namespace detail {

inline bool miller_rabin_witness(const BigInt& n, const BigInt& a,
                                 const BigInt& d, size_t s) {
    BigInt x = mod_exp(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (size_t i = 1; i < s; ++i) {
        x = mod_mul(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace detail

// Deterministic Miller-Rabin: the twelve bases proving primality below
// 3.3e24, plus 24 bases derived from n itself, so the verdict is a pure
// function of n.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                       31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                       73, 79, 83, 89, 97, 101, 103, 107, 109,
                                       113, 127, 131, 137, 139, 149, 151};
    for (int sp : small_primes) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    BigInt d = n - 1;
    size_t s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    static const int fixed_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int a : fixed_bases) {
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    if (bit_length(n) > 80) {
        XofRng witness_rng(xof("AIBE-MR", to_bytes_be(n), 32));
        size_t width = (bit_length(n) + 7) / 8;
        for (int i = 0; i < 24; ++i) {
            BigInt a = mod(from_bytes_be(witness_rng.bytes(width + 8)), n - 3) + 2;
            if (detail::miller_rabin_witness(n, a, d, s)) return false;
        }
    }
    return true;
}

// Uniform in [0, bound) by rejection sampling on bound's bit width.
inline BigInt rand_below(XofRng& rng, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("rand_below: empty range");
    size_t bits = bit_length(bound);
    size_t width = (bits + 7) / 8;
    size_t excess = width * 8 - bits;
    for (;;) {
        Bytes raw = rng.bytes(width);
        raw[0] &= static_cast<uint8_t>(0xff >> excess);
        BigInt v = from_bytes_be(raw);
        if (v < bound) return v;
    }
}

inline BigInt rand_range(XofRng& rng, const BigInt& lo, const BigInt& hi) {
    return lo + rand_below(rng, hi - lo);
}

}  // namespace aibeir

#endif  // AIBEIR_BIGINT_HPP
