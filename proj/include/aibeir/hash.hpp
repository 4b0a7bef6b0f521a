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

#ifndef AIBEIR_HASH_HPP
#define AIBEIR_HASH_HPP

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string_view>

#include "aibeir/bytes.hpp"

namespace aibeir {

// Incremental SHAKE256 sponge. All variable-length hashing in this library
// (key derivation, mask streams, hash-to-curve candidates, deterministic
// randomness) goes through this one primitive with distinct domain tags.
class Shake256 {
public:
    Shake256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_shake256(), nullptr) != 1)
            throw std::runtime_error("SHAKE256 init failed");
    }

    Shake256& absorb(std::span<const uint8_t> data) {
        if (!data.empty() &&
            EVP_DigestUpdate(ctx_.get(), data.data(), data.size()) != 1)
            throw std::runtime_error("SHAKE256 update failed");
        return *this;
    }

    Shake256& absorb(std::string_view s) {
        return absorb(std::span<const uint8_t>(
            reinterpret_cast<const uint8_t*>(s.data()), s.size()));
    }

    // One-byte values, used for tag separators and counters.
    Shake256& absorb_u8(uint8_t v) {
        return absorb(std::span<const uint8_t>(&v, 1));
    }

    Shake256& absorb_u16(uint16_t v) {
        const uint8_t be[2] = {static_cast<uint8_t>(v >> 8),
                               static_cast<uint8_t>(v & 0xff)};
        return absorb(std::span<const uint8_t>(be, 2));
    }

    Shake256& absorb_u64(uint64_t v) {
        uint8_t be[8];
        for (int i = 7; i >= 0; --i) {
            be[i] = static_cast<uint8_t>(v & 0xff);
            v >>= 8;
        }
        return absorb(std::span<const uint8_t>(be, 8));
    }

    // Consumes the sponge; the object must not be reused afterwards.
    Bytes squeeze(size_t outlen) {
        Bytes out(outlen);
        if (outlen == 0) return out;
        if (EVP_DigestFinalXOF(ctx_.get(), out.data(), outlen) != 1)
            throw std::runtime_error("SHAKE256 final failed");
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

// tag ‖ 0x00 ‖ data, squeezed to outlen. The 0x00 separator keeps tags
// that are prefixes of each other from colliding.
inline Bytes xof(std::string_view tag, std::span<const uint8_t> data,
                 size_t outlen) {
    Shake256 h;
    h.absorb(tag).absorb_u8(0x00).absorb(data);
    return h.squeeze(outlen);
}

// Short content digest used for file names and transcript records.
inline std::string digest_hex(std::span<const uint8_t> data) {
    return to_hex(xof("AIBE-DIGEST", data, 8));
}

// Deterministic random stream: SHAKE256 in counter mode over a 32-byte
// seed. Forking derives an independent stream, so parallel consumers
// (game trials, sub-setups) can each own a private generator while the
// whole computation stays a pure function of the root seed.
class XofRng {
public:
    explicit XofRng(Bytes seed) : seed_(std::move(seed)) {}

    static XofRng from_label(std::string_view label) {
        return XofRng(xof("AIBE-SEED", bytes_of(label), 32));
    }

    XofRng fork(uint64_t index) const {
        Shake256 h;
        h.absorb("AIBE-FORK").absorb_u8(0x00);
        h.absorb(std::span<const uint8_t>(seed_.data(), seed_.size()));
        h.absorb_u64(index);
        return XofRng(h.squeeze(32));
    }

    void fill(std::span<uint8_t> out) {
        size_t off = 0;
        while (off < out.size()) {
            if (pos_ == buf_.size()) refill();
            size_t take = std::min(out.size() - off, buf_.size() - pos_);
            std::copy(buf_.begin() + pos_, buf_.begin() + pos_ + take,
                      out.begin() + off);
            pos_ += take;
            off += take;
        }
    }

    Bytes bytes(size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }

    uint8_t byte() {
        uint8_t b;
        fill(std::span<uint8_t>(&b, 1));
        return b;
    }

    uint64_t u64() {
        uint8_t b[8];
        fill(std::span<uint8_t>(b, 8));
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = v << 8 | b[i];
        return v;
    }

    // Uniform in [0, bound) by rejection over bound's bit width.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below(0)");
        uint64_t mask = ~uint64_t{0};
        while (bound <= (mask >> 1)) mask >>= 1;
        for (;;) {
            uint64_t v = u64() & mask;
            if (v < bound) return v;
        }
    }

    bool bit() { return (byte() & 1) != 0; }

private:
    void refill() {
        Shake256 h;
        h.absorb("AIBE-RNG").absorb_u8(0x00);
        h.absorb(std::span<const uint8_t>(seed_.data(), seed_.size()));
        h.absorb_u64(counter_++);
        buf_ = h.squeeze(128);
        pos_ = 0;
    }

    Bytes seed_;
    Bytes buf_;
    size_t pos_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace aibeir

#endif  // AIBEIR_HASH_HPP
