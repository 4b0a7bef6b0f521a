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

#ifndef AIBEIR_WIRE_HPP
#define AIBEIR_WIRE_HPP

#include <cstdint>
#include <span>
#include <string_view>

#include "aibeir/bigint.hpp"
#include "aibeir/bytes.hpp"
#include "aibeir/errors.hpp"

namespace aibeir {

// Every persistent object is framed as
//   "AIBE" ‖ version ‖ object byte ‖ payload
// with multi-byte integers big-endian and variable fields u16-length-prefixed.
inline constexpr std::string_view kMagic = "AIBE";
inline constexpr uint8_t kVersion = 0x01;

namespace obj {
inline constexpr uint8_t kCurveParams = 0x00;
inline constexpr uint8_t kTibePublicKey = 0x10;
inline constexpr uint8_t kTibeMasterKey = 0x11;
inline constexpr uint8_t kTibeUserKey = 0x12;
inline constexpr uint8_t kTibeCiphertext = 0x13;
inline constexpr uint8_t kAibePublicKey = 0x20;
inline constexpr uint8_t kAibeMasterKey = 0x21;
inline constexpr uint8_t kAibeUserKey = 0x22;
inline constexpr uint8_t kAibeCiphertext = 0x23;
inline constexpr uint8_t kCiphertext = 0x30;
inline constexpr uint8_t kPublicKey = 0x31;
inline constexpr uint8_t kMasterKey = 0x32;
inline constexpr uint8_t kUserKey = 0x33;
inline constexpr uint8_t kIrmKey = 0x34;
}  // namespace obj

// Marker carried in the payload of master/IRM key objects.
inline constexpr uint8_t kSecretMarker = 0x53;  // 'S'

class ByteWriter {
public:
    void u8(uint8_t v) { out_.push_back(v); }

    void u16(uint16_t v) {
        out_.push_back(static_cast<uint8_t>(v >> 8));
        out_.push_back(static_cast<uint8_t>(v & 0xff));
    }

    void raw(std::span<const uint8_t> data) {
        out_.insert(out_.end(), data.begin(), data.end());
    }

    // u16 length prefix, then the bytes.
    void blob16(std::span<const uint8_t> data) {
        if (data.size() > 0xffff)
            throw std::invalid_argument("blob exceeds u16 length");
        u16(static_cast<uint16_t>(data.size()));
        raw(data);
    }

    // Minimal big-endian magnitude, u16-length-prefixed.
    void bigint16(const BigInt& n) { blob16(to_bytes_be(n)); }

    Bytes take() { return std::move(out_); }
    const Bytes& view() const { return out_; }

private:
    Bytes out_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }

    std::span<const uint8_t> raw(size_t n) {
        need(n);
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    Bytes blob16() {
        size_t n = u16();
        auto s = raw(n);
        return Bytes(s.begin(), s.end());
    }

    // Rejects non-minimal encodings so every integer has one byte form.
    BigInt bigint16() {
        Bytes b = blob16();
        if (!b.empty() && b[0] == 0)
            throw FormatError(DecodeFailure::invalid_value,
                              "non-minimal integer encoding");
        return from_bytes_be(b);
    }

    size_t remaining() const { return data_.size() - pos_; }

    void expect_end() const {
        if (remaining() != 0)
            throw FormatError(DecodeFailure::malformed_length,
                              "trailing bytes after object");
    }

private:
    void need(size_t n) const {
        if (data_.size() - pos_ < n)
            throw FormatError(DecodeFailure::malformed_length,
                              "truncated input");
    }

    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

inline Bytes frame(uint8_t object_byte, std::span<const uint8_t> payload) {
    ByteWriter w;
    w.raw(std::span<const uint8_t>(
        reinterpret_cast<const uint8_t*>(kMagic.data()), kMagic.size()));
    w.u8(kVersion);
    w.u8(object_byte);
    w.raw(payload);
    return w.take();
}

// Strips the frame, checking magic/version and the expected object byte.
inline Bytes unframe(uint8_t expected_object, std::span<const uint8_t> data) {
    ByteReader r(data);
    auto magic = r.raw(kMagic.size());
    if (!std::equal(magic.begin(), magic.end(), kMagic.begin()))
        throw FormatError(DecodeFailure::bad_magic, "missing AIBE magic");
    if (r.u8() != kVersion)
        throw FormatError(DecodeFailure::bad_version, "unsupported version");
    uint8_t obj = r.u8();
    if (obj != expected_object)
        throw FormatError(DecodeFailure::bad_object,
                          "unexpected object type " + std::to_string(obj));
    auto payload = r.raw(r.remaining());
    return Bytes(payload.begin(), payload.end());
}

// Peeks the object byte of a framed blob without consuming the payload.
inline uint8_t framed_object_type(std::span<const uint8_t> data) {
    ByteReader r(data);
    auto magic = r.raw(kMagic.size());
    if (!std::equal(magic.begin(), magic.end(), kMagic.begin()))
        throw FormatError(DecodeFailure::bad_magic, "missing AIBE magic");
    if (r.u8() != kVersion)
        throw FormatError(DecodeFailure::bad_version, "unsupported version");
    return r.u8();
}

}  // namespace aibeir

#endif  // AIBEIR_WIRE_HPP
