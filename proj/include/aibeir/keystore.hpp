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

#ifndef AIBEIR_KEYSTORE_HPP
#define AIBEIR_KEYSTORE_HPP

#include <filesystem>
#include <fstream>

#include "aibeir/hash.hpp"
#include "aibeir/wire.hpp"

namespace aibeir {

inline Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)),
               std::istreambuf_iterator<char>());
    return data;
}

inline void write_file(const std::filesystem::path& path, const Bytes& data) {
    // Create-new-then-rename so a concurrent reader never sees a torn file.
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename into " + path.string());
}

// Directory of framed binary objects named <role>.<hex-digest>.bin.
// Master and recovery keys carry a secret marker inside their payload;
// the keystore itself does not encrypt at rest, so the directory needs
// filesystem-level protection.
class Keystore {
public:
    explicit Keystore(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }

    void ensure_dir() const {
        std::error_code ec;
        std::filesystem::create_directories(root_, ec);
        if (ec || !std::filesystem::is_directory(root_))
            throw IoError("cannot create keystore directory " + root_.string());
    }

    // Stores a framed object under the role; returns the content digest.
    std::string store(std::string_view role, const Bytes& framed) const {
        ensure_dir();
        std::string digest = digest_hex(framed);
        write_file(root_ / file_name(role, digest), framed);
        return digest;
    }

    bool has(std::string_view role) const {
        return !matches(role).empty();
    }

    // Loads the unique object for a role; a missing or ambiguous role is
    // an I/O error.
    Bytes load(std::string_view role) const {
        auto found = matches(role);
        if (found.empty())
            throw IoError("keystore has no '" + std::string(role) + "' object in " +
                          root_.string());
        if (found.size() > 1)
            throw IoError("keystore has multiple '" + std::string(role) +
                          "' objects; remove stale files");
        return read_file(found.front());
    }

private:
    static std::string file_name(std::string_view role,
                                 const std::string& digest) {
        return std::string(role) + "." + digest + ".bin";
    }

    std::vector<std::filesystem::path> matches(std::string_view role) const {
        std::vector<std::filesystem::path> out;
        std::error_code ec;
        std::filesystem::directory_iterator it(root_, ec);
        if (ec) return out;
        std::string prefix = std::string(role) + ".";
        for (const auto& entry : it) {
            if (!entry.is_regular_file()) continue;
            std::string name = entry.path().filename().string();
            if (name.size() > prefix.size() + 4 &&
                name.compare(0, prefix.size(), prefix) == 0 &&
                name.compare(name.size() - 4, 4, ".bin") == 0)
                out.push_back(entry.path());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::filesystem::path root_;
};

}  // namespace aibeir

#endif  // AIBEIR_KEYSTORE_HPP
