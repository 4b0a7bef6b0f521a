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

// aibeir: key management and file encryption over the AIBEIR scheme.
//
// Exit codes: 0 success, 1 usage error, 2 cryptographic failure (reserved
// identity, wrong key, recovery ⊥), 3 I/O or format error.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>

#include "aibeir/aibeir.hpp"
#include "aibeir/keystore.hpp"

namespace {

using namespace aibeir;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCryptoFailure = 2;
constexpr int kIoFormat = 3;

Bytes system_seed() {
    std::random_device rd;
    Bytes seed(32);
    for (auto& b : seed) b = static_cast<uint8_t>(rd());
    return seed;
}

PublicKey load_mpk(const Keystore& ks) {
    return deserialize_public_key(ks.load("mpk"));
}

int run_setup(unsigned bits, size_t n_bits, const std::string& irm_id,
              const std::string& keystore_dir, const std::string& seed_hex,
              const std::string& split_irm_dir) {
    if (irm_id.empty())
        throw std::invalid_argument("--irm-id must be non-empty");
    Bytes seed;
    if (seed_hex.empty()) {
        seed = system_seed();
    } else {
        try {
            seed = from_hex(seed_hex);
        } catch (const FormatError&) {
            throw std::invalid_argument("--seed must be an even-length hex string");
        }
    }
    CurveParams params = generate_params(bits, seed);
    XofRng rng(xof("AIBE-CLI-SETUP", seed, 32));
    SetupResult keys = setup(params, n_bits, bytes_of(irm_id), rng);

    Keystore ks{keystore_dir};
    std::cout << "mpk " << ks.store("mpk", serialize_public_key(keys.mpk))
              << "\n";
    std::cout << "msk " << ks.store("msk", serialize_master_key(params, keys.msk))
              << "\n";
    Keystore irm_ks{split_irm_dir.empty() ? keystore_dir : split_irm_dir};
    std::cout << "irm " << irm_ks.store("irm", serialize_irm_key(params, keys.irm))
              << "\n";
    return kOk;
}

int run_extract(const std::string& id, const std::string& keystore_dir,
                const std::string& out_path) {
    Keystore ks{keystore_dir};
    PublicKey mpk = load_mpk(ks);
    auto [msk, params] = deserialize_master_key(ks.load("msk"));
    XofRng rng(system_seed());
    UserKey sk = extract(mpk, msk, bytes_of(id), rng);
    Bytes framed = serialize_user_key(mpk, sk);
    write_file(out_path, framed);
    std::cout << "userkey " << digest_hex(framed) << "\n";
    return kOk;
}

int run_encrypt(const std::string& id, const std::string& in_path,
                const std::string& out_path, const std::string& keystore_dir) {
    Keystore ks{keystore_dir};
    PublicKey mpk = load_mpk(ks);
    Bytes msg = read_file(in_path);
    if (msg.size() > kMaxMessage)
        throw std::invalid_argument("input exceeds the 64 KiB message bound");
    XofRng rng(system_seed());
    Ciphertext ct = encrypt(mpk, bytes_of(id), msg, rng);
    write_file(out_path, serialize_ciphertext(mpk.params(), ct));
    return kOk;
}

int run_decrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
    auto [sk, mpk] = deserialize_user_key(read_file(key_path));
    Ciphertext ct = deserialize_ciphertext(mpk.params(), read_file(in_path));
    Bytes msg = decrypt(mpk, sk, ct);
    write_file(out_path, msg);
    return kOk;
}

int run_recover(const std::string& in_path, const std::string& keystore_dir,
                const std::string& irm_dir) {
    Keystore ks{keystore_dir};
    PublicKey mpk = load_mpk(ks);
    Keystore irm_ks{irm_dir.empty() ? keystore_dir : irm_dir};
    auto [irm, params] = deserialize_irm_key(irm_ks.load("irm"));

    std::optional<Bytes> id;
    try {
        Ciphertext ct = deserialize_ciphertext(mpk.params(), read_file(in_path));
        id = recover(mpk, irm, ct);
    } catch (const FormatError& e) {
        // Broken framing is an I/O-level complaint; a well-framed ciphertext
        // whose elements fail validation is a recovery ⊥.
        if (e.structural()) throw;
        id = std::nullopt;
    }
    if (!id) {
        std::cout << "BOTTOM\n";
        return kCryptoFailure;
    }
    std::cout << string_of(*id) << "\n";
    return kOk;
}

int run_inspect(const std::string& in_path) {
    Bytes data = read_file(in_path);
    uint8_t type = framed_object_type(data);
    std::string digest = digest_hex(data);
    switch (type) {
        case obj::kCurveParams: {
            CurveParams cp = deserialize_params(data);
            std::cout << "type=params version=1 p_bits=" << bit_length(cp.p)
                      << " q_bits=" << bit_length(cp.q)
                      << " label=" << cp.security_label << " digest=" << digest
                      << "\n";
            break;
        }
        case obj::kPublicKey: {
            PublicKey mpk = deserialize_public_key(data);
            std::cout << "type=public-key version=1 n=" << mpk.n()
                      << " label=" << mpk.params().security_label
                      << " params=" << digest_hex(serialize_params(mpk.params()))
                      << " irm_id=" << string_of(mpk.id_epsilon)
                      << " digest=" << digest << "\n";
            break;
        }
        case obj::kMasterKey: {
            auto [msk, cp] = deserialize_master_key(data);
            std::cout << "type=master-key version=1 secret=yes params="
                      << digest_hex(serialize_params(cp)) << " digest=" << digest
                      << "\n";
            break;
        }
        case obj::kIrmKey: {
            auto [irm, cp] = deserialize_irm_key(data);
            std::cout << "type=irm-key version=1 secret=yes params="
                      << digest_hex(serialize_params(cp)) << " digest=" << digest
                      << "\n";
            break;
        }
        case obj::kUserKey: {
            auto [sk, mpk] = deserialize_user_key(data);
            std::cout << "type=user-key version=1 secret=yes id="
                      << string_of(sk.id)
                      << " params=" << digest_hex(serialize_params(mpk.params()))
                      << " digest=" << digest << "\n";
            break;
        }
        case obj::kCiphertext: {
            Bytes payload = unframe(obj::kCiphertext, data);
            ByteReader r(payload);
            size_t c1 = r.blob16().size();
            size_t c2 = r.blob16().size();
            size_t c3 = r.blob16().size();
            r.expect_end();
            std::cout << "type=ciphertext version=1 c1=" << c1 << " c2=" << c2
                      << " c3=" << c3 << " digest=" << digest << "\n";
            break;
        }
        case obj::kTibePublicKey:
        case obj::kAibePublicKey: {
            std::cout << "type=sub-public-key version=1 bytes=" << data.size()
                      << " digest=" << digest << "\n";
            break;
        }
        case obj::kTibeMasterKey:
        case obj::kAibeMasterKey:
        case obj::kTibeUserKey:
        case obj::kAibeUserKey: {
            std::cout << "type=sub-key version=1 secret=yes digest=" << digest
                      << "\n";
            break;
        }
        case obj::kTibeCiphertext:
        case obj::kAibeCiphertext: {
            std::cout << "type=sub-ciphertext version=1 bytes=" << data.size()
                      << " digest=" << digest << "\n";
            break;
        }
        default:
            throw FormatError(DecodeFailure::bad_object,
                              "unknown object type " + std::to_string(type));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AIBEIR key management: anonymous identity-based encryption "
                 "with identity recovery"};
    app.require_subcommand(1);

    std::string keystore_dir, seed_hex, split_irm_dir, irm_dir;
    std::string id, in_path, out_path, key_path, irm_id = "IRM";
    unsigned bits = 256;
    size_t n_bits = 128;

    auto add_keystore = [&](CLI::App* cmd) {
        cmd->add_option("--keystore", keystore_dir, "keystore directory")
            ->envname("AIBEIR_KEYSTORE")
            ->required();
    };

    CLI::App* setup_cmd =
        app.add_subcommand("setup", "generate parameters and master keys");
    setup_cmd->add_option("--bits", bits, "subgroup order size in bits")
        ->check(CLI::Range(8u, 384u));
    setup_cmd->add_option("--n-bits", n_bits, "identity hash length in bits")
        ->check(CLI::Range(size_t{1}, size_t{4096}));
    setup_cmd->add_option("--irm-id", irm_id, "reserved recovery-manager identity");
    setup_cmd->add_option("--seed", seed_hex,
                          "hex seed for reproducible setup (omit for random)");
    setup_cmd->add_option("--split-irm", split_irm_dir,
                          "write the recovery key into a separate directory");
    add_keystore(setup_cmd);

    CLI::App* extract_cmd =
        app.add_subcommand("extract", "derive a user key for an identity");
    extract_cmd->add_option("--id", id, "identity string")->required();
    extract_cmd->add_option("--out", out_path, "output key file")->required();
    add_keystore(extract_cmd);

    CLI::App* encrypt_cmd =
        app.add_subcommand("encrypt", "encrypt a file to an identity");
    encrypt_cmd->add_option("--id", id, "recipient identity")->required();
    encrypt_cmd->add_option("--in", in_path, "plaintext file")->required();
    encrypt_cmd->add_option("--out", out_path, "ciphertext file")->required();
    add_keystore(encrypt_cmd);

    CLI::App* decrypt_cmd =
        app.add_subcommand("decrypt", "decrypt a file with a user key");
    decrypt_cmd->add_option("--key", key_path, "user key file")->required();
    decrypt_cmd->add_option("--in", in_path, "ciphertext file")->required();
    decrypt_cmd->add_option("--out", out_path, "plaintext output")->required();

    CLI::App* recover_cmd = app.add_subcommand(
        "recover", "recover the recipient identity from a ciphertext");
    recover_cmd->add_option("--in", in_path, "ciphertext file")->required();
    recover_cmd->add_option("--irm-dir", irm_dir,
                            "directory holding the recovery key, if split");
    add_keystore(recover_cmd);

    CLI::App* inspect_cmd =
        app.add_subcommand("inspect", "describe a framed object file");
    inspect_cmd->add_option("--in", in_path, "object file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (setup_cmd->parsed())
            return run_setup(bits, n_bits, irm_id, keystore_dir, seed_hex,
                             split_irm_dir);
        if (extract_cmd->parsed()) return run_extract(id, keystore_dir, out_path);
        if (encrypt_cmd->parsed())
            return run_encrypt(id, in_path, out_path, keystore_dir);
        if (decrypt_cmd->parsed()) return run_decrypt(key_path, in_path, out_path);
        if (recover_cmd->parsed())
            return run_recover(in_path, keystore_dir, irm_dir);
        if (inspect_cmd->parsed()) return run_inspect(in_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CryptoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCryptoFailure;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFormat;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFormat;
    }
    return kUsage;
}
