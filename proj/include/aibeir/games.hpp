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

#ifndef AIBEIR_GAMES_HPP
#define AIBEIR_GAMES_HPP

#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "aibeir/aibeir.hpp"

// Executable challengers for the three security experiments: the joint
// message/identity anonymity game, the stronger semantic-security game in
// which the adversary holds the recovery key, and the recovery game with
// extraction and recovery oracles. Adversaries plug in behind a narrow
// interface; the challenger enforces every query restriction and records a
// full transcript. A Monte-Carlo layer aggregates win rates into advantage
// estimates with 99% binomial half-widths.
namespace aibeir::games {

enum class GameId { kAnonymity, kStrongerSemantic, kRecovery };

inline const char* game_name(GameId g) {
    switch (g) {
        case GameId::kAnonymity: return "anonymity";
        case GameId::kStrongerSemantic: return "stronger-semantic";
        case GameId::kRecovery: return "recovery";
    }
    return "?";
}

enum class QueryPhase { kPhaseOne, kPhaseTwo, kMonitor };

// Thrown by the oracle when the adversary breaks a game rule; the runner
// converts it into a forfeited (lost) transcript rather than aborting the
// whole estimate.
class ProtocolViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GameOptions {
    size_t identity_bits = 32;  // testable-scheme n for game instances
    Bytes reserved_id = bytes_of("IRM");
    size_t query_cap = 1 << 16;  // polynomial-query bound, hard cap per game
    // Self-test hook: hands the master key to the adversary after setup.
    // The leak is recorded in the transcript, so hygiene audits see it.
    bool leak_master_key = false;
};

struct TranscriptEvent {
    std::string kind;
    Bytes identity;      // empty when not identity-shaped
    std::string digest;  // hex digest of the payload, or a short hex code
};

struct GameTranscript {
    GameId game = GameId::kAnonymity;
    std::vector<TranscriptEvent> events;
    std::vector<Bytes> challenge_ids;  // restricted after the challenge
    int hidden_b = -1;
    int hidden_gamma = -1;
    int guess_b = -1;
    int guess_gamma = -1;
    bool won = false;
    bool violated = false;
    std::string violation;

    // One event per line: event-type, identity-hex, payload-digest-hex,
    // tab-separated. "-" marks an absent field.
    std::string to_text() const {
        std::ostringstream os;
        os << "game\t-\t" << game_name(game) << "\n";
        for (const auto& e : events) {
            os << e.kind << "\t"
               << (e.identity.empty() ? "-" : to_hex(e.identity)) << "\t"
               << (e.digest.empty() ? "-" : e.digest) << "\n";
        }
        os << "result\t-\t" << (won ? "01" : "00") << "\n";
        if (violated) os << "violation\t-\t" << violation << "\n";
        return os.str();
    }
};

// Mechanical post-hoc check that the query log obeys the game's identity
// restriction: no extraction of a challenge identity anywhere in a
// transcript that was not forfeited.
inline bool audit_restrictions(const GameTranscript& t) {
    for (const auto& e : t.events) {
        if (e.kind != "extract") continue;
        for (const auto& cid : t.challenge_ids)
            if (e.identity == cid) return t.violated && !t.won;
    }
    return true;
}

// --- Challenge shapes ---

struct PairChallenge {  // anonymity: equal-length m0/m1, identities id0/id1
    Bytes m0, m1, id0, id1;
};

struct MessageChallenge {  // stronger semantic: equal-length m0/m1, one id
    Bytes m0, m1, id_star;
};

struct Witness {  // validity proof for the recovery game
    Bytes msg;
    Bytes id;
    EncryptRandomness rnd;
};

struct RecoveryChallenge {
    Bytes ct_wire;  // submitted as raw bytes; unparseable input recovers ⊥
    std::optional<Witness> witness;
};

struct Guess {
    int b = 0;
    int gamma = 0;
};

struct GameView {
    const PublicKey& mpk;
    const IrmKey* irm_key;  // non-null only in the stronger-semantic game
};

namespace detail {
struct ChallengerState;
}

// Query interface handed to the adversary. All access to secrets goes
// through here; the challenger logs and polices every call.
class Oracle {
public:
    // Key-extraction query. Returns nullopt for the reserved identity
    // (outside the identity space). Throws ProtocolViolation on a
    // restricted identity or when the query cap is exceeded.
    std::optional<UserKey> extract(const Bytes& id);

    // Recovery query; available in the recovery game only.
    std::optional<Bytes> recover_query(const Bytes& ct_wire);

private:
    friend detail::ChallengerState;
    explicit Oracle(detail::ChallengerState& s) : s_(s) {}
    detail::ChallengerState& s_;
};

// Behavioral contract for one game run. A fresh instance plays exactly one
// game; the runner calls only the hooks that game uses. Defaults throw for
// the challenge hook of a game the adversary does not implement.
class Adversary {
public:
    virtual ~Adversary() = default;

    virtual void on_setup(const GameView&) {}

    // Called only under GameOptions::leak_master_key (harness self-tests).
    virtual void on_leaked_master_key(const MasterKey&) {}

    virtual void run_queries(Oracle&, QueryPhase) {}

    virtual PairChallenge choose_pair_challenge(XofRng&) {
        throw std::logic_error("adversary does not play the anonymity game");
    }
    virtual MessageChallenge choose_message_challenge(XofRng&) {
        throw std::logic_error("adversary does not play the semantic game");
    }
    virtual RecoveryChallenge choose_recovery_challenge(XofRng&) {
        throw std::logic_error("adversary does not play the recovery game");
    }

    virtual void on_challenge_ciphertext(const Ciphertext&) {}
    virtual void on_recover_output(const std::optional<Bytes>&) {}

    virtual Guess guess(XofRng&) { return {}; }
};

// --- Challenger internals ---

namespace detail {

struct ChallengerState {
    GameId game;
    const GameOptions& opt;
    const CurveParams& cp;
    SetupResult keys;
    XofRng& rng;
    GameTranscript& t;
    std::set<Bytes> extracted;
    size_t query_count = 0;
    bool challenge_issued = false;

    ChallengerState(GameId g, const GameOptions& o, const CurveParams& params,
                    XofRng& r, GameTranscript& tr)
        : game(g), opt(o), cp(params),
          keys(setup(params, o.identity_bits, o.reserved_id, r)), rng(r),
          t(tr) {
        t.game = g;
        t.events.push_back({"setup", {}, digest_hex(serialize_public_key(keys.mpk))});
    }

    Oracle oracle() { return Oracle(*this); }

    void log(std::string kind, Bytes id, std::string digest) {
        t.events.push_back({std::move(kind), std::move(id), std::move(digest)});
    }

    [[noreturn]] void violate(const std::string& why) {
        t.events.push_back({"violation-query", {}, {}});
        throw ProtocolViolation(why);
    }

    void bump_queries() {
        if (++query_count > opt.query_cap) violate("query cap exceeded");
    }

    bool restricted(const Bytes& id) const {
        if (!challenge_issued) return false;
        for (const auto& cid : t.challenge_ids)
            if (cid == id) return true;
        return false;
    }

    // Shared challenge-input checks for the two indistinguishability games.
    void check_pair(const Bytes& m0, const Bytes& m1, const Bytes& id) {
        if (m0.size() != m1.size()) violate("challenge plaintexts differ in length");
        if (m0.size() > kMaxMessage) violate("challenge plaintext oversize");
        if (id.empty() || id.size() > kMaxIdentity) violate("challenge identity length");
        if (id == keys.mpk.id_epsilon) violate("challenge identity is reserved");
        if (extracted.count(id)) violate("challenge identity was extracted");
    }
};

inline std::optional<Bytes> recover_wire(const PublicKey& mpk,
                                         const IrmKey& irm,
                                         const CurveParams& cp,
                                         const Bytes& ct_wire) {
    try {
        Ciphertext ct = deserialize_ciphertext(cp, ct_wire);
        return recover(mpk, irm, ct);
    } catch (const FormatError&) {
        return std::nullopt;
    }
}

}  // namespace detail

inline std::optional<UserKey> Oracle::extract(const Bytes& id) {
    s_.bump_queries();
    if (id == s_.keys.mpk.id_epsilon) {
        s_.log("extract-denied", id, {});
        return std::nullopt;
    }
    if (s_.restricted(id)) {
        s_.t.events.push_back({"extract", id, {}});
        s_.violate("key-extraction of a challenge identity");
    }
    if (id.empty() || id.size() > kMaxIdentity) {
        s_.log("extract-denied", id, {});
        return std::nullopt;
    }
    UserKey sk = aibeir::extract(s_.keys.mpk, s_.keys.msk, id, s_.rng);
    s_.extracted.insert(id);
    s_.log("extract", id, digest_hex(serialize_user_key(s_.keys.mpk, sk)));
    return sk;
}

inline std::optional<Bytes> Oracle::recover_query(const Bytes& ct_wire) {
    if (s_.game != GameId::kRecovery)
        s_.violate("recover oracle unavailable in this game");
    s_.bump_queries();
    auto out = detail::recover_wire(s_.keys.mpk, s_.keys.irm, s_.cp, ct_wire);
    s_.log("recover-query", out.value_or(Bytes{}), digest_hex(ct_wire));
    return out;
}

// --- Game runners ---
// Each run is a deterministic function of (adversary, params, rng state):
// identical seeds give identical transcripts.

inline GameTranscript run_anonymity_game(Adversary& adv, const CurveParams& cp,
                                         XofRng& rng,
                                         const GameOptions& opt = {}) {
    GameTranscript t;
    detail::ChallengerState s(GameId::kAnonymity, opt, cp, rng, t);
    adv.on_setup(GameView{s.keys.mpk, nullptr});
    if (opt.leak_master_key) {
        adv.on_leaked_master_key(s.keys.msk);
        s.log("leak", {}, "6d736b");  // "msk"
    }
    Oracle oracle = s.oracle();
    try {
        adv.run_queries(oracle, QueryPhase::kPhaseOne);
        PairChallenge ch = adv.choose_pair_challenge(rng);
        s.check_pair(ch.m0, ch.m1, ch.id0);
        s.check_pair(ch.m0, ch.m1, ch.id1);
        t.challenge_ids = {ch.id0, ch.id1};
        s.challenge_issued = true;
        t.hidden_b = rng.bit() ? 1 : 0;
        t.hidden_gamma = rng.bit() ? 1 : 0;
        const Bytes& m = t.hidden_b ? ch.m1 : ch.m0;
        const Bytes& id = t.hidden_gamma ? ch.id1 : ch.id0;
        Ciphertext ct = encrypt(s.keys.mpk, id, m, rng);
        s.log("challenge", {},
              digest_hex(serialize_ciphertext(cp, ct)));
        adv.on_challenge_ciphertext(ct);
        adv.run_queries(oracle, QueryPhase::kPhaseTwo);
        Guess g = adv.guess(rng);
        t.guess_b = g.b;
        t.guess_gamma = g.gamma;
        s.log("guess", {},
              to_hex(Bytes{static_cast<uint8_t>(g.b & 1),
                           static_cast<uint8_t>(g.gamma & 1)}));
        t.won = (g.b == t.hidden_b) && (g.gamma == t.hidden_gamma);
    } catch (const ProtocolViolation& v) {
        t.won = false;
        t.violated = true;
        t.violation = v.what();
    }
    return t;
}

inline GameTranscript run_stronger_semantic_game(Adversary& adv,
                                                 const CurveParams& cp,
                                                 XofRng& rng,
                                                 const GameOptions& opt = {}) {
    GameTranscript t;
    detail::ChallengerState s(GameId::kStrongerSemantic, opt, cp, rng, t);
    // The recovery key is part of this game's setup; the master key stays
    // with the challenger.
    adv.on_setup(GameView{s.keys.mpk, &s.keys.irm});
    s.log("setup-irm", {}, digest_hex(serialize_irm_key(cp, s.keys.irm)));
    if (opt.leak_master_key) {
        adv.on_leaked_master_key(s.keys.msk);
        s.log("leak", {}, "6d736b");
    }
    Oracle oracle = s.oracle();
    try {
        adv.run_queries(oracle, QueryPhase::kPhaseOne);
        MessageChallenge ch = adv.choose_message_challenge(rng);
        s.check_pair(ch.m0, ch.m1, ch.id_star);
        t.challenge_ids = {ch.id_star};
        s.challenge_issued = true;
        t.hidden_b = rng.bit() ? 1 : 0;
        Ciphertext ct =
            encrypt(s.keys.mpk, ch.id_star, t.hidden_b ? ch.m1 : ch.m0, rng);
        s.log("challenge", {}, digest_hex(serialize_ciphertext(cp, ct)));
        adv.on_challenge_ciphertext(ct);
        adv.run_queries(oracle, QueryPhase::kPhaseTwo);
        Guess g = adv.guess(rng);
        t.guess_b = g.b;
        s.log("guess", {}, to_hex(Bytes{static_cast<uint8_t>(g.b & 1)}));
        t.won = (g.b == t.hidden_b);
    } catch (const ProtocolViolation& v) {
        t.won = false;
        t.violated = true;
        t.violation = v.what();
    }
    return t;
}

// Win condition, three disjuncts: on a witness-valid ciphertext under id′,
// the adversary wins if recovery answers ⊥ or any identity other than id′;
// on an invalid ciphertext it wins if recovery answers any identity at
// all. A winning identity must not have been extracted during the monitor
// phase. Validity is adjudicated by deterministic re-encryption from the
// disclosed randomness.
inline GameTranscript run_recovery_game(Adversary& adv, const CurveParams& cp,
                                        XofRng& rng,
                                        const GameOptions& opt = {}) {
    GameTranscript t;
    detail::ChallengerState s(GameId::kRecovery, opt, cp, rng, t);
    adv.on_setup(GameView{s.keys.mpk, nullptr});
    if (opt.leak_master_key) {
        adv.on_leaked_master_key(s.keys.msk);
        s.log("leak", {}, "6d736b");
    }
    Oracle oracle = s.oracle();
    try {
        adv.run_queries(oracle, QueryPhase::kMonitor);
        RecoveryChallenge ch = adv.choose_recovery_challenge(rng);
        s.challenge_issued = true;
        s.log("challenge", {}, digest_hex(ch.ct_wire));
        std::optional<Ciphertext> parsed;
        try {
            parsed = deserialize_ciphertext(cp, ch.ct_wire);
        } catch (const FormatError&) {
        }
        auto out = parsed ? recover(s.keys.mpk, s.keys.irm, *parsed)
                          : std::nullopt;
        s.log("recover-output", out.value_or(Bytes{}),
              out ? "id" : "626f74746f6d");  // "bottom"
        adv.on_recover_output(out);

        bool valid = false;
        Bytes id_prime;
        if (ch.witness) {
            try {
                Ciphertext re = encrypt_with(s.keys.mpk, ch.witness->id,
                                             ch.witness->msg, ch.witness->rnd);
                valid = serialize_ciphertext(cp, re) == ch.ct_wire;
                id_prime = ch.witness->id;
            } catch (const std::invalid_argument&) {
                valid = false;  // malformed witness: adjudicated invalid
            } catch (const CryptoError&) {
                valid = false;
            }
        }
        s.log("validity", id_prime, valid ? "01" : "00");
        bool win;
        if (valid) {
            win = !out || *out != id_prime;
        } else {
            // Without a consistent witness the ciphertext is adjudicated
            // invalid, but a recovered identity counts as a win only when
            // it is certifiably wrong: the escrow part must fail the public
            // test for the reserved identity (the one structural check
            // recovery does not perform itself). Otherwise an adversary
            // could encrypt honestly, withhold the witness, and collect a
            // free win from a correct recovery.
            bool escrow_consistent =
                out && parsed &&
                tibe::test(s.keys.mpk.mpk_t,
                           tibe::BitIdentity::from_bytes(
                               s.keys.mpk.id_epsilon, s.keys.mpk.n()),
                           parsed->c3().core);
            win = out.has_value() && !escrow_consistent;
        }
        if (win && out && s.extracted.count(*out)) {
            s.log("win-suppressed-extracted-id", *out, {});
            win = false;
        }
        t.won = win;
    } catch (const ProtocolViolation& v) {
        t.won = false;
        t.violated = true;
        t.violation = v.what();
    }
    return t;
}

inline GameTranscript run_game(GameId game, Adversary& adv,
                               const CurveParams& cp, XofRng& rng,
                               const GameOptions& opt = {}) {
    switch (game) {
        case GameId::kAnonymity: return run_anonymity_game(adv, cp, rng, opt);
        case GameId::kStrongerSemantic:
            return run_stronger_semantic_game(adv, cp, rng, opt);
        case GameId::kRecovery: return run_recovery_game(adv, cp, rng, opt);
    }
    throw std::logic_error("unknown game");
}

// --- Advantage estimation ---

struct AdvantageEstimate {
    GameId game = GameId::kAnonymity;
    uint64_t trials = 0;
    uint64_t wins = 0;
    double point_estimate = 0.0;  // wins / trials
    double baseline = 0.0;        // trivial-guess win rate
    double bound_99 = 0.0;        // 99% binomial half-width

    std::string to_string() const {
        std::ostringstream os;
        os << game_name(game) << " " << trials << " " << wins << " "
           << point_estimate << " " << baseline << " " << bound_99;
        return os.str();
    }
};

inline double game_baseline(GameId g) {
    switch (g) {
        case GameId::kAnonymity: return 0.25;  // joint (b, γ) guess
        case GameId::kStrongerSemantic: return 0.5;
        case GameId::kRecovery: return 0.0;
    }
    return 0.0;
}

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

// Independent game instances, one per trial, each on a private randomness
// stream forked from the root generator by trial index. Trials may run on
// several threads; the result does not depend on scheduling.
inline AdvantageEstimate estimate_advantage(const AdversaryFactory& factory,
                                            GameId game, uint64_t trials,
                                            const CurveParams& cp,
                                            const XofRng& root,
                                            const GameOptions& opt = {},
                                            unsigned threads = 0) {
    if (trials < 100)
        throw std::invalid_argument("advantage estimation needs >= 100 trials");
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    threads = static_cast<unsigned>(
        std::min<uint64_t>(threads, trials));
    std::atomic<uint64_t> wins{0};
    std::atomic<uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mu;
    std::string error_msg;
    auto worker = [&]() {
        uint64_t local = 0;
        try {
            for (;;) {
                uint64_t i = next.fetch_add(1);
                if (i >= trials || failed.load()) break;
                XofRng trial_rng = root.fork(i);
                auto adv = factory();
                GameTranscript t = run_game(game, *adv, cp, trial_rng, opt);
                if (t.won) ++local;
            }
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!failed.exchange(true)) error_msg = e.what();
        }
        wins.fetch_add(local);
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load())
        throw std::runtime_error("game trial failed: " + error_msg);

    AdvantageEstimate est;
    est.game = game;
    est.trials = trials;
    est.wins = wins.load();
    est.point_estimate = static_cast<double>(est.wins) / trials;
    est.baseline = game_baseline(game);
    est.bound_99 = 2.576 * std::sqrt(est.point_estimate *
                                     (1.0 - est.point_estimate) / trials);
    return est;
}

// --- Built-in adversaries ---

// Makes a fixed well-formed challenge and guesses uniformly: the null
// hypothesis every game should hold at its baseline.
class RandomGuesser : public Adversary {
public:
    PairChallenge choose_pair_challenge(XofRng&) override {
        return {bytes_of("attack at dawn!!"), bytes_of("retreat at dusk!"),
                bytes_of("alice"), bytes_of("bob")};
    }
    MessageChallenge choose_message_challenge(XofRng&) override {
        return {bytes_of("attack at dawn!!"), bytes_of("retreat at dusk!"),
                bytes_of("alice")};
    }
    RecoveryChallenge choose_recovery_challenge(XofRng& rng) override {
        return {rng.bytes(96), std::nullopt};
    }
    Guess guess(XofRng& rng) override {
        return {rng.bit() ? 1 : 0, rng.bit() ? 1 : 0};
    }
};

// Harness self-test: with the master key leaked out-of-band the
// indistinguishability games are trivially won. Extracts both candidate
// keys itself and decrypts the challenge.
class CheatingAdversary : public Adversary {
public:
    void on_setup(const GameView& view) override {
        mpk_ = &view.mpk;
        irm_ = view.irm_key;
    }
    void on_leaked_master_key(const MasterKey& msk) override { msk_ = &msk; }
    PairChallenge choose_pair_challenge(XofRng&) override {
        ch_ = {bytes_of("attack at dawn!!"), bytes_of("retreat at dusk!"),
               bytes_of("alice"), bytes_of("bob")};
        return ch_;
    }
    MessageChallenge choose_message_challenge(XofRng&) override {
        ch_ = {bytes_of("attack at dawn!!"), bytes_of("retreat at dusk!"),
               bytes_of("alice"), bytes_of("alice")};
        return {ch_.m0, ch_.m1, ch_.id0};
    }
    void on_challenge_ciphertext(const Ciphertext& ct) override { ct_ = &ct; }

    Guess guess(XofRng& rng) override {
        if (!msk_ || !ct_) return {rng.bit() ? 1 : 0, rng.bit() ? 1 : 0};
        const Bytes ids[2] = {ch_.id0, ch_.id1};
        for (int gamma = 0; gamma < 2; ++gamma) {
            try {
                UserKey sk = aibeir::extract(*mpk_, *msk_, ids[gamma], rng);
                Bytes m = decrypt(*mpk_, sk, *ct_);
                if (m == ch_.m0) return {0, gamma};
                if (m == ch_.m1) return {1, gamma};
            } catch (const CryptoError&) {
                // wrong identity: the wrapped core fails to parse
            }
        }
        return {rng.bit() ? 1 : 0, rng.bit() ? 1 : 0};
    }

private:
    const PublicKey* mpk_ = nullptr;
    const IrmKey* irm_ = nullptr;
    const MasterKey* msk_ = nullptr;
    const Ciphertext* ct_ = nullptr;
    PairChallenge ch_;
};

// Plays the stronger-semantic game as the recovery manager: runs recovery
// on the challenge ciphertext with its legitimate key, then guesses the
// message bit at random. Identity knowledge must yield zero message
// advantage; the shared counters let tests verify both halves.
class IrmAdversary : public Adversary {
public:
    struct Stats {
        std::atomic<uint64_t> recover_calls{0};
        std::atomic<uint64_t> recover_correct{0};
    };

    explicit IrmAdversary(std::shared_ptr<Stats> stats)
        : stats_(std::move(stats)) {}

    void on_setup(const GameView& view) override {
        mpk_ = &view.mpk;
        irm_ = view.irm_key;
    }
    MessageChallenge choose_message_challenge(XofRng&) override {
        id_star_ = bytes_of("suspect@example");
        return {bytes_of("attack at dawn!!"), bytes_of("retreat at dusk!"),
                id_star_};
    }
    void on_challenge_ciphertext(const Ciphertext& ct) override {
        if (!irm_) return;
        auto out = recover(*mpk_, *irm_, ct);
        stats_->recover_calls.fetch_add(1);
        if (out && *out == id_star_) stats_->recover_correct.fetch_add(1);
    }
    Guess guess(XofRng& rng) override { return {rng.bit() ? 1 : 0, 0}; }

private:
    std::shared_ptr<Stats> stats_;
    const PublicKey* mpk_ = nullptr;
    const IrmKey* irm_ = nullptr;
    Bytes id_star_;
};

// Splices the message-carrying parts of one identity's ciphertext with the
// escrow part of another's. No consistent witness exists, so the spliced
// ciphertext is adjudicated invalid, and recovery must answer ⊥.
class FrankensteinAdversary : public Adversary {
public:
    void on_setup(const GameView& view) override { mpk_ = &view.mpk; }

    RecoveryChallenge choose_recovery_challenge(XofRng& rng) override {
        Bytes id_a = concat({bytes_of("u-"), rng.bytes(4)});
        Bytes id_b = concat({bytes_of("v-"), rng.bytes(4)});
        Bytes msg = rng.bytes(24);
        Ciphertext genuine = encrypt(*mpk_, id_a, msg, rng);
        Ciphertext escrow_donor = encrypt(*mpk_, id_b, msg, rng);
        Ciphertext spliced(genuine.c1(), genuine.c2(), escrow_donor.c3());
        return {serialize_ciphertext(mpk_->params(), spliced), std::nullopt};
    }

private:
    const PublicKey* mpk_ = nullptr;
};

// Submits a properly formed ciphertext together with its randomness
// witness; the challenger must adjudicate it valid and recovery must name
// the encryption identity, so this adversary always loses.
class HonestRecoveryAdversary : public Adversary {
public:
    void on_setup(const GameView& view) override { mpk_ = &view.mpk; }

    RecoveryChallenge choose_recovery_challenge(XofRng& rng) override {
        const CurveParams& cp = mpk_->params();
        Witness w;
        w.id = concat({bytes_of("honest-"), rng.bytes(4)});
        w.msg = rng.bytes(32);
        w.rnd = EncryptRandomness{random_scalar(cp, rng),
                                  random_scalar(cp, rng),
                                  random_scalar(cp, rng)};
        Ciphertext ct = encrypt_with(*mpk_, w.id, w.msg, w.rnd);
        return {serialize_ciphertext(cp, ct), w};
    }

private:
    const PublicKey* mpk_ = nullptr;
};

}  // namespace aibeir::games

#endif  // AIBEIR_GAMES_HPP
