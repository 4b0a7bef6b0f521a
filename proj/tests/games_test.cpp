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

#include "aibeir/games.hpp"

#include <gtest/gtest.h>

#include "test_oracles.hpp"

using namespace aibeir;
using namespace aibeir::games;
using aibeir::testing::desk_params;

namespace {

GameOptions fast_options() {
    GameOptions opt;
    opt.identity_bits = 16;  // keep per-trial setup cheap
    return opt;
}

// Extracts a challenge identity in phase 2: must forfeit.
class PhaseTwoViolator : public RandomGuesser {
public:
    void run_queries(Oracle& oracle, QueryPhase phase) override {
        if (phase == QueryPhase::kPhaseTwo)
            (void)oracle.extract(bytes_of("alice"));
    }
};

// Extracts the identity it later names in the challenge: the challenger
// must reject the challenge.
class PreExtractViolator : public RandomGuesser {
public:
    void run_queries(Oracle& oracle, QueryPhase phase) override {
        if (phase == QueryPhase::kPhaseOne)
            (void)oracle.extract(bytes_of("alice"));
    }
};

class UnequalLengthAdversary : public RandomGuesser {
public:
    PairChallenge choose_pair_challenge(XofRng&) override {
        return {bytes_of("short"), bytes_of("much longer message"),
                bytes_of("alice"), bytes_of("bob")};
    }
};

class QueryFlooder : public RandomGuesser {
public:
    void run_queries(Oracle& oracle, QueryPhase phase) override {
        if (phase != QueryPhase::kPhaseOne) return;
        for (int i = 0; i < 10; ++i)
            (void)oracle.extract(bytes_of("user-" + std::to_string(i)));
    }
};

// Calls the recover oracle inside the anonymity game.
class WrongOracleAdversary : public RandomGuesser {
public:
    void run_queries(Oracle& oracle, QueryPhase phase) override {
        if (phase == QueryPhase::kPhaseOne)
            (void)oracle.recover_query(bytes_of("junk"));
    }
};

}  // namespace

TEST(Games, RandomGuesserSitsAtAnonymityBaseline) {
    XofRng root = XofRng::from_label("games-anon-baseline");
    auto est = estimate_advantage([] { return std::make_unique<RandomGuesser>(); },
                                  GameId::kAnonymity, 400, desk_params(), root,
                                  fast_options());
    EXPECT_EQ(est.trials, 400u);
    EXPECT_EQ(est.baseline, 0.25);
    EXPECT_LE(std::abs(est.point_estimate - 0.25), est.bound_99)
        << est.to_string();
}

TEST(Games, RandomGuesserSitsAtSemanticBaseline) {
    XofRng root = XofRng::from_label("games-sss-baseline");
    auto est = estimate_advantage([] { return std::make_unique<RandomGuesser>(); },
                                  GameId::kStrongerSemantic, 400, desk_params(),
                                  root, fast_options());
    EXPECT_EQ(est.baseline, 0.5);
    EXPECT_LE(std::abs(est.point_estimate - 0.5), est.bound_99)
        << est.to_string();
}

TEST(Games, CheatingAdversaryWinsEveryAnonymityTrial) {
    GameOptions opt = fast_options();
    opt.leak_master_key = true;
    XofRng root = XofRng::from_label("games-cheat-anon");
    auto est = estimate_advantage(
        [] { return std::make_unique<CheatingAdversary>(); },
        GameId::kAnonymity, 100, desk_params(), root, opt);
    EXPECT_EQ(est.wins, 100u);
    EXPECT_EQ(est.point_estimate, 1.0);
}

TEST(Games, CheatingAdversaryWinsEverySemanticTrial) {
    GameOptions opt = fast_options();
    opt.leak_master_key = true;
    XofRng root = XofRng::from_label("games-cheat-sss");
    auto est = estimate_advantage(
        [] { return std::make_unique<CheatingAdversary>(); },
        GameId::kStrongerSemantic, 100, desk_params(), root, opt);
    EXPECT_EQ(est.point_estimate, 1.0);
}

TEST(Games, IrmAdversaryRecoversIdentityButNotMessage) {
    auto stats = std::make_shared<IrmAdversary::Stats>();
    XofRng root = XofRng::from_label("games-irm");
    auto est = estimate_advantage(
        [stats] { return std::make_unique<IrmAdversary>(stats); },
        GameId::kStrongerSemantic, 400, desk_params(), root, fast_options());
    // The recovery key names the challenge identity every time...
    EXPECT_EQ(stats->recover_calls.load(), 400u);
    EXPECT_EQ(stats->recover_correct.load(), 400u);
    // ...and still buys zero message advantage.
    EXPECT_LE(std::abs(est.point_estimate - 0.5), est.bound_99)
        << est.to_string();
}

TEST(Games, HonestRecoverySubmissionLoses) {
    XofRng rng = XofRng::from_label("games-honest");
    HonestRecoveryAdversary adv;
    GameTranscript t =
        run_recovery_game(adv, desk_params(), rng, fast_options());
    EXPECT_FALSE(t.won);
    EXPECT_FALSE(t.violated);
    bool saw_valid = false, saw_id = false;
    for (const auto& e : t.events) {
        if (e.kind == "validity" && e.digest == "01") saw_valid = true;
        if (e.kind == "recover-output" && e.digest == "id") saw_id = true;
    }
    EXPECT_TRUE(saw_valid);
    EXPECT_TRUE(saw_id);
}

TEST(Games, FrankensteinSplicesAllRejected) {
    XofRng root = XofRng::from_label("games-frank");
    int wins = 0;
    for (int i = 0; i < 50; ++i) {
        XofRng rng = root.fork(i);
        FrankensteinAdversary adv;
        GameTranscript t =
            run_recovery_game(adv, desk_params(), rng, fast_options());
        if (t.won) ++wins;
        // Recovery must have answered ⊥.
        for (const auto& e : t.events) {
            if (e.kind == "recover-output") EXPECT_EQ(e.digest, "626f74746f6d");
        }
    }
    EXPECT_EQ(wins, 0);
}

TEST(Games, HonestEncryptionWithoutWitnessIsNotAWin) {
    // Withholding the witness adjudicates the ciphertext invalid, but a
    // correct recovery on a structurally sound ciphertext must not count
    // as a win.
    class WitnessWithholder : public Adversary {
    public:
        void on_setup(const GameView& view) override { mpk_ = &view.mpk; }
        RecoveryChallenge choose_recovery_challenge(XofRng& rng) override {
            Ciphertext ct = encrypt(*mpk_, bytes_of("sly"), rng.bytes(16), rng);
            return {serialize_ciphertext(mpk_->params(), ct), std::nullopt};
        }

    private:
        const PublicKey* mpk_ = nullptr;
    };
    XofRng rng = XofRng::from_label("games-withhold");
    WitnessWithholder adv;
    GameTranscript t = run_recovery_game(adv, desk_params(), rng, fast_options());
    EXPECT_FALSE(t.won);
    bool named = false;
    for (const auto& e : t.events)
        if (e.kind == "recover-output" && e.digest == "id") named = true;
    EXPECT_TRUE(named);  // recovery did answer; the answer was right
}

TEST(Games, RandomBytesChallengeLoses) {
    XofRng rng = XofRng::from_label("games-random-ct");
    RandomGuesser adv;
    GameTranscript t = run_recovery_game(adv, desk_params(), rng, fast_options());
    EXPECT_FALSE(t.won);
}

TEST(Games, PhaseTwoRestrictionForfeits) {
    XofRng rng = XofRng::from_label("games-violate");
    PhaseTwoViolator adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, fast_options());
    EXPECT_FALSE(t.won);
    EXPECT_TRUE(t.violated);
    EXPECT_NE(t.violation.find("challenge identity"), std::string::npos);
    EXPECT_TRUE(audit_restrictions(t));
}

TEST(Games, PreExtractedChallengeIdentityForfeits) {
    XofRng rng = XofRng::from_label("games-preextract");
    PreExtractViolator adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, fast_options());
    EXPECT_FALSE(t.won);
    EXPECT_TRUE(t.violated);
}

TEST(Games, UnequalPlaintextLengthsForfeit) {
    XofRng rng = XofRng::from_label("games-unequal");
    UnequalLengthAdversary adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, fast_options());
    EXPECT_TRUE(t.violated);
    EXPECT_NE(t.violation.find("length"), std::string::npos);
}

TEST(Games, QueryCapEnforced) {
    GameOptions opt = fast_options();
    opt.query_cap = 5;
    XofRng rng = XofRng::from_label("games-cap");
    QueryFlooder adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, opt);
    EXPECT_TRUE(t.violated);
    EXPECT_NE(t.violation.find("cap"), std::string::npos);
}

TEST(Games, RecoverOracleOnlyInRecoveryGame) {
    XofRng rng = XofRng::from_label("games-wrong-oracle");
    WrongOracleAdversary adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, fast_options());
    EXPECT_TRUE(t.violated);
}

TEST(Games, ReservedIdentityExtractionDenied) {
    class ReservedProbe : public RandomGuesser {
    public:
        bool got_key = true;
        void run_queries(Oracle& oracle, QueryPhase phase) override {
            if (phase == QueryPhase::kPhaseOne)
                got_key = oracle.extract(bytes_of("IRM")).has_value();
        }
    };
    XofRng rng = XofRng::from_label("games-reserved");
    ReservedProbe adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, fast_options());
    EXPECT_FALSE(adv.got_key);
    EXPECT_FALSE(t.violated);  // denied, not a forfeit
}

TEST(Games, TranscriptsReproducible) {
    auto play = [](const char* label) {
        XofRng rng = XofRng::from_label(label);
        RandomGuesser adv;
        return run_anonymity_game(adv, desk_params(), rng, fast_options())
            .to_text();
    };
    EXPECT_EQ(play("repro-seed"), play("repro-seed"));
    EXPECT_NE(play("repro-seed"), play("other-seed"));
}

TEST(Games, TranscriptFormat) {
    XofRng rng = XofRng::from_label("games-format");
    RandomGuesser adv;
    GameTranscript t = run_anonymity_game(adv, desk_params(), rng, fast_options());
    std::string text = t.to_text();
    EXPECT_NE(text.find("game\t-\tanonymity"), std::string::npos);
    EXPECT_NE(text.find("setup\t"), std::string::npos);
    EXPECT_NE(text.find("challenge\t"), std::string::npos);
    EXPECT_NE(text.find("result\t-\t0"), std::string::npos);
    // Every line has exactly three tab-separated fields.
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        ASSERT_EQ(std::count(line.begin(), line.end(), '\t'), 2) << line;
    }
}

TEST(Games, HiddenBitsUniformAcrossSeeds) {
    int b_ones = 0, g_ones = 0;
    const int kRuns = 64;
    for (int i = 0; i < kRuns; ++i) {
        XofRng rng = XofRng::from_label("bits-" + std::to_string(i));
        RandomGuesser adv;
        GameTranscript t =
            run_anonymity_game(adv, desk_params(), rng, fast_options());
        b_ones += t.hidden_b;
        g_ones += t.hidden_gamma;
    }
    EXPECT_GT(b_ones, 8);
    EXPECT_LT(b_ones, kRuns - 8);
    EXPECT_GT(g_ones, 8);
    EXPECT_LT(g_ones, kRuns - 8);
}

TEST(Games, EstimatePreconditions) {
    XofRng root = XofRng::from_label("games-pre");
    auto factory = [] { return std::make_unique<RandomGuesser>(); };
    EXPECT_THROW(estimate_advantage(factory, GameId::kAnonymity, 0,
                                    desk_params(), root),
                 std::invalid_argument);
    EXPECT_THROW(estimate_advantage(factory, GameId::kAnonymity, 99,
                                    desk_params(), root),
                 std::invalid_argument);
}

TEST(Games, AdvantageEstimateFormat) {
    AdvantageEstimate est;
    est.game = GameId::kStrongerSemantic;
    est.trials = 4000;
    est.wins = 2000;
    est.point_estimate = 0.5;
    est.baseline = 0.5;
    est.bound_99 = 0.02;
    EXPECT_EQ(est.to_string(), "stronger-semantic 4000 2000 0.5 0.5 0.02");
}
