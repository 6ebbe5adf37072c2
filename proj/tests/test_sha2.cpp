#include <stdexcept>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "round_oracle.hpp"
#include "stepsha/constants.hpp"
#include "stepsha/corpus.hpp"
#include "stepsha/sha2.hpp"

using namespace stepsha;

namespace {

using namespace stepsha::test;

Word random_word(std::mt19937_64& rng, const Sha2Params& p) { return rng() & p.mask; }

MessageBlock random_block(std::mt19937_64& rng, const Sha2Params& p) {
    MessageBlock b;
    for (auto& w : b.words) w = random_word(rng, p);
    return b;
}

RegisterState random_state(std::mt19937_64& rng, const Sha2Params& p) {
    RegisterState s;
    for (auto& w : s.regs) w = random_word(rng, p);
    return s;
}

}  // namespace

TEST_CASE("make_params sizes and IV") {
    const Sha2Params p256 = make_params(Variant::Sha256);
    CHECK(p256.word_bits == 32);
    CHECK(p256.max_steps == 64);
    CHECK(p256.k.size() == 64);
    CHECK(p256.iv[0] == 0x6a09e667);

    const Sha2Params p512 = make_params(Variant::Sha512);
    CHECK(p512.word_bits == 64);
    CHECK(p512.max_steps == 80);
    CHECK(p512.k.size() == 80);
    CHECK(p512.iv[0] == 0x6a09e667f3bcc908ULL);

    for (const Sha2Params* p : {&p256, &p512}) {
        for (unsigned r : p->big_sigma0_rots) CHECK(r < p->word_bits);
        for (unsigned r : p->big_sigma1_rots) CHECK(r < p->word_bits);
        for (const SigmaSpec& s : {p->small_sigma0, p->small_sigma1}) {
            CHECK(s.rot1 < p->word_bits);
            CHECK(s.rot2 < p->word_bits);
            CHECK(s.shift < p->word_bits);
        }
        for (Word k : p->k) CHECK(p->fits(k));
    }
}

TEST_CASE("constant tables checksum") {
    // SHA-256 over the big-endian bytes of IV256 | K256 | IV512 | K512, computed with
    // an external implementation after re-deriving every constant from prime roots.
    std::string bytes;
    auto put = [&](Word w, int n) {
        for (int i = n - 1; i >= 0; --i) bytes.push_back(static_cast<char>((w >> (8 * i)) & 0xff));
    };
    for (Word w : constants::kIv256) put(w, 4);
    for (Word w : constants::kRound256) put(w, 4);
    for (Word w : constants::kIv512) put(w, 8);
    for (Word w : constants::kRound512) put(w, 8);
    REQUIRE(bytes.size() == 992);
    CHECK(digest_hex(digest_padded(bytes, Variant::Sha256, 64), Variant::Sha256) ==
          "666fbcb716ba2ac0a57d3d299bbfd112cbe9fd99b4fd862f7309ef2a2f5b60c3");
}

TEST_CASE("expand_message") {
    std::mt19937_64 rng(11);
    for (Variant v : {Variant::Sha256, Variant::Sha512}) {
        const Sha2Params& p = params_for(v);
        SUBCASE("prefix identity") {
            for (int trial = 0; trial < 200; ++trial) {
                const MessageBlock b = random_block(rng, p);
                const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.max_steps));
                const auto w = expand_message(b, t, p);
                REQUIRE(w.size() == static_cast<std::size_t>(t));
                for (int i = 0; i < std::min(t, 16); ++i) CHECK(w[i] == b[i]);
            }
        }
        SUBCASE("schedule matches the bit-level oracle") {
            for (int trial = 0; trial < 50; ++trial) {
                const MessageBlock b = random_block(rng, p);
                CHECK(expand_message(b, p.max_steps, p) == oracle_schedule(b, p.max_steps, oracle_rots(v)));
            }
        }
        SUBCASE("all-zero block") {
            const auto w = expand_message(MessageBlock{}, 17, p);
            CHECK(w[16] == 0);
        }
        SUBCASE("range errors") {
            CHECK_THROWS_AS(expand_message(MessageBlock{}, 0, p), std::out_of_range);
            CHECK_THROWS_AS(expand_message(MessageBlock{}, p.max_steps + 1, p), std::out_of_range);
        }
    }
}

TEST_CASE("built-in pairs: schedule differences after the block words") {
    // W16 carries -1, which cancels the +1 left in register h after step 15;
    // W17..W21 agree outright.
    for (const CollisionPair* pair : {&builtin_corpus().sha256_pair, &builtin_corpus().sha512_pair}) {
        const Sha2Params& p = params_for(pair->variant);
        const auto w1 = expand_message(pair->m1, 22, p);
        const auto w2 = expand_message(pair->m2, 22, p);
        CHECK(((w2[16] - w1[16]) & p.mask) == p.mask);
        for (int t = 17; t < 22; ++t) CHECK(w1[t] == w2[t]);
        CHECK(w1[8] != w2[8]);
    }
}

TEST_CASE("step") {
    const Sha2Params& p256 = params_for(Variant::Sha256);
    CHECK(step(RegisterState{}, 0, 0, p256) == RegisterState{});

    std::mt19937_64 rng(2024);
    for (Variant v : {Variant::Sha256, Variant::Sha512}) {
        const Sha2Params& p = params_for(v);
        const OracleRots& o = oracle_rots(v);
        for (int i = 0; i < 1000; ++i) {
            const RegisterState s = random_state(rng, p);
            const Word w = random_word(rng, p);
            const Word k = random_word(rng, p);
            const RegisterState got = step(s, w, k, p);
            REQUIRE(got == oracle_step(s, w, k, o));
            for (Word r : got.regs) REQUIRE(p.fits(r));
        }
    }
}

TEST_CASE("compress") {
    const VectorCorpus& c = builtin_corpus();
    SUBCASE("built-in pairs collide at 22 steps") {
        for (const CollisionPair* pair : {&c.sha256_pair, &c.sha512_pair}) {
            const Sha2Params& p = params_for(pair->variant);
            const RegisterState iv = standard_iv(p);
            CHECK(pair->m1 != pair->m2);
            CHECK(compress(iv, pair->m1, 22, p) == compress(iv, pair->m2, 22, p));
            CHECK(run_rounds(iv, pair->m1, 22, p) == run_rounds(iv, pair->m2, 22, p));
        }
    }
    SUBCASE("built-in SHA-256 pair does not collide at full rounds") {
        const Sha2Params& p = params_for(Variant::Sha256);
        const RegisterState iv = standard_iv(p);
        CHECK(compress(iv, c.sha256_pair.m1, 64, p) != compress(iv, c.sha256_pair.m2, 64, p));
    }
    SUBCASE("feedforward and determinism") {
        std::mt19937_64 rng(5);
        for (Variant v : {Variant::Sha256, Variant::Sha512}) {
            const Sha2Params& p = params_for(v);
            for (int i = 0; i < 100; ++i) {
                const RegisterState iv = random_state(rng, p);
                const MessageBlock b = random_block(rng, p);
                const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.max_steps));
                const RegisterState out = compress(iv, b, t, p);
                RegisterState s = iv;
                const auto w = expand_message(b, t, p);
                for (int j = 0; j < t; ++j) s = step(s, w[j], p.k[j], p);
                for (std::size_t r = 0; r < 8; ++r) CHECK(((out[r] - iv[r]) & p.mask) == s[r]);
                CHECK(compress(iv, b, t, p) == out);
            }
        }
    }
    SUBCASE("range errors") {
        const Sha2Params& p = params_for(Variant::Sha512);
        CHECK_THROWS_AS(compress(standard_iv(p), MessageBlock{}, 81, p), std::out_of_range);
    }
}

TEST_CASE("digest_padded reproduces standard digests") {
    for (const StandardVector& v : standard_vectors()) {
        CAPTURE(v.message);
        const int full = params_for(v.variant).max_steps;
        CHECK(digest_hex(digest_padded(std::string_view(v.message), v.variant, full), v.variant) == v.digest_hex);
    }
    // Multi-block messages.
    CHECK(digest_hex(digest_padded("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq", Variant::Sha256, 64),
                     Variant::Sha256) == "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    CHECK(digest_hex(digest_padded("abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmno"
                                   "ijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu",
                                   Variant::Sha512, 80),
                     Variant::Sha512) ==
          "8e959b75dae313da8cf4f72814fc143f8f7779c6eb9f7fa17299aeadb6889018"
          "501d289e4900f7e4331b99dec4b5433ac7d329eeb6dd26545e96e55b874be909");
    CHECK(digest_hex(digest_padded(std::string(1000, 'a'), Variant::Sha256, 64), Variant::Sha256) ==
          "41edece42d63e8d9bf515a9ba6932e1c20cbc9f5a5d134645adb5db1b9737ea3");
}

TEST_CASE("digest_padded with reduced steps differs from the full hash") {
    const auto reduced = digest_padded("abc", Variant::Sha256, 22);
    CHECK(digest_hex(reduced, Variant::Sha256) != standard_vectors()[1].digest_hex);
    CHECK(reduced == digest_padded("abc", Variant::Sha256, 22));
}

TEST_CASE("length and width errors") {
    CHECK_THROWS_AS(check_message_length(std::uint64_t{1} << 61, Variant::Sha256), std::length_error);
    CHECK_NOTHROW(check_message_length((std::uint64_t{1} << 61) - 1, Variant::Sha256));
    CHECK_NOTHROW(check_message_length(~std::uint64_t{0}, Variant::Sha512));

    MessageBlock b;
    b[3] = 0x100000000ULL;
    CHECK_THROWS_AS(check_width(b, params_for(Variant::Sha256)), std::invalid_argument);
    CHECK_NOTHROW(check_width(b, params_for(Variant::Sha512)));
    CHECK(parse_variant("sha512") == Variant::Sha512);
    CHECK_THROWS_AS(parse_variant("md5"), std::invalid_argument);
}
