#include <stdexcept>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "stepsha/codec.hpp"
#include "stepsha/corpus.hpp"

using namespace stepsha;

namespace {

MessageBlock random_block(std::mt19937_64& rng, const Sha2Params& p) {
    MessageBlock b;
    for (auto& w : b.words) w = rng() & p.mask;
    return b;
}

Variant random_variant(std::mt19937_64& rng) { return rng() % 2 ? Variant::Sha512 : Variant::Sha256; }

CollisionPair random_pair(std::mt19937_64& rng) {
    const Variant v = random_variant(rng);
    const Sha2Params& p = params_for(v);
    return CollisionPair{v, 1 + static_cast<int>(rng() % static_cast<unsigned>(p.max_steps)),
                         random_block(rng, p), random_block(rng, p)};
}

DifferentialPath random_path(std::mt19937_64& rng) {
    const Variant v = random_variant(rng);
    const Sha2Params& p = params_for(v);
    DifferentialPath path{v, std::vector<DeltaVector>(rng() % 30)};
    for (DeltaVector& row : path.steps)
        for (Delta& d : row.regs) d.value = (rng() % 3 == 0) ? 0 : rng() & p.mask;
    return path;
}

SearchReport random_report(std::mt19937_64& rng) {
    SearchReport r;
    r.variant = random_variant(rng);
    r.strategy = "strategy-" + std::to_string(rng() % 1000) + " \"quoted\" \xc3\xa9";
    r.note = rng() % 2 ? "" : "note";
    r.steps = 1 + static_cast<int>(rng() % 64);
    r.seed = rng();
    r.trials = rng() >> 1;
    r.successes = r.trials ? rng() % r.trials : 0;
    const std::size_t n = rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
        CollisionPair pair = random_pair(rng);
        pair.variant = r.variant;
        pair.step_count = std::min(pair.step_count, params_for(r.variant).max_steps);
        const Sha2Params& p = params_for(r.variant);
        pair.m1 = random_block(rng, p);
        pair.m2 = random_block(rng, p);
        r.collisions.push_back(StoredCollision{rng(), pair});
    }
    r.unlisted_successes = rng() % 100;
    r.path_checked = rng() % 2;
    const std::size_t h = rng() % 5;
    for (std::size_t i = 0; i < h; ++i) r.divergence_histogram[static_cast<int>(rng() % 80)] = rng() % 100000;
    r.elapsed_seconds = static_cast<double>(rng() % 1000000) / 997.0;
    return r;
}

}  // namespace

TEST_CASE("builtin corpus") {
    const VectorCorpus& c = builtin_corpus();
    CHECK(c.sha256_pair.m1[0] == 0xa0263fa5);
    CHECK(c.sha512_pair.m2[15] == 0);
    for (std::size_t i = 0; i < 8; ++i) CHECK(c.sha256_pair.m1[i] == c.sha256_pair.m2[i]);
    CHECK(c.sha256_pair.step_count == 22);
    CHECK(c.sha512_pair.step_count == 22);
    CHECK(c.sha256_pair.variant == Variant::Sha256);
    CHECK(c.sha512_pair.variant == Variant::Sha512);
    check_pair(c.sha256_pair);
    check_pair(c.sha512_pair);
}

TEST_CASE("corpus checksum") {
    // SHA-256 of the four blocks in block-file form followed by the 22 path rows,
    // computed externally from the transcribed tables.
    const VectorCorpus& c = builtin_corpus();
    std::string text = format_block(c.sha256_pair.m1, Variant::Sha256) +
                       format_block(c.sha256_pair.m2, Variant::Sha256) +
                       format_block(c.sha512_pair.m1, Variant::Sha512) +
                       format_block(c.sha512_pair.m2, Variant::Sha512);
    const Sha2Params& p = params_for(Variant::Sha256);
    for (const DeltaVector& row : c.sha256_path.steps) {
        for (std::size_t r = 0; r < 8; ++r) text += format_word(row[r].value, p) + (r == 7 ? "\n" : " ");
    }
    CHECK(digest_hex(digest_padded(text, Variant::Sha256, 64), Variant::Sha256) ==
          "99fddde8765cf1d6826afb58594f1edba9a08fc7e3a314f0a10f371b80ebcf45");
}

TEST_CASE("parse_block") {
    CHECK(parse_block(kSha256FirstMessageText, Variant::Sha256) == builtin_corpus().sha256_pair.m1);

    std::string zeros;
    for (int i = 0; i < 16; ++i) zeros += "00000000\n";
    CHECK(parse_block(zeros, Variant::Sha256) == MessageBlock{});

    SUBCASE("case-insensitive, comments skipped") {
        std::string text = "# first message\n";
        text += "A0263FA5 707425fb 618cd8d2 7d58f729 1eb9a964 19f88f1c 34e35071 f28d40e3\n";
        text += "  # indented comment\n";
        text += "b43e29b8\t1871a949 e2e01390 aaf3823e 8d41a28e 7f22ee02 7c625999 183e603f";
        CHECK(parse_block(text, Variant::Sha256) == builtin_corpus().sha256_pair.m1);
    }
    SUBCASE("15 tokens") {
        std::string text;
        for (int i = 0; i < 15; ++i) text += "00000000 ";
        try {
            parse_block(text, Variant::Sha256);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.token_index() == 15);
        }
    }
    SUBCASE("17 tokens") {
        std::string text;
        for (int i = 0; i < 17; ++i) text += "00000000 ";
        try {
            parse_block(text, Variant::Sha256);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.token_index() == 16);
        }
    }
    SUBCASE("bad tokens") {
        for (const char* bad : {"0000000", "000000000", "0000000g", "0x000000"}) {
            std::string text;
            for (int i = 0; i < 16; ++i) text += (i == 4 ? std::string(bad) : "00000000") + " ";
            try {
                parse_block(text, Variant::Sha256);
                FAIL("expected ParseError");
            } catch (const ParseError& e) {
                CHECK(e.token_index() == 4);
            }
        }
    }
    SUBCASE("width follows the variant") {
        CHECK_THROWS_AS(parse_block(zeros, Variant::Sha512), ParseError);
    }
}

TEST_CASE("format_block round-trip") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const Variant v = random_variant(rng);
        const MessageBlock b = random_block(rng, params_for(v));
        const std::string text = format_block(b, v);
        REQUIRE(parse_block(text, v) == b);
        for (char ch : text) REQUIRE_FALSE((ch >= 'A' && ch <= 'F'));
    }
}

TEST_CASE("parse_iv") {
    const RegisterState iv = parse_iv("6a09e667 bb67ae85 3c6ef372 a54ff53a\n510e527f 9b05688c 1f83d9ab 5be0cd19\n",
                                      Variant::Sha256);
    CHECK(iv == standard_iv(params_for(Variant::Sha256)));
    CHECK_THROWS_AS(parse_iv("6a09e667", Variant::Sha256), ParseError);
}

TEST_CASE("pair codec") {
    const CollisionPair& t1 = builtin_corpus().sha256_pair;
    CHECK(decode_pair(encode_pair(t1)) == t1);

    const auto j = nlohmann::json::parse(encode_pair(t1));
    CHECK(j["variant"] == "sha256");
    CHECK(j["steps"] == 22);
    CHECK(j["m1"][0] == "a0263fa5");
    CHECK(j["m2"][15] == "00000000");

    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        const CollisionPair pair = random_pair(rng);
        REQUIRE(decode_pair(encode_pair(pair)) == pair);
    }

    SUBCASE("seven-digit word") {
        auto bad = j;
        bad["m1"][3] = "7d58f72";
        try {
            decode_pair(bad.dump());
            FAIL("expected DecodeError");
        } catch (const DecodeError& e) {
            CHECK(e.field() == "m1[3]");
        }
    }
    SUBCASE("width mismatch with declared variant") {
        auto bad = j;
        bad["variant"] = "sha512";
        try {
            decode_pair(bad.dump());
            FAIL("expected DecodeError");
        } catch (const DecodeError& e) {
            CHECK(e.field() == "m1[0]");
        }
    }
    SUBCASE("missing and malformed fields") {
        auto missing = j;
        missing.erase("m2");
        CHECK_THROWS_WITH_AS(decode_pair(missing.dump()), "m2: missing field", DecodeError);
        auto short_block = j;
        short_block["m1"].erase(0);
        CHECK_THROWS_AS(decode_pair(short_block.dump()), DecodeError);
        auto steps = j;
        steps["steps"] = 65;
        CHECK_THROWS_AS(decode_pair(steps.dump()), DecodeError);
        CHECK_THROWS_AS(decode_pair("{not json"), DecodeError);
        CHECK_THROWS_AS(decode_pair("[]"), DecodeError);
    }
}

TEST_CASE("path codec") {
    const DifferentialPath& path = builtin_corpus().sha256_path;
    const std::string text = encode_path(path);
    CHECK(decode_path(text) == path);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["steps"][8]["da"] == "00000001");
    CHECK(j["steps"][9]["de"] == "ffffffff");
    CHECK(j["steps"][0]["dh"] == "00000000");

    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const DifferentialPath p = random_path(rng);
        REQUIRE(decode_path(encode_path(p)) == p);
    }

    auto bad = j;
    bad["steps"][8].erase("de");
    CHECK_THROWS_WITH_AS(decode_path(bad.dump()), "steps[8].de: missing field", DecodeError);
    bad = j;
    bad["steps"][3]["db"] = "zz000000";
    try {
        decode_path(bad.dump());
        FAIL("expected DecodeError");
    } catch (const DecodeError& e) {
        CHECK(e.field() == "steps[3].db");
    }
}

TEST_CASE("report codec") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        const SearchReport r = random_report(rng);
        REQUIRE(decode_report(encode_report(r)) == r);
    }

    SearchReport r;
    r.strategy = "replay sha256";
    r.trials = 1024;
    r.successes = 32;
    const auto j = nlohmann::json::parse(encode_report(r));
    CHECK(j["successes"] == 32);

    auto bad = j;
    bad.erase("trials");
    CHECK_THROWS_WITH_AS(decode_report(bad.dump()), "trials: missing field", DecodeError);
    bad = j;
    bad["successes"] = 2000;
    CHECK_THROWS_AS(decode_report(bad.dump()), DecodeError);
    bad = j;
    bad["divergence_histogram"]["x"] = 3;
    CHECK_THROWS_AS(decode_report(bad.dump()), DecodeError);
    bad = j;
    bad["trials"] = -1;
    CHECK_THROWS_AS(decode_report(bad.dump()), DecodeError);
}
