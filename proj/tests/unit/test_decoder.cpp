#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <vector>

#include "grandsoft/decoder.hpp"
#include "grandsoft/softoutput.hpp"

using namespace grandsoft;

namespace {

std::vector<std::uint64_t> codebook(const LinearCode& code) {
    std::vector<std::uint64_t> words;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << code.k()); ++m) words.push_back(code.encode(m));
    return words;
}

}  // namespace

TEST_CASE("noiseless input decodes at the first query") {
    auto code = random_linear_code(16, 11, 4);
    const std::uint64_t word = code.encode(0x35D);
    auto soft = transmit(word, 16, ChannelConfig{60.0, 11.0 / 16.0, 8});
    auto res = grand_decode(code, soft, DecodeConfig{1, 1 << 16, DecodeMode::soft});
    REQUIRE(res.found.size() == 1);
    CHECK(res.found[0].word == word);
    CHECK(res.found[0].q == 1);
    double empty = 1.0;
    for (double p : soft.flip_prob) empty *= 1.0 - p;
    CHECK(res.found[0].prob == doctest::Approx(empty));
    CHECK_FALSE(res.abandoned);
}

TEST_CASE("exhaustive query budget reaches the whole codebook") {
    auto code = random_linear_code(8, 4, 10);
    std::mt19937_64 rng(2);
    auto soft = transmit(code.encode(5), 8, 3.0, 0.5, rng);
    auto res = grand_decode(code, soft, DecodeConfig{16, 256, DecodeMode::soft});
    REQUIRE(res.found.size() == 16);
    std::set<std::uint64_t> got;
    for (auto& e : res.found) got.insert(e.word);
    auto words = codebook(code);
    CHECK(got == std::set<std::uint64_t>(words.begin(), words.end()));
    CHECK(res.cumulative_prob <= 1.0 + 1e-12);
}

TEST_CASE("hard-mode first hit is a minimum-distance codeword") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto code = random_linear_code(12, 6, 100 + trial % 7);
        const std::uint64_t word = code.encode(rng() & 0x3F);
        auto soft = transmit(word, 12, 1.0, 0.5, rng);
        auto res = grand_decode(code, soft, DecodeConfig{1, 1 << 12, DecodeMode::hard});
        REQUIRE(res.found.size() == 1);
        int got = std::popcount(res.found[0].word ^ soft.hard);
        int best = 64;
        for (auto w : codebook(code)) best = std::min(best, std::popcount(w ^ soft.hard));
        CHECK(got == best);
    }
}

TEST_CASE("soft-mode first hit is usually the maximum-likelihood codeword") {
    std::mt19937_64 rng(77);
    auto code = random_linear_code(12, 6, 9);
    auto words = codebook(code);
    int agree = 0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t word = words[rng() % words.size()];
        auto soft = transmit(word, 12, 4.0, 0.5, rng);
        auto res = grand_decode(code, soft, DecodeConfig{1, 1 << 12, DecodeMode::soft});
        REQUIRE_FALSE(res.found.empty());
        auto ml = *std::max_element(words.begin(), words.end(), [&](std::uint64_t a, std::uint64_t b) {
            return codeword_log_likelihood(soft, a) < codeword_log_likelihood(soft, b);
        });
        if (res.found[0].word == ml) ++agree;
    }
    CHECK(agree >= trials * 95 / 100);
}

TEST_CASE("decode result invariants under fuzzing") {
    std::mt19937_64 rng(123);
    for (int t = 0; t < 2000; ++t) {
        auto code = random_linear_code(14, 7, 50 + t % 11);
        const double ebn0 = -2.0 + 8.0 * (t % 13) / 12.0;
        auto soft = transmit(code.encode(rng() & 0x7F), 14, ebn0, 0.5, rng);
        auto res = grand_decode(code, soft, DecodeConfig{3, 1 << 14, DecodeMode::soft});
        CHECK(syndrome_decode_check(code, res));
        CHECK(res.cumulative_prob <= 1.0 + 1e-12);
        std::set<std::uint64_t> distinct;
        double prev_cum = 0.0;
        for (auto& e : res.found) {
            distinct.insert(e.word);
            CHECK(e.cumulative >= prev_cum);
            CHECK(e.cumulative <= res.cumulative_prob + 1e-15);
            prev_cum = e.cumulative;
        }
        CHECK(distinct.size() == res.found.size());
    }
}

TEST_CASE("syndrome_decode_check rejects corrupted results") {
    auto code = crc_code(8, 4, 0x13);
    std::mt19937_64 rng(5);
    auto soft = transmit(code.encode(3), 8, 4.0, 0.5, rng);
    auto res = grand_decode(code, soft, DecodeConfig{2, 256, DecodeMode::soft});
    REQUIRE(res.found.size() == 2);
    CHECK(syndrome_decode_check(code, res));
    auto bad = res;
    bad.found[1].word ^= 1;  // likely off the codebook; check for the definite case
    if (!code.is_codeword(bad.found[1].word)) CHECK_FALSE(syndrome_decode_check(code, bad));
    auto swapped = res;
    std::swap(swapped.found[0], swapped.found[1]);
    CHECK_FALSE(syndrome_decode_check(code, swapped));
}

TEST_CASE("abandonment is reported, not thrown") {
    auto code = random_linear_code(32, 16, 6);
    std::mt19937_64 rng(9);
    auto soft = transmit(code.encode(0xFFFF), 32, -5.0, 0.5, rng);
    auto res = grand_decode(code, soft, DecodeConfig{4, 8, DecodeMode::soft});
    CHECK(res.queries_used == 8);
    if (res.found.size() < 4) CHECK(res.abandoned);
}

TEST_CASE("dimension mismatch throws") {
    auto code = random_linear_code(16, 8, 1);
    std::mt19937_64 rng(2);
    auto soft = transmit(0, 12, 4.0, 0.5, rng);
    CHECK_THROWS(grand_decode(code, soft, DecodeConfig{}));
}

TEST_CASE("custom membership decoding covers arbitrary codebooks") {
    std::mt19937_64 rng(40);
    std::set<std::uint64_t> book;
    while (book.size() < 16) book.insert(rng() & 0x3FF);
    const std::uint64_t word = *std::next(book.begin(), 7);
    auto soft = transmit(word, 10, 8.0, 0.4, rng);
    auto res = grand_decode_with(
        10, [&](std::uint64_t c) { return book.count(c) != 0; }, soft,
        DecodeConfig{2, 1 << 10, DecodeMode::soft});
    REQUIRE(res.found.size() == 2);
    CHECK(book.count(res.found[0].word) == 1);
    CHECK(res.found[0].q < res.found[1].q);
}
