#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <vector>

#include "grandsoft/codes.hpp"

using namespace grandsoft;

namespace {

std::vector<std::uint64_t> codebook(const LinearCode& code) {
    std::vector<std::uint64_t> words;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << code.k()); ++m) words.push_back(code.encode(m));
    return words;
}

int min_distance(const LinearCode& code) {
    int best = 64;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << code.k()); ++m)
        best = std::min(best, std::popcount(code.encode(m)));
    return best;
}

}  // namespace

TEST_CASE("BitMatrix basics") {
    BitMatrix m(3, 5);
    CHECK_FALSE(m.get(2, 4));
    m.set(2, 4, true);
    CHECK(m.get(2, 4));
    CHECK(m.rank() == 1);
    CHECK(m.rank() == 1);  // idempotent
    CHECK(BitMatrix::identity(7).rank() == 7);
    CHECK_THROWS(m.get(3, 0));
    CHECK_THROWS(m.set(0, 5, true));
}

TEST_CASE("random linear code construction") {
    auto tiny = random_linear_code(2, 1, 7);
    CHECK(tiny.parity_check().row_mask(0) != 0);

    auto big = random_linear_code(64, 57, 3);
    CHECK(big.parity_check().rank() == 7);
    CHECK(big.generator().rank() == 57);

    auto small = random_linear_code(8, 4, 11);
    auto words = codebook(small);
    CHECK(std::set<std::uint64_t>(words.begin(), words.end()).size() == 16);
    for (auto w : words) CHECK(small.is_codeword(w));

    // determinism
    auto again = random_linear_code(8, 4, 11);
    CHECK(again.parity_check() == small.parity_check());
    auto other = random_linear_code(8, 4, 12);
    CHECK_FALSE(other.parity_check() == small.parity_check());

    CHECK_THROWS(random_linear_code(8, 8, 1));
    CHECK_THROWS(random_linear_code(8, 0, 1));
    CHECK_THROWS(random_linear_code(65, 5, 1));
}

TEST_CASE("CRC code: parity-bit special case") {
    auto code = crc_code(4, 3, 0b11);  // x + 1
    auto words = codebook(code);
    std::set<std::uint64_t> got(words.begin(), words.end());
    std::set<std::uint64_t> even;
    for (std::uint64_t w = 0; w < 16; ++w)
        if ((std::popcount(w) & 1) == 0) even.insert(w);
    CHECK(got == even);
}

TEST_CASE("CRC code: every encoding passes an independent CRC check") {
    auto code = crc_code(64, 56, kDefaultCrc8Poly);
    for (std::uint64_t m : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{0xDEADBEEFCAFEULL},
                            (std::uint64_t{1} << 56) - 1}) {
        std::uint64_t w = code.encode(m);
        CHECK((w & ((std::uint64_t{1} << 56) - 1)) == m);  // systematic
        // long division of the codeword polynomial: message at x^8.., checks at x^0..x^7
        std::uint64_t poly_val = (m << 8) ^ (w >> 56);
        for (int b = 63; b >= 8; --b)
            if ((poly_val >> b) & 1) poly_val ^= kDefaultCrc8Poly << (b - 8);
        CHECK(poly_val == 0);
    }
    CHECK_THROWS(crc_code(64, 56, 0x13));   // degree mismatch
    CHECK_THROWS(crc_code(64, 56, 0x14C));  // zero constant term
}

TEST_CASE("CRC code: minimum distance agrees with the H-defined null space") {
    auto code = crc_code(10, 6, 0x13);  // x^4 + x + 1
    int d_enc = min_distance(code);
    int d_null = 64;
    int count = 0;
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << 10); ++w) {
        if (code.is_codeword(w)) {
            d_null = std::min(d_null, std::popcount(w));
            ++count;
        }
    }
    CHECK(d_enc == d_null);
    CHECK(count == (1 << 6) - 1);
}

TEST_CASE("extended BCH codes") {
    auto c57 = ebch_code(64, 57);
    CHECK(c57.parity_check().rank() == 7);
    auto c51 = ebch_code(64, 51);
    CHECK(c51.parity_check().rank() == 13);
    CHECK_THROWS(ebch_code(64, 60));
    CHECK_THROWS(ebch_code(63, 57));

    for (const auto* code : {&c57, &c51}) {
        // all rows of G orthogonal to all rows of H
        for (std::size_t i = 0; i < code->k(); ++i)
            CHECK(code->syndrome(code->generator().row_mask(i)) == 0);
        // extension bit forces even weights
        std::mt19937_64 rng(5);
        for (int t = 0; t < 10000; ++t) {
            std::uint64_t m = rng() & ((std::uint64_t{1} << code->k()) - 1);
            CHECK((std::popcount(code->encode(m)) & 1) == 0);
        }
    }
}

TEST_CASE("eBCH(64,57) has minimum distance 4") {
    auto code = ebch_code(64, 57);
    // weight 1 or 2 impossible: columns of H nonzero and pairwise distinct
    std::vector<std::uint64_t> cols(64);
    for (int i = 0; i < 64; ++i) {
        cols[i] = code.syndrome(std::uint64_t{1} << i);
        CHECK(cols[i] != 0);
    }
    std::set<std::uint64_t> uniq(cols.begin(), cols.end());
    CHECK(uniq.size() == 64);
    // even-weight code, so weight 3 impossible; exhibit a weight-4 word
    bool found = false;
    for (int a = 0; a < 64 && !found; ++a)
        for (int b = a + 1; b < 64 && !found; ++b)
            for (int c = b + 1; c < 64 && !found; ++c)
                for (int d = c + 1; d < 64 && !found; ++d)
                    if ((cols[a] ^ cols[b] ^ cols[c] ^ cols[d]) == 0) found = true;
    CHECK(found);
}

TEST_CASE("encode basics") {
    auto code = crc_code(8, 4, 0x13);
    CHECK(code.encode(0) == 0);
    auto words = codebook(code);
    CHECK(std::set<std::uint64_t>(words.begin(), words.end()).size() == 16);
    CHECK(code.systematic());
    for (std::uint64_t m = 0; m < 16; ++m) CHECK((code.encode(m) & 0xF) == m);
    CHECK_THROWS(code.encode(1 << 4));
}

TEST_CASE("is_codeword") {
    auto code = crc_code(8, 4, 0x13);
    CHECK(code.is_codeword(0));
    CHECK(min_distance(code) >= 2);
    for (std::uint64_t m = 0; m < 16; ++m) {
        std::uint64_t w = code.encode(m);
        CHECK(code.is_codeword(w));
        for (int b = 0; b < 8; ++b) CHECK_FALSE(code.is_codeword(w ^ (std::uint64_t{1} << b)));
    }
    CHECK_THROWS(code.is_codeword(std::uint64_t{1} << 9));
}

TEST_CASE("codebook size is 2^k for every family") {
    std::vector<LinearCode> codes;
    codes.push_back(random_linear_code(12, 7, 2));
    codes.push_back(crc_code(12, 8, 0x13));
    for (const auto& code : codes) {
        auto words = codebook(code);
        CHECK(std::set<std::uint64_t>(words.begin(), words.end()).size() ==
              std::uint64_t{1} << code.k());
        for (auto w : words) CHECK(code.is_codeword(w));
    }
}

TEST_CASE("parity-check file round trip") {
    auto code = random_linear_code(16, 9, 21);
    const char* path = "pc_roundtrip.txt";
    save_parity_check(code, path);
    auto loaded = load_parity_check(path);
    CHECK(loaded.parity_check() == code.parity_check());
    CHECK(loaded.n() == 16);
    CHECK(loaded.k() == 9);
    std::remove(path);
}

TEST_CASE("parity-check file errors") {
    {
        std::ofstream out("pc_bad.txt");
        out << "16 nine\n";
    }
    CHECK_THROWS(load_parity_check("pc_bad.txt"));
    {
        std::ofstream out("pc_rankdef.txt");
        out << "6 4\n110000\n110000\n";
    }
    CHECK_THROWS(load_parity_check("pc_rankdef.txt"));
    CHECK_THROWS(load_parity_check("no_such_file.txt"));
    std::remove("pc_bad.txt");
    std::remove("pc_rankdef.txt");
}
