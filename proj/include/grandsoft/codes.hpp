#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grandsoft/bitmatrix.hpp"

namespace grandsoft {

/// Binary linear block code of length n <= 64 defined by a parity-check
/// matrix H. Codewords and messages travel as bitmasks, bit i = position i.
/// Immutable after construction.
class LinearCode {
  public:
    /// Builds from an (n-k) x n parity-check matrix. Throws if H is rank
    /// deficient. A generator matrix is derived from the null space of H,
    /// preferring pivots in the last columns so that free (message)
    /// positions land at the front when H admits it.
    LinearCode(std::size_t n, std::size_t k, BitMatrix H);

    /// Builds from a systematic generator matrix G = [I_k | A]; H is
    /// derived as [A^T | I_{n-k}].
    static LinearCode from_systematic_generator(std::size_t n, std::size_t k,
                                                const std::vector<std::uint64_t>& g_rows);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const BitMatrix& parity_check() const { return h_; }
    const BitMatrix& generator() const { return g_; }

    /// Syndrome of a length-n word as an (n-k)-bit mask.
    std::uint64_t syndrome(std::uint64_t word) const;
    bool is_codeword(std::uint64_t word) const { return syndrome(word) == 0; }

    std::uint64_t encode(std::uint64_t message) const;

    /// True when encode() places the message verbatim in the first k bits.
    bool systematic() const { return systematic_; }

  private:
    LinearCode() : h_(1, 1), g_(1, 1) {}

    std::size_t n_ = 0, k_ = 0;
    BitMatrix h_;
    BitMatrix g_;
    std::vector<std::uint64_t> h_col_syndrome_;  // column i of H as a mask
    std::vector<std::uint64_t> g_rows_;
    bool systematic_ = false;

    void finish_setup();
};

/// Parity-check matrix drawn uniformly at random, redrawn until full rank.
/// Deterministic given the seed.
LinearCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed);

/// Systematic CRC code: the n-k check bits are the CRC remainder of the k
/// message bits. `poly` holds the generator polynomial with bit i = the
/// coefficient of x^i; its degree must equal n-k and bit 0 must be set.
LinearCode crc_code(std::size_t n, std::size_t k, std::uint64_t poly);

/// x^8 + x^6 + x^3 + x^2 + 1
inline constexpr std::uint64_t kDefaultCrc8Poly = 0x14D;

/// Extended BCH code: BCH of length 63 over GF(2^6) with an overall parity
/// bit appended. Supported dimensions are those reachable by an integer
/// error-correcting radius t, e.g. (64,57) and (64,51).
LinearCode ebch_code(std::size_t n, std::size_t k);

LinearCode load_parity_check(const std::string& path);
void save_parity_check(const LinearCode& code, const std::string& path);

}  // namespace grandsoft
