#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace grandsoft {

/// LLR convention: llr[i] = log P(bit=0 | r) / P(bit=1 | r), so positive
/// values favor bit 0. LLRs are saturated at +/-40 to keep flip
/// probabilities strictly positive.
struct SoftChannelOutput {
    std::size_t n = 0;
    std::vector<double> llr;
    std::vector<double> flip_prob;  // 1 / (1 + exp(|llr|))
    std::uint64_t hard = 0;         // sign decisions, bit i = 1 iff llr[i] < 0
};

struct ChannelConfig {
    double ebn0_db = 0.0;
    double rate = 0.5;  // k/n
    std::uint64_t seed = 0;
};

double noise_sigma(double ebn0_db, double rate);

/// BPSK over AWGN: bit b maps to symbol 1-2b, i.i.d. Gaussian noise of
/// variance sigma^2 is added, llr[i] = 2 r[i] / sigma^2.
SoftChannelOutput transmit(std::uint64_t codeword, std::size_t n, const ChannelConfig& cfg);
SoftChannelOutput transmit(std::uint64_t codeword, std::size_t n, double ebn0_db, double rate,
                           std::mt19937_64& rng);

/// Builds the derived fields from raw LLRs (saturation applied).
SoftChannelOutput soft_from_llrs(std::vector<double> llrs);

/// Probability that the channel flips exactly the positions in `pattern`:
/// prod_{i in pattern} p_i * prod_{i not in pattern} (1 - p_i).
double noise_effect_probability(std::uint64_t pattern, const SoftChannelOutput& out);

inline constexpr double kLlrSaturation = 40.0;

}  // namespace grandsoft
