#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "grandsoft/channel.hpp"

namespace grandsoft {

/// Permutation sorting bit positions by ascending LLR magnitude, i.e. from
/// least to most reliable. Ties break by position index.
struct ReliabilityOrder {
    std::vector<int> perm;     // rank (0-based) -> position
    std::vector<int> rank_of;  // position -> rank (0-based)

    static ReliabilityOrder from_soft(const SoftChannelOutput& soft);
    static ReliabilityOrder trivial(std::size_t n);
};

/// A putative noise effect. `mask` lives in receiver position space;
/// `weight` is the generator's ordering weight (logistic weight for
/// ORBGRAND, Hamming weight for hard GRAND).
struct NoisePattern {
    std::uint64_t mask = 0;
    std::uint64_t weight = 0;
};

class PatternGenerator {
  public:
    virtual ~PatternGenerator() = default;
    /// Next pattern, or nullopt when all 2^n have been produced.
    virtual std::optional<NoisePattern> next() = 0;
};

/// Yields every subset of positions exactly once, in non-decreasing
/// logistic weight (sum of 1-based reliability ranks of the flipped
/// positions). Patterns are generated incrementally in rank space by
/// enumerating integer partitions of the weight into distinct parts <= n,
/// then mapped to position space through the reliability permutation.
class OrbgrandPatternGen final : public PatternGenerator {
  public:
    explicit OrbgrandPatternGen(ReliabilityOrder order);
    std::optional<NoisePattern> next() override;

  private:
    bool start_weight(std::uint64_t w);
    bool start_part_count(std::uint64_t m);
    bool advance_partition();

    ReliabilityOrder order_;
    std::uint64_t n_;
    std::uint64_t weight_ = 0;
    std::uint64_t parts_ = 0;              // number of flipped positions
    std::vector<std::uint64_t> excess_;    // descending, sum = weight - m(m+1)/2
    std::uint64_t max_weight_;
    bool done_ = false;
    bool emit_empty_ = true;
};

/// All subsets in non-decreasing Hamming weight, lexicographic by position
/// within a weight.
class HammingPatternGen final : public PatternGenerator {
  public:
    explicit HammingPatternGen(std::size_t n);
    std::optional<NoisePattern> next() override;

  private:
    std::size_t n_;
    std::size_t weight_ = 0;
    std::vector<int> comb_;
    bool fresh_ = true;
    bool done_ = false;
};

/// One guesswork query: pattern, its index q >= 1 in the order, and
/// P(N^n = z^{n,q}) under the channel's per-bit flip probabilities.
struct QueryRecord {
    std::uint64_t q = 0;
    NoisePattern pattern;
    double prob = 0.0;
};

/// Decorates a pattern stream with query indices and probabilities; the
/// consumer keeps the running sum. Single-consumer, stateful.
class QueryStream {
  public:
    QueryStream(std::unique_ptr<PatternGenerator> gen, const SoftChannelOutput& soft);
    std::optional<QueryRecord> next();

  private:
    std::unique_ptr<PatternGenerator> gen_;
    double base_prob_;
    std::vector<double> odds_;  // p_i / (1 - p_i)
    std::uint64_t q_ = 0;
};

}  // namespace grandsoft
