#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grandsoft/channel.hpp"
#include "grandsoft/codes.hpp"
#include "grandsoft/guesswork.hpp"

namespace grandsoft {

enum class DecodeMode { soft, hard };

struct DecodeConfig {
    std::size_t list_size = 1;
    std::uint64_t max_queries = std::uint64_t{1} << 22;
    DecodeMode mode = DecodeMode::soft;
};

struct ListEntry {
    std::uint64_t word = 0;
    std::uint64_t q = 0;        // query index, 1-based
    double prob = 0.0;          // P(N^n = z^{n,q})
    double cumulative = 0.0;    // sum of query probabilities up to and including q
};

struct DecodeResult {
    std::vector<ListEntry> found;  // q strictly increasing
    double cumulative_prob = 0.0;  // mass of all queries made, hits and misses
    std::uint64_t queries_used = 0;
    bool abandoned = false;
};

/// GRAND core loop with an arbitrary membership test. `is_member` receives
/// the candidate word (hard ^ pattern). Queries stop once `list_size`
/// codewords are found, the pattern stream is exhausted, or `max_queries`
/// is hit (abandonment; not an error).
template <class Member>
DecodeResult grand_decode_with(std::size_t n, Member&& is_member, const SoftChannelOutput& soft,
                               const DecodeConfig& cfg) {
    std::unique_ptr<PatternGenerator> gen;
    if (cfg.mode == DecodeMode::soft)
        gen = std::make_unique<OrbgrandPatternGen>(ReliabilityOrder::from_soft(soft));
    else
        gen = std::make_unique<HammingPatternGen>(n);

    QueryStream stream(std::move(gen), soft);
    DecodeResult res;
    while (res.queries_used < cfg.max_queries) {
        auto rec = stream.next();
        if (!rec) break;
        ++res.queries_used;
        res.cumulative_prob += rec->prob;
        const std::uint64_t candidate = soft.hard ^ rec->pattern.mask;
        if (is_member(candidate)) {
            res.found.push_back({candidate, rec->q, rec->prob, res.cumulative_prob});
            if (res.found.size() == cfg.list_size) break;
        }
    }
    res.abandoned = res.found.size() < cfg.list_size && res.queries_used == cfg.max_queries;
    return res;
}

DecodeResult grand_decode(const LinearCode& code, const SoftChannelOutput& soft,
                          const DecodeConfig& cfg);

/// Post-hoc validation: every found word is a codeword and the query
/// indices strictly increase.
bool syndrome_decode_check(const LinearCode& code, const DecodeResult& result);

}  // namespace grandsoft
