#include "grandsoft/decoder.hpp"

#include <stdexcept>

namespace grandsoft {

DecodeResult grand_decode(const LinearCode& code, const SoftChannelOutput& soft,
                          const DecodeConfig& cfg) {
    if (code.n() != soft.n) throw std::invalid_argument("grand_decode: code length != soft length");
    if (cfg.list_size == 0 || cfg.max_queries == 0)
        throw std::invalid_argument("grand_decode: list_size and max_queries must be >= 1");
    // Candidates differ from the hard decision only in the (typically few)
    // pattern bits, so test s(hard) ^ s(pattern) rather than a full syndrome.
    const std::uint64_t s0 = code.syndrome(soft.hard);
    const std::uint64_t hard = soft.hard;
    return grand_decode_with(
        code.n(),
        [&code, s0, hard](std::uint64_t candidate) {
            return (s0 ^ code.syndrome(candidate ^ hard)) == 0;
        },
        soft, cfg);
}

bool syndrome_decode_check(const LinearCode& code, const DecodeResult& result) {
    std::uint64_t prev_q = 0;
    for (const auto& e : result.found) {
        if (e.q <= prev_q) return false;
        prev_q = e.q;
        if (!code.is_codeword(e.word)) return false;
    }
    return true;
}

}  // namespace grandsoft
