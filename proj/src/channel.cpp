#include "grandsoft/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace grandsoft {

double noise_sigma(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument("noise_sigma: rate must be in (0,1)");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

SoftChannelOutput soft_from_llrs(std::vector<double> llrs) {
    SoftChannelOutput out;
    out.n = llrs.size();
    if (out.n == 0 || out.n > 64) throw std::invalid_argument("soft_from_llrs: need 1 <= n <= 64");
    out.llr = std::move(llrs);
    out.flip_prob.resize(out.n);
    for (std::size_t i = 0; i < out.n; ++i) {
        double l = out.llr[i];
        if (l > kLlrSaturation) l = kLlrSaturation;
        if (l < -kLlrSaturation) l = -kLlrSaturation;
        out.llr[i] = l;
        out.flip_prob[i] = 1.0 / (1.0 + std::exp(std::abs(l)));
        if (l < 0.0) out.hard |= std::uint64_t{1} << i;
    }
    return out;
}

SoftChannelOutput transmit(std::uint64_t codeword, std::size_t n, double ebn0_db, double rate,
                           std::mt19937_64& rng) {
    if (n == 0 || n > 64) throw std::invalid_argument("transmit: need 1 <= n <= 64");
    const double sigma = noise_sigma(ebn0_db, rate);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> llrs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double symbol = ((codeword >> i) & 1) ? -1.0 : 1.0;
        const double r = symbol + sigma * gauss(rng);
        llrs[i] = 2.0 * r / (sigma * sigma);
    }
    return soft_from_llrs(std::move(llrs));
}

SoftChannelOutput transmit(std::uint64_t codeword, std::size_t n, const ChannelConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return transmit(codeword, n, cfg.ebn0_db, cfg.rate, rng);
}

double noise_effect_probability(std::uint64_t pattern, const SoftChannelOutput& out) {
    if (out.n < 64 && (pattern >> out.n) != 0)
        throw std::out_of_range("noise_effect_probability: pattern position out of range");
    double p = 1.0;
    for (std::size_t i = 0; i < out.n; ++i)
        p *= ((pattern >> i) & 1) ? out.flip_prob[i] : 1.0 - out.flip_prob[i];
    return p;
}

}  // namespace grandsoft
