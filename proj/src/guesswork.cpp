#include "grandsoft/guesswork.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace grandsoft {

ReliabilityOrder ReliabilityOrder::from_soft(const SoftChannelOutput& soft) {
    ReliabilityOrder o;
    o.perm.resize(soft.n);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    std::stable_sort(o.perm.begin(), o.perm.end(), [&](int a, int b) {
        return std::abs(soft.llr[a]) < std::abs(soft.llr[b]);
    });
    o.rank_of.resize(soft.n);
    for (std::size_t r = 0; r < o.perm.size(); ++r) o.rank_of[o.perm[r]] = static_cast<int>(r);
    return o;
}

ReliabilityOrder ReliabilityOrder::trivial(std::size_t n) {
    ReliabilityOrder o;
    o.perm.resize(n);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    o.rank_of = o.perm;
    return o;
}

OrbgrandPatternGen::OrbgrandPatternGen(ReliabilityOrder order)
    : order_(std::move(order)), n_(order_.perm.size()) {
    if (n_ == 0 || n_ > 64) throw std::invalid_argument("OrbgrandPatternGen: need 1 <= n <= 64");
    max_weight_ = n_ * (n_ + 1) / 2;
}

bool OrbgrandPatternGen::start_part_count(std::uint64_t m) {
    for (; m <= n_ && m * (m + 1) / 2 <= weight_; ++m) {
        const std::uint64_t excess_sum = weight_ - m * (m + 1) / 2;
        const std::uint64_t cap = n_ - m;
        if (excess_sum > m * cap) continue;
        parts_ = m;
        excess_.assign(m, 0);
        std::uint64_t rest = excess_sum;
        for (std::uint64_t i = 0; i < m && rest; ++i) {
            excess_[i] = std::min(cap, rest);
            rest -= excess_[i];
        }
        return true;
    }
    return false;
}

bool OrbgrandPatternGen::start_weight(std::uint64_t w) {
    for (; w <= max_weight_; ++w) {
        weight_ = w;
        if (start_part_count(1)) return true;
    }
    return false;
}

// Next partition of the excess sum into `parts_` non-increasing parts
// bounded by n - parts_, in reverse lexicographic order.
bool OrbgrandPatternGen::advance_partition() {
    const std::uint64_t m = parts_;
    if (m < 2) return false;
    std::uint64_t tail = excess_[m - 1];
    for (std::int64_t i = static_cast<std::int64_t>(m) - 2; i >= 0; --i) {
        if (excess_[i] > 0) {
            const std::uint64_t cand = excess_[i] - 1;
            std::uint64_t rest = tail + 1;
            const std::uint64_t slots = m - 1 - i;
            if (rest <= cand * slots) {
                excess_[i] = cand;
                for (std::uint64_t j = i + 1; j < m; ++j) {
                    excess_[j] = std::min(cand, rest);
                    rest -= excess_[j];
                }
                return true;
            }
        }
        tail += excess_[i];
    }
    return false;
}

std::optional<NoisePattern> OrbgrandPatternGen::next() {
    if (done_) return std::nullopt;
    if (emit_empty_) {
        emit_empty_ = false;
        if (!start_weight(1)) done_ = true;
        return NoisePattern{0, 0};
    }

    // Ranks, ascending: reverse the excess parts and add 1-based offsets.
    NoisePattern p{0, weight_};
    for (std::uint64_t i = 1; i <= parts_; ++i) {
        const std::uint64_t rank = excess_[parts_ - i] + i;  // 1-based reliability rank
        p.mask |= std::uint64_t{1} << order_.perm[rank - 1];
    }

    if (!advance_partition() && !start_part_count(parts_ + 1) && !start_weight(weight_ + 1))
        done_ = true;
    return p;
}

HammingPatternGen::HammingPatternGen(std::size_t n) : n_(n) {
    if (n_ == 0 || n_ > 64) throw std::invalid_argument("HammingPatternGen: need 1 <= n <= 64");
}

std::optional<NoisePattern> HammingPatternGen::next() {
    if (done_) return std::nullopt;
    NoisePattern p{0, weight_};
    for (int pos : comb_) p.mask |= std::uint64_t{1} << pos;

    // Advance: next combination in lexicographic order, else next weight.
    bool advanced = false;
    for (std::int64_t i = static_cast<std::int64_t>(comb_.size()) - 1; i >= 0; --i) {
        if (comb_[i] < static_cast<int>(n_ - comb_.size() + i)) {
            ++comb_[i];
            for (std::size_t j = i + 1; j < comb_.size(); ++j) comb_[j] = comb_[j - 1] + 1;
            advanced = true;
            break;
        }
    }
    if (!advanced) {
        ++weight_;
        if (weight_ > n_) {
            done_ = true;
        } else {
            comb_.resize(weight_);
            std::iota(comb_.begin(), comb_.end(), 0);
        }
    }
    return p;
}

QueryStream::QueryStream(std::unique_ptr<PatternGenerator> gen, const SoftChannelOutput& soft)
    : gen_(std::move(gen)) {
    base_prob_ = 1.0;
    odds_.resize(soft.n);
    for (std::size_t i = 0; i < soft.n; ++i) {
        base_prob_ *= 1.0 - soft.flip_prob[i];
        odds_[i] = soft.flip_prob[i] / (1.0 - soft.flip_prob[i]);
    }
}

std::optional<QueryRecord> QueryStream::next() {
    auto p = gen_->next();
    if (!p) return std::nullopt;
    double prob = base_prob_;
    std::uint64_t m = p->mask;
    while (m) {
        prob *= odds_[std::countr_zero(m)];
        m &= m - 1;
    }
    return QueryRecord{++q_, *p, prob};
}

}  // namespace grandsoft
