#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grandsoft/channel.hpp"

namespace grandsoft {

enum class Estimator { exact, approx_list, approx_single, forney };

/// Predicted probability that a decoding (or decoding list) is incorrect.
struct SoftOutput {
    double p_error = 0.0;
    Estimator estimator = Estimator::exact;
    bool degenerate = false;  // set when the denominator vanished
};

/// log of the falling product a (a-1) ... (a-m+1); -inf when a < m.
/// Switches to a series expansion when m << a, which keeps the value
/// accurate for arguments near 2^64 where lgamma differences cancel badly.
double log_falling(double a, std::uint64_t m);

/// For W_(1) < ... < W_(2^k - 1), the rank-ordered version of 2^k - 1
/// draws without replacement from {1, ..., 2^n - 1}:
/// P(W_(1)=q_1, ..., W_(L)=q_L) = C(2^n-1-q_L, 2^k-1-L) / C(2^n-1, 2^k-1).
double log_order_stat_pmf(int n, int k, std::span<const std::uint64_t> q);
double order_stat_pmf(int n, int k, std::span<const std::uint64_t> q);

/// P(W_(1..L-1) = q_(1..L-1), W_(L) >= q_L) = C(2^n-q_L, 2^k-L) / C(2^n-1, 2^k-1).
double log_order_stat_tail_pmf(int n, int k, std::span<const std::uint64_t> q);
double order_stat_tail_pmf(int n, int k, std::span<const std::uint64_t> q);

/// Exact a-posteriori probability that the transmitted codeword is not in
/// a list found at query indices q, for a uniformly random codebook.
/// g_pmf[i] = P(G(N^n) = q_i); g_tail = P(G(N^n) > q_L).
SoftOutput exact_list_error_prob(int n, int k, std::span<const std::uint64_t> q,
                                 std::span<const double> g_pmf, double g_tail);

/// Geometric approximation with success probability (2^k-1)/(2^n-1).
SoftOutput approx_list_error_prob(int n, int k, std::span<const std::uint64_t> q,
                                  std::span<const double> query_probs, double cumulative);

/// Geometric approximation with success probability (2^k-1)/(2^n-q) that
/// accounts for the q-1 eliminated queries; single decoding only.
SoftOutput approx_single_error_prob(int n, int k, std::uint64_t q1, double query_prob,
                                    double cumulative);

/// Correctness estimated as max likelihood over summed list likelihoods;
/// p_error = 1 - that, so p_error <= 1 - 1/|list|. Scale-invariant.
SoftOutput forney_estimate(std::span<const double> list_likelihoods);
SoftOutput forney_from_loglik(std::span<const double> list_logliks);

/// log P(R^n = r | X^n = word) up to a word-independent constant,
/// computed from the LLRs.
double codeword_log_likelihood(const SoftChannelOutput& soft, std::uint64_t word);

const char* estimator_name(Estimator e);

}  // namespace grandsoft
