#include "grandsoft/softoutput.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace grandsoft {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double pow2m1(int n) { return std::exp2(static_cast<double>(n)) - 1.0; }

void check_query_vector(int n, int k, std::span<const std::uint64_t> q) {
    if (n < 1 || n > 64 || k < 1 || k >= n) throw std::invalid_argument("order statistics: need 0 < k < n <= 64");
    const std::size_t L = q.size();
    if (L == 0) throw std::invalid_argument("order statistics: empty query vector");
    if (static_cast<double>(L) > pow2m1(k)) throw std::invalid_argument("order statistics: L > 2^k - 1");
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < L; ++i) {
        if (q[i] <= prev) throw std::invalid_argument("order statistics: q must be strictly increasing from >= 1");
        prev = q[i];
    }
    if (static_cast<double>(q[L - 1]) > pow2m1(n))
        throw std::invalid_argument("order statistics: q_L > 2^n - 1");
}

}  // namespace

double log_falling(double a, std::uint64_t m) {
    if (m == 0) return 0.0;
    const double md = static_cast<double>(m);
    if (a < md) return kNegInf;
    if (md / a < 1e-9) {
        // sum_j log(1 - j/a) expanded; the direct lgamma difference loses
        // all precision when a is near 2^64.
        const double s1 = md * (md - 1.0) / 2.0;
        const double s2 = (md - 1.0) * md * (2.0 * md - 1.0) / 6.0;
        const double s3 = s1 * s1;
        return md * std::log(a) - s1 / a - s2 / (2.0 * a * a) - s3 / (3.0 * a * a * a);
    }
    double s = 0.0;
    for (std::uint64_t j = 0; j < m; ++j) s += std::log(a - static_cast<double>(j));
    return s;
}

double log_order_stat_pmf(int n, int k, std::span<const std::uint64_t> q) {
    check_query_vector(n, k, q);
    const std::size_t L = q.size();
    const double N = pow2m1(n), M = pow2m1(k);
    const std::uint64_t qL = q[L - 1];
    if (static_cast<double>(qL) < static_cast<double>(L)) return kNegInf;
    if (N - static_cast<double>(qL) < M - static_cast<double>(L)) return kNegInf;
    return log_falling(M, L) + log_falling(N - M, qL - L) - log_falling(N, qL);
}

double order_stat_pmf(int n, int k, std::span<const std::uint64_t> q) {
    return std::exp(log_order_stat_pmf(n, k, q));
}

double log_order_stat_tail_pmf(int n, int k, std::span<const std::uint64_t> q) {
    check_query_vector(n, k, q);
    const std::size_t L = q.size();
    const double N = pow2m1(n), M = pow2m1(k);
    const std::uint64_t qL = q[L - 1];
    if (N - static_cast<double>(qL) + 1.0 < M - static_cast<double>(L) + 1.0) return kNegInf;
    return log_falling(M, L - 1) + log_falling(N - M, qL - L) - log_falling(N, qL - 1);
}

double order_stat_tail_pmf(int n, int k, std::span<const std::uint64_t> q) {
    return std::exp(log_order_stat_tail_pmf(n, k, q));
}

SoftOutput exact_list_error_prob(int n, int k, std::span<const std::uint64_t> q,
                                 std::span<const double> g_pmf, double g_tail) {
    if (g_pmf.size() != q.size()) throw std::invalid_argument("exact_list_error_prob: size mismatch");
    if (g_tail < 0.0 || g_tail > 1.0) throw std::invalid_argument("exact_list_error_prob: g_tail not a probability");
    double sum_pmf = 0.0;
    for (double p : g_pmf) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("exact_list_error_prob: g_pmf not a probability");
        sum_pmf += p;
    }

    const double la = log_order_stat_pmf(n, k, q);    // placement factor of A
    const double lb = log_order_stat_tail_pmf(n, k, q);  // shared placement factor of each B_i

    SoftOutput out{0.0, Estimator::exact, false};
    const double log_num = std::log(g_tail) + la;
    const double log_den_b = std::log(sum_pmf) + lb;
    if (log_num == kNegInf && log_den_b == kNegInf) {
        out.p_error = 1.0;
        out.degenerate = true;
        return out;
    }
    if (log_num == kNegInf) {
        out.p_error = 0.0;
        return out;
    }
    if (log_den_b == kNegInf) {
        out.p_error = 1.0;
        return out;
    }
    out.p_error = 1.0 / (1.0 + std::exp(log_den_b - log_num));
    return out;
}

SoftOutput approx_list_error_prob(int n, int k, std::span<const std::uint64_t> q,
                                  std::span<const double> query_probs, double cumulative) {
    check_query_vector(n, k, q);
    if (query_probs.size() != q.size()) throw std::invalid_argument("approx_list_error_prob: size mismatch");
    if (cumulative < 0.0 || cumulative > 1.0 + 1e-9)
        throw std::invalid_argument("approx_list_error_prob: cumulative not a probability");
    const double phi = pow2m1(k) / pow2m1(n);
    double sum_probs = 0.0;
    for (double p : query_probs) sum_probs += p;
    const double num = std::max(0.0, 1.0 - cumulative) * phi;
    const double den = sum_probs + num;
    SoftOutput out{1.0, Estimator::approx_list, false};
    if (den == 0.0) {
        out.degenerate = true;
        return out;
    }
    out.p_error = num / den;
    return out;
}

SoftOutput approx_single_error_prob(int n, int k, std::uint64_t q1, double query_prob,
                                    double cumulative) {
    const std::uint64_t qv[1] = {q1};
    check_query_vector(n, k, qv);
    if (static_cast<double>(q1) >= std::exp2(n))
        throw std::invalid_argument("approx_single_error_prob: q1 >= 2^n");
    if (cumulative < 0.0 || cumulative > 1.0 + 1e-9)
        throw std::invalid_argument("approx_single_error_prob: cumulative not a probability");
    const double factor = pow2m1(k) / (std::exp2(n) - static_cast<double>(q1));
    const double num = std::max(0.0, 1.0 - cumulative) * factor;
    const double den = query_prob + num;
    SoftOutput out{1.0, Estimator::approx_single, false};
    if (den == 0.0) {
        out.degenerate = true;
        return out;
    }
    out.p_error = num / den;
    return out;
}

SoftOutput forney_estimate(std::span<const double> list_likelihoods) {
    if (list_likelihoods.empty()) throw std::invalid_argument("forney_estimate: empty list");
    double sum = 0.0, best = 0.0;
    for (double v : list_likelihoods) {
        if (v < 0.0) throw std::invalid_argument("forney_estimate: negative likelihood");
        sum += v;
        best = std::max(best, v);
    }
    if (sum == 0.0) throw std::invalid_argument("forney_estimate: all likelihoods zero");
    return SoftOutput{1.0 - best / sum, Estimator::forney, false};
}

SoftOutput forney_from_loglik(std::span<const double> list_logliks) {
    if (list_logliks.empty()) throw std::invalid_argument("forney_from_loglik: empty list");
    const double peak = *std::max_element(list_logliks.begin(), list_logliks.end());
    std::vector<double> lik(list_logliks.size());
    for (std::size_t i = 0; i < lik.size(); ++i) lik[i] = std::exp(list_logliks[i] - peak);
    return forney_estimate(lik);
}

double codeword_log_likelihood(const SoftChannelOutput& soft, std::uint64_t word) {
    double s = 0.0;
    for (std::size_t i = 0; i < soft.n; ++i)
        s += ((word >> i) & 1) ? -0.5 * soft.llr[i] : 0.5 * soft.llr[i];
    return s;
}

const char* estimator_name(Estimator e) {
    switch (e) {
        case Estimator::exact: return "exact";
        case Estimator::approx_list: return "approx_list";
        case Estimator::approx_single: return "approx_single";
        case Estimator::forney: return "forney";
    }
    return "?";
}

}  // namespace grandsoft
