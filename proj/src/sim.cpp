#include "grandsoft/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

namespace grandsoft {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Runs `trials` independent units across a worker pool; `fn(trial)` must
// only write to its own slot, so aggregation stays schedule-independent.
template <class Fn>
void parallel_trials(std::uint64_t trials, int threads, Fn&& fn) {
    unsigned p = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
    if (p == 0) p = 1;
    if (p == 1 || trials < 2 * p) {
        for (std::uint64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < p; ++w) {
        const std::uint64_t lo = trials * w / p, hi = trials * (w + 1) / p;
        pool.emplace_back([lo, hi, &fn] {
            for (std::uint64_t t = lo; t < hi; ++t) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

struct TrialDecode {
    std::uint64_t codeword = 0;
    DecodeResult result;
    SoftChannelOutput soft;
};

TrialDecode run_trial(const LinearCode& code, double ebn0_db, std::uint64_t seed,
                      const DecodeConfig& dcfg) {
    std::mt19937_64 rng(seed);
    const std::uint64_t msg_mask = code.k() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << code.k()) - 1;
    TrialDecode t;
    t.codeword = code.encode(rng() & msg_mask);
    const double rate = static_cast<double>(code.k()) / static_cast<double>(code.n());
    t.soft = transmit(t.codeword, code.n(), ebn0_db, rate, rng);
    t.result = grand_decode(code, t.soft, dcfg);
    return t;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    return splitmix64(splitmix64(seed ^ splitmix64(stream)) ^ trial);
}

LinearCode build_code(const CodeSpec& spec) {
    switch (spec.family) {
        case CodeFamily::rlc: return random_linear_code(spec.n, spec.k, spec.seed);
        case CodeFamily::crc: return crc_code(spec.n, spec.k, spec.poly);
        case CodeFamily::ebch: return ebch_code(spec.n, spec.k);
    }
    throw std::invalid_argument("build_code: unknown family");
}

Estimator estimator_from_name(const std::string& name) {
    if (name == "exact") return Estimator::exact;
    if (name == "approx_list") return Estimator::approx_list;
    if (name == "approx_single") return Estimator::approx_single;
    if (name == "forney") return Estimator::forney;
    throw std::invalid_argument("unknown estimator: " + name);
}

std::vector<CalibrationBin> run_calibration(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("run_calibration: trials must be >= 1");
    if (cfg.bins < 1) throw std::invalid_argument("run_calibration: bins must be >= 1");
    const LinearCode code = build_code(cfg.code);
    DecodeConfig dcfg{cfg.list_size, cfg.max_queries, cfg.mode};

    struct TrialOut {
        double predicted[4];
        bool wrong[4];
    };
    const std::size_t ne = cfg.estimators.size();
    if (ne == 0 || ne > 4) throw std::invalid_argument("run_calibration: need 1..4 estimators");

    std::vector<CalibrationBin> table;
    for (std::size_t si = 0; si < cfg.ebn0_db.size(); ++si) {
        const double ebn0 = cfg.ebn0_db[si];
        std::vector<TrialOut> outs(cfg.trials);
        parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t trial) {
            const TrialDecode t = run_trial(code, ebn0, trial_seed(cfg.seed, si, trial), dcfg);
            const auto& found = t.result.found;
            const bool top_wrong = found.empty() || found[0].word != t.codeword;
            bool in_list = false;
            for (const auto& e : found)
                if (e.word == t.codeword) in_list = true;

            std::vector<std::uint64_t> qs(found.size());
            std::vector<double> probs(found.size());
            for (std::size_t i = 0; i < found.size(); ++i) {
                qs[i] = found[i].q;
                probs[i] = found[i].prob;
            }
            const int n = static_cast<int>(code.n()), k = static_cast<int>(code.k());

            for (std::size_t e = 0; e < ne; ++e) {
                double pred = 1.0;
                bool wrong = true;
                switch (cfg.estimators[e]) {
                    case Estimator::approx_single:
                        if (!found.empty())
                            pred = approx_single_error_prob(n, k, found[0].q, found[0].prob,
                                                            found[0].cumulative)
                                       .p_error;
                        wrong = top_wrong;
                        break;
                    case Estimator::approx_list:
                        if (!found.empty())
                            pred = approx_list_error_prob(n, k, qs, probs,
                                                          found.back().cumulative)
                                      .p_error;
                        wrong = !in_list;
                        break;
                    case Estimator::exact:
                        if (!found.empty()) {
                            const double tail =
                                std::max(0.0, 1.0 - found.back().cumulative);
                            pred = exact_list_error_prob(n, k, qs, probs, tail).p_error;
                        }
                        wrong = !in_list;
                        break;
                    case Estimator::forney: {
                        if (!found.empty()) {
                            std::vector<double> ll(found.size());
                            for (std::size_t i = 0; i < found.size(); ++i)
                                ll[i] = codeword_log_likelihood(t.soft, found[i].word);
                            pred = forney_from_loglik(ll).p_error;
                        }
                        wrong = top_wrong;
                        break;
                    }
                }
                outs[trial].predicted[e] = pred;
                outs[trial].wrong[e] = wrong;
            }
        });

        // Sequential reduction keeps the output independent of scheduling.
        for (std::size_t e = 0; e < ne; ++e) {
            std::vector<double> sum_pred(cfg.bins, 0.0);
            std::vector<std::uint64_t> count(cfg.bins, 0), errors(cfg.bins, 0);
            for (const auto& o : outs) {
                int b = static_cast<int>(o.predicted[e] * cfg.bins);
                if (b >= cfg.bins) b = cfg.bins - 1;
                if (b < 0) b = 0;
                sum_pred[b] += o.predicted[e];
                count[b] += 1;
                errors[b] += o.wrong[e] ? 1 : 0;
            }
            for (int b = 0; b < cfg.bins; ++b) {
                if (count[b] == 0) continue;
                if (count[b] < cfg.min_bin_count) {
                    std::cerr << "note: suppressing sparse bin [" << static_cast<double>(b) / cfg.bins
                              << "," << static_cast<double>(b + 1) / cfg.bins << ") with "
                              << count[b] << " trials\n";
                    continue;
                }
                CalibrationBin row;
                row.ebn0_db = ebn0;
                row.estimator = cfg.estimators[e];
                row.list_size = cfg.list_size;
                row.bin_lo = static_cast<double>(b) / cfg.bins;
                row.bin_hi = static_cast<double>(b + 1) / cfg.bins;
                row.mean_predicted = sum_pred[b] / static_cast<double>(count[b]);
                row.empirical_error = static_cast<double>(errors[b]) / static_cast<double>(count[b]);
                row.count = count[b];
                table.push_back(row);
            }
        }
    }
    return table;
}

std::vector<ErasureRow> run_erasure(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("run_erasure: trials must be >= 1");
    for (double eps : cfg.epsilons)
        if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("run_erasure: epsilon must be in (0,1)");
    const LinearCode code = build_code(cfg.code);
    DecodeConfig dcfg{1, cfg.max_queries, cfg.mode};

    struct TrialOut {
        double predicted = 1.0;  // abandoned-empty decodes as maximally unreliable
        bool wrong = true;
        bool hard_consistent = false;
        bool hard_wrong = true;
    };

    std::vector<ErasureRow> table;
    for (std::size_t si = 0; si < cfg.ebn0_db.size(); ++si) {
        const double ebn0 = cfg.ebn0_db[si];
        std::vector<TrialOut> outs(cfg.trials);
        parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t trial) {
            const TrialDecode t = run_trial(code, ebn0, trial_seed(cfg.seed, si, trial), dcfg);
            TrialOut& o = outs[trial];
            if (!t.result.found.empty()) {
                const auto& hit = t.result.found[0];
                o.predicted = approx_single_error_prob(static_cast<int>(code.n()),
                                                       static_cast<int>(code.k()), hit.q, hit.prob,
                                                       hit.cumulative)
                                  .p_error;
                o.wrong = hit.word != t.codeword;
            }
            o.hard_consistent = code.is_codeword(t.soft.hard);
            o.hard_wrong = t.soft.hard != t.codeword;
        });

        for (double eps : cfg.epsilons) {
            ErasureRow row;
            row.ebn0_db = ebn0;
            row.epsilon = eps;
            row.trials = cfg.trials;
            std::uint64_t erased = 0, undetected = 0;
            for (const auto& o : outs) {
                if (o.predicted > eps)
                    ++erased;
                else if (o.wrong)
                    ++undetected;
            }
            row.erasure_rate = static_cast<double>(erased) / static_cast<double>(cfg.trials);
            row.uer = static_cast<double>(undetected) / static_cast<double>(cfg.trials);
            row.bler = static_cast<double>(erased + undetected) / static_cast<double>(cfg.trials);
            table.push_back(row);
        }
        if (cfg.crc_baseline) {
            ErasureRow row;
            row.ebn0_db = ebn0;
            row.epsilon = -1.0;
            row.trials = cfg.trials;
            std::uint64_t erased = 0, undetected = 0;
            for (const auto& o : outs) {
                if (!o.hard_consistent)
                    ++erased;
                else if (o.hard_wrong)
                    ++undetected;
            }
            row.erasure_rate = static_cast<double>(erased) / static_cast<double>(cfg.trials);
            row.uer = static_cast<double>(undetected) / static_cast<double>(cfg.trials);
            row.bler = static_cast<double>(erased + undetected) / static_cast<double>(cfg.trials);
            table.push_back(row);
        }
    }
    return table;
}

std::string calibration_csv(const std::vector<CalibrationBin>& bins) {
    std::string s = "ebn0_db,estimator,L,bin_lo,bin_hi,mean_predicted,empirical_error,count\n";
    for (const auto& b : bins) {
        s += fmt6(b.ebn0_db);
        s += ',';
        s += estimator_name(b.estimator);
        s += ',';
        s += std::to_string(b.list_size);
        s += ',';
        s += fmt6(b.bin_lo);
        s += ',';
        s += fmt6(b.bin_hi);
        s += ',';
        s += fmt6(b.mean_predicted);
        s += ',';
        s += fmt6(b.empirical_error);
        s += ',';
        s += std::to_string(b.count);
        s += '\n';
    }
    return s;
}

std::string erasure_csv(const std::vector<ErasureRow>& rows) {
    std::string s = "ebn0_db,epsilon,bler,uer,erasure_rate,trials\n";
    for (const auto& r : rows) {
        s += fmt6(r.ebn0_db);
        s += ',';
        s += fmt6(r.epsilon);
        s += ',';
        s += fmt6(r.bler);
        s += ',';
        s += fmt6(r.uer);
        s += ',';
        s += fmt6(r.erasure_rate);
        s += ',';
        s += std::to_string(r.trials);
        s += '\n';
    }
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace grandsoft
