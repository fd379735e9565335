#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grandsoft/codes.hpp"
#include "grandsoft/decoder.hpp"
#include "grandsoft/softoutput.hpp"

namespace grandsoft {

enum class CodeFamily { rlc, crc, ebch };

struct CodeSpec {
    CodeFamily family = CodeFamily::rlc;
    std::size_t n = 64;
    std::size_t k = 57;
    std::uint64_t seed = 1;               // RLC construction seed
    std::uint64_t poly = kDefaultCrc8Poly;  // CRC generator polynomial
};

LinearCode build_code(const CodeSpec& spec);

enum class ExperimentKind { calibration, erasure };

struct ExperimentConfig {
    CodeSpec code;
    std::vector<double> ebn0_db = {4.0};
    std::size_t list_size = 1;
    std::uint64_t max_queries = std::uint64_t{1} << 22;
    DecodeMode mode = DecodeMode::soft;
    ExperimentKind kind = ExperimentKind::calibration;

    // calibration
    std::vector<Estimator> estimators = {Estimator::approx_single};
    int bins = 20;
    std::uint64_t min_bin_count = 50;

    // erasure
    std::vector<double> epsilons = {0.5};
    bool crc_baseline = false;  // accept iff the hard decision is syndrome-consistent

    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

struct CalibrationBin {
    double ebn0_db = 0.0;
    Estimator estimator = Estimator::approx_single;
    std::size_t list_size = 1;
    double bin_lo = 0.0, bin_hi = 0.0;
    double mean_predicted = 0.0;
    double empirical_error = 0.0;
    std::uint64_t count = 0;
};

/// One row per (Eb/N0, epsilon). The CRC-detection baseline, when
/// requested, is reported with epsilon = -1.
struct ErasureRow {
    double ebn0_db = 0.0;
    double epsilon = 0.0;
    double bler = 0.0;
    double uer = 0.0;
    double erasure_rate = 0.0;
    std::uint64_t trials = 0;
};

std::vector<CalibrationBin> run_calibration(const ExperimentConfig& cfg);
std::vector<ErasureRow> run_erasure(const ExperimentConfig& cfg);

std::string calibration_csv(const std::vector<CalibrationBin>& bins);
std::string erasure_csv(const std::vector<ErasureRow>& rows);
void write_file(const std::string& path, const std::string& content);

/// Per-trial RNG stream derived from (seed, stream, trial) so results are
/// independent of thread scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

Estimator estimator_from_name(const std::string& name);

}  // namespace grandsoft
