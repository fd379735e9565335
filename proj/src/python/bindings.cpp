#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grandsoft/channel.hpp"
#include "grandsoft/codes.hpp"
#include "grandsoft/decoder.hpp"
#include "grandsoft/sim.hpp"
#include "grandsoft/softoutput.hpp"

namespace py = pybind11;
using namespace grandsoft;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Guessing random additive noise decoding with soft output";

    py::class_<LinearCode>(m, "LinearCode")
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("k", &LinearCode::k)
        .def("syndrome", &LinearCode::syndrome, py::arg("word"))
        .def("is_codeword", &LinearCode::is_codeword, py::arg("word"))
        .def("encode", &LinearCode::encode, py::arg("message"))
        .def("systematic", &LinearCode::systematic);

    m.def("random_linear_code", &random_linear_code, py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def("crc_code", &crc_code, py::arg("n"), py::arg("k"), py::arg("poly"));
    m.def("ebch_code", &ebch_code, py::arg("n"), py::arg("k"));
    m.def("load_parity_check", &load_parity_check, py::arg("path"));
    m.def("save_parity_check", &save_parity_check, py::arg("code"), py::arg("path"));
    m.attr("DEFAULT_CRC8_POLY") = kDefaultCrc8Poly;

    py::class_<SoftChannelOutput>(m, "SoftChannelOutput")
        .def_readonly("n", &SoftChannelOutput::n)
        .def_readonly("llr", &SoftChannelOutput::llr)
        .def_readonly("flip_prob", &SoftChannelOutput::flip_prob)
        .def_readonly("hard", &SoftChannelOutput::hard);

    m.def(
        "transmit",
        [](std::uint64_t word, std::size_t n, double ebn0_db, double rate, std::uint64_t seed) {
            return transmit(word, n, ChannelConfig{ebn0_db, rate, seed});
        },
        py::arg("codeword"), py::arg("n"), py::arg("ebn0_db"), py::arg("rate"), py::arg("seed"));
    m.def("soft_from_llrs", &soft_from_llrs, py::arg("llrs"));
    m.def("noise_effect_probability", &noise_effect_probability, py::arg("pattern"),
          py::arg("soft"));
    m.def("noise_sigma", &noise_sigma, py::arg("ebn0_db"), py::arg("rate"));

    py::enum_<DecodeMode>(m, "DecodeMode")
        .value("soft", DecodeMode::soft)
        .value("hard", DecodeMode::hard);

    py::class_<ListEntry>(m, "ListEntry")
        .def_readonly("word", &ListEntry::word)
        .def_readonly("q", &ListEntry::q)
        .def_readonly("prob", &ListEntry::prob)
        .def_readonly("cumulative", &ListEntry::cumulative);

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("found", &DecodeResult::found)
        .def_readonly("cumulative_prob", &DecodeResult::cumulative_prob)
        .def_readonly("queries_used", &DecodeResult::queries_used)
        .def_readonly("abandoned", &DecodeResult::abandoned);

    m.def(
        "grand_decode",
        [](const LinearCode& code, const SoftChannelOutput& soft, std::size_t list_size,
           std::uint64_t max_queries, DecodeMode mode) {
            return grand_decode(code, soft, DecodeConfig{list_size, max_queries, mode});
        },
        py::arg("code"), py::arg("soft"), py::arg("list_size") = 1,
        py::arg("max_queries") = std::uint64_t{1} << 22, py::arg("mode") = DecodeMode::soft);

    py::enum_<Estimator>(m, "Estimator")
        .value("exact", Estimator::exact)
        .value("approx_list", Estimator::approx_list)
        .value("approx_single", Estimator::approx_single)
        .value("forney", Estimator::forney);

    py::class_<SoftOutput>(m, "SoftOutput")
        .def_readonly("p_error", &SoftOutput::p_error)
        .def_readonly("estimator", &SoftOutput::estimator)
        .def_readonly("degenerate", &SoftOutput::degenerate);

    m.def(
        "order_stat_pmf",
        [](int n, int k, const std::vector<std::uint64_t>& q) { return order_stat_pmf(n, k, q); },
        py::arg("n"), py::arg("k"), py::arg("q"));
    m.def(
        "order_stat_tail_pmf",
        [](int n, int k, const std::vector<std::uint64_t>& q) {
            return order_stat_tail_pmf(n, k, q);
        },
        py::arg("n"), py::arg("k"), py::arg("q"));
    m.def(
        "exact_list_error_prob",
        [](int n, int k, const std::vector<std::uint64_t>& q, const std::vector<double>& g_pmf,
           double g_tail) { return exact_list_error_prob(n, k, q, g_pmf, g_tail); },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("g_pmf"), py::arg("g_tail"));
    m.def(
        "approx_list_error_prob",
        [](int n, int k, const std::vector<std::uint64_t>& q, const std::vector<double>& probs,
           double cumulative) { return approx_list_error_prob(n, k, q, probs, cumulative); },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("query_probs"), py::arg("cumulative"));
    m.def("approx_single_error_prob", &approx_single_error_prob, py::arg("n"), py::arg("k"),
          py::arg("q1"), py::arg("query_prob"), py::arg("cumulative"));
    m.def(
        "forney_estimate",
        [](const std::vector<double>& lik) { return forney_estimate(lik); },
        py::arg("list_likelihoods"));
    m.def("codeword_log_likelihood", &codeword_log_likelihood, py::arg("soft"), py::arg("word"));

    py::enum_<CodeFamily>(m, "CodeFamily")
        .value("rlc", CodeFamily::rlc)
        .value("crc", CodeFamily::crc)
        .value("ebch", CodeFamily::ebch);

    py::class_<CodeSpec>(m, "CodeSpec")
        .def(py::init<>())
        .def_readwrite("family", &CodeSpec::family)
        .def_readwrite("n", &CodeSpec::n)
        .def_readwrite("k", &CodeSpec::k)
        .def_readwrite("seed", &CodeSpec::seed)
        .def_readwrite("poly", &CodeSpec::poly);

    py::enum_<ExperimentKind>(m, "ExperimentKind")
        .value("calibration", ExperimentKind::calibration)
        .value("erasure", ExperimentKind::erasure);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("code", &ExperimentConfig::code)
        .def_readwrite("ebn0_db", &ExperimentConfig::ebn0_db)
        .def_readwrite("list_size", &ExperimentConfig::list_size)
        .def_readwrite("max_queries", &ExperimentConfig::max_queries)
        .def_readwrite("mode", &ExperimentConfig::mode)
        .def_readwrite("kind", &ExperimentConfig::kind)
        .def_readwrite("estimators", &ExperimentConfig::estimators)
        .def_readwrite("bins", &ExperimentConfig::bins)
        .def_readwrite("min_bin_count", &ExperimentConfig::min_bin_count)
        .def_readwrite("epsilons", &ExperimentConfig::epsilons)
        .def_readwrite("crc_baseline", &ExperimentConfig::crc_baseline)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("threads", &ExperimentConfig::threads);

    py::class_<CalibrationBin>(m, "CalibrationBin")
        .def_readonly("ebn0_db", &CalibrationBin::ebn0_db)
        .def_readonly("estimator", &CalibrationBin::estimator)
        .def_readonly("list_size", &CalibrationBin::list_size)
        .def_readonly("bin_lo", &CalibrationBin::bin_lo)
        .def_readonly("bin_hi", &CalibrationBin::bin_hi)
        .def_readonly("mean_predicted", &CalibrationBin::mean_predicted)
        .def_readonly("empirical_error", &CalibrationBin::empirical_error)
        .def_readonly("count", &CalibrationBin::count);

    py::class_<ErasureRow>(m, "ErasureRow")
        .def_readonly("ebn0_db", &ErasureRow::ebn0_db)
        .def_readonly("epsilon", &ErasureRow::epsilon)
        .def_readonly("bler", &ErasureRow::bler)
        .def_readonly("uer", &ErasureRow::uer)
        .def_readonly("erasure_rate", &ErasureRow::erasure_rate)
        .def_readonly("trials", &ErasureRow::trials);

    m.def("build_code", &build_code, py::arg("spec"));
    m.def("run_calibration", &run_calibration, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_erasure", &run_erasure, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("calibration_csv", &calibration_csv, py::arg("bins"));
    m.def("erasure_csv", &erasure_csv, py::arg("rows"));
    m.def("estimator_name", &estimator_name, py::arg("estimator"));
    m.def("estimator_from_name", &estimator_from_name, py::arg("name"));
}
