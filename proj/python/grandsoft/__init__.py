from ._core import (
    CalibrationBin,
    CodeFamily,
    CodeSpec,
    DecodeMode,
    DecodeResult,
    DEFAULT_CRC8_POLY,
    ErasureRow,
    Estimator,
    ExperimentConfig,
    ExperimentKind,
    LinearCode,
    ListEntry,
    SoftChannelOutput,
    SoftOutput,
    approx_list_error_prob,
    approx_single_error_prob,
    build_code,
    calibration_csv,
    codeword_log_likelihood,
    crc_code,
    ebch_code,
    erasure_csv,
    estimator_from_name,
    estimator_name,
    exact_list_error_prob,
    forney_estimate,
    grand_decode,
    load_parity_check,
    noise_effect_probability,
    noise_sigma,
    order_stat_pmf,
    order_stat_tail_pmf,
    random_linear_code,
    run_calibration,
    run_erasure,
    save_parity_check,
    soft_from_llrs,
    transmit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
