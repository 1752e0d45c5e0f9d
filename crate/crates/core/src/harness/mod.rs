//! Batch front end: sampling, searches, grid sweeps, input files, reports.

mod config;
mod grid;
mod input;
mod report;
mod sampling;
mod search;

pub use config::{Format, Mode, RunConfig, DEFAULT_MIN_SEP, THREADS_ENV};
pub use grid::{
    a_grid, admissible_b_check, alpha_product_check, coincidence_gap, exclusion_check,
    exclusion_params, exclusion_point, factorization_check, frame_sweep, run_lemma_grid, s_grid,
    GridCheck, GridReport, CLOSED_FORM_TOL, EXCLUSION_SAMPLES, FACTORIZATION_SAMPLES,
    FACTORIZATION_TOL, LEMMA4_TOL,
};
pub use input::{parse_polynomial, read_polynomial};
pub use report::{emit_report, render, to_csv, to_json, write_stdout, CSV_HEADER};
pub use sampling::{
    sample_seed, sample_simple_polynomial, splitmix64, uniform_disk_point, MAX_ATTEMPTS,
};
pub use search::{
    evaluate_sample, run_search, SampleRecord, SearchOutput, Summary, VERIFIED_DEGREE,
};
