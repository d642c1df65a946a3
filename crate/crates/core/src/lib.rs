//! Exact counting of distinct subsequences.
//!
//! Per-string counts (total and by length) live in [`count`], with the
//! brute-force ground truth in [`oracle`]. Expectations over uniformly random
//! binary strings are in [`expectation`], and [`montecarlo`] estimates the same
//! quantities by sampling. Everything that is an exact value is carried as a
//! [`BigCount`] or an [`ExactRational`].

pub mod cli;
pub mod count;
pub mod decimal;
pub mod error;
pub mod expectation;
pub mod montecarlo;
pub mod oracle;
pub mod output;
pub mod polynomial;
pub mod string;
pub mod verify;

pub use count::{
    census, census_run_recursive, count_length, count_length_run_recursive, count_total,
    count_total_run_recursive,
};
pub use decimal::Decimal;
pub use error::{Error, Result};
pub use expectation::{
    binomial_approximation, binomial_approximation_report, deficiency_polynomial, expected_length,
    expected_length_run_sum, expected_total, expected_total_recurrence, expected_total_run_sum,
    triangle, ApproximationReport, ExpectationTriangle,
};
pub use montecarlo::{
    estimate_expected_length, estimate_expected_total, sample_string, McConfig, McEstimate,
    RNG_ID,
};
pub use oracle::{
    enumerate_distinct, exhaustive_expected_length, exhaustive_expected_total, SubsequenceSet,
};
pub use polynomial::RationalPolynomial;
pub use string::{Alphabet, BitString, RunDecomposition};

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = num_rational::BigRational;
