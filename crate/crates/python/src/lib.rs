//! Python bindings.
//!
//! Counts come back as Python `int`, expectations as `fractions.Fraction`.
//! Guard and domain errors raise `ValueError`.

use num_bigint::BigUint;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use subseq_census as core;
use subseq_census::{Alphabet, McConfig};

fn value_error(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(text: &str, alphabet: &str) -> PyResult<core::BitString> {
    match alphabet {
        "binary" => core::BitString::binary(text),
        "general" => core::BitString::general(text),
        other => {
            return Err(PyValueError::new_err(format!(
                "alphabet must be 'binary' or 'general', got {other:?}"
            )))
        }
    }
    .map_err(value_error)
}

/// A string over the binary or general (byte) alphabet.
#[pyclass(name = "BitString", frozen)]
struct PyBitString {
    inner: core::BitString,
}

#[pymethods]
impl PyBitString {
    #[new]
    #[pyo3(signature = (text, alphabet = "binary"))]
    fn new(text: &str, alphabet: &str) -> PyResult<Self> {
        Ok(PyBitString {
            inner: parse(text, alphabet)?,
        })
    }

    #[getter]
    fn alphabet(&self) -> &'static str {
        match self.inner.alphabet() {
            Alphabet::Binary => "binary",
            Alphabet::General => "general",
        }
    }

    /// `(run_lengths, run_symbols)`.
    fn runs(&self) -> (Vec<usize>, String) {
        let r = self.inner.runs();
        (r.run_lengths, String::from_utf8_lossy(&r.run_symbols).into_owned())
    }

    fn slice(&self, start: usize, end: usize) -> PyResult<Self> {
        if start > end || end > self.inner.len() {
            return Err(PyValueError::new_err(format!(
                "slice [{start}:{end}] out of range for length {}",
                self.inner.len()
            )));
        }
        Ok(PyBitString {
            inner: self.inner.slice(start, end),
        })
    }

    fn count_total(&self) -> BigUint {
        core::count_total(&self.inner)
    }

    fn count_length(&self, m: usize) -> BigUint {
        core::count_length(&self.inner, m)
    }

    fn census(&self) -> Vec<BigUint> {
        core::census(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BitString({:?}, alphabet={:?})", self.inner.to_string(), self.alphabet())
    }
}

#[pyfunction]
#[pyo3(signature = (s, alphabet = "binary"))]
fn count_total(s: &str, alphabet: &str) -> PyResult<BigUint> {
    Ok(core::count_total(&parse(s, alphabet)?))
}

#[pyfunction]
#[pyo3(signature = (s, alphabet = "binary"))]
fn count_total_run_recursive(s: &str, alphabet: &str) -> PyResult<BigUint> {
    Ok(core::count_total_run_recursive(&parse(s, alphabet)?))
}

#[pyfunction]
#[pyo3(signature = (s, m, alphabet = "binary"))]
fn count_length(s: &str, m: usize, alphabet: &str) -> PyResult<BigUint> {
    Ok(core::count_length(&parse(s, alphabet)?, m))
}

#[pyfunction]
#[pyo3(signature = (s, alphabet = "binary"))]
fn census(s: &str, alphabet: &str) -> PyResult<Vec<BigUint>> {
    Ok(core::census(&parse(s, alphabet)?))
}

/// Sorted distinct subsequences, straight from the definition.
#[pyfunction]
#[pyo3(signature = (s, alphabet = "binary"))]
fn enumerate_distinct(s: &str, alphabet: &str) -> PyResult<Vec<String>> {
    let set = core::enumerate_distinct(&parse(s, alphabet)?).map_err(value_error)?;
    Ok(set.iter().map(|e| String::from_utf8_lossy(e).into_owned()).collect())
}

#[pyfunction]
fn exhaustive_expected_total(py: Python<'_>, n: usize) -> PyResult<BigRational> {
    py.detach(|| core::exhaustive_expected_total(n)).map_err(value_error)
}

#[pyfunction]
fn exhaustive_expected_length(py: Python<'_>, n: usize, m: usize) -> PyResult<BigRational> {
    py.detach(|| core::exhaustive_expected_length(n, m)).map_err(value_error)
}

#[pyfunction]
fn expected_total(n: usize) -> BigRational {
    core::expected_total(n)
}

#[pyfunction]
fn expected_total_recurrence(n: usize) -> BigRational {
    core::expected_total_recurrence(n)
}

#[pyfunction]
fn expected_length(n: usize, m: usize) -> BigRational {
    core::expected_length(n, m)
}

/// Rows `[Ŝ(n, 0), ..., Ŝ(n, n)]` for `n = 0..=n_max`.
#[pyfunction]
fn triangle(py: Python<'_>, n_max: usize) -> Vec<Vec<BigRational>> {
    py.detach(|| core::triangle(n_max).rows().to_vec())
}

/// Coefficients of `p_m`, constant term first.
#[pyfunction]
fn deficiency_polynomial(m: usize) -> PyResult<Vec<BigRational>> {
    core::deficiency_polynomial(m)
        .map(|p| p.coefficients().to_vec())
        .map_err(value_error)
}

#[pyfunction]
fn binomial_approximation(n: usize, m: usize) -> PyResult<BigRational> {
    core::binomial_approximation(n, m).map_err(value_error)
}

#[pyclass(name = "ApproximationReport", frozen, get_all)]
struct PyApproximationReport {
    n: usize,
    m: usize,
    approximation: BigRational,
    exact: BigRational,
    error: BigRational,
}

#[pyfunction]
fn binomial_approximation_report(n: usize, m: usize) -> PyResult<PyApproximationReport> {
    let r = core::binomial_approximation_report(n, m).map_err(value_error)?;
    Ok(PyApproximationReport {
        n: r.n,
        m: r.m,
        approximation: r.approximation,
        exact: r.exact,
        error: r.error,
    })
}

/// Monte Carlo estimate. Decimal summaries are exposed as strings (40
/// fractional digits) and as floats.
#[pyclass(name = "McEstimate", frozen)]
struct PyMcEstimate {
    inner: core::McEstimate,
}

#[pymethods]
impl PyMcEstimate {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn m(&self) -> Option<usize> {
        self.inner.m
    }

    #[getter]
    fn samples(&self) -> u64 {
        self.inner.samples
    }

    #[getter]
    fn seed(&self) -> u64 {
        self.inner.seed
    }

    #[getter]
    fn workers(&self) -> usize {
        self.inner.workers
    }

    #[getter]
    fn rng_id(&self) -> &str {
        &self.inner.rng_id
    }

    /// Sample mean as an exact fraction.
    #[getter]
    fn mean_exact(&self) -> BigRational {
        self.inner.mean_exact.clone()
    }

    #[getter]
    fn mean(&self) -> String {
        self.inner.mean.to_string()
    }

    #[getter]
    fn std_error(&self) -> String {
        self.inner.std_error.to_string()
    }

    #[getter]
    fn ci95(&self) -> (String, String) {
        (self.inner.ci95_low.to_string(), self.inner.ci95_high.to_string())
    }

    fn as_floats(&self) -> (f64, f64, f64, f64) {
        (
            self.inner.mean.to_f64(),
            self.inner.std_error.to_f64(),
            self.inner.ci95_low.to_f64(),
            self.inner.ci95_high.to_f64(),
        )
    }

    fn within_standard_errors(&self, target: BigRational, k: u32) -> bool {
        self.inner.within_standard_errors(&target, k)
    }

    fn ci_contains(&self, target: BigRational) -> bool {
        self.inner.ci_contains(&target)
    }

    fn __repr__(&self) -> String {
        format!(
            "McEstimate(n={}, m={:?}, samples={}, seed={}, mean={}, std_error={})",
            self.inner.n,
            self.inner.m,
            self.inner.samples,
            self.inner.seed,
            self.inner.mean.to_f64(),
            self.inner.std_error.to_f64()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (n, samples, seed, workers = core::montecarlo::DEFAULT_WORKERS))]
fn estimate_expected_total(py: Python<'_>, n: usize, samples: u64, seed: u64, workers: usize) -> PyResult<PyMcEstimate> {
    let inner = py
        .detach(|| core::estimate_expected_total(n, samples, seed, &McConfig { workers }))
        .map_err(value_error)?;
    Ok(PyMcEstimate { inner })
}

#[pyfunction]
#[pyo3(signature = (n, m, samples, seed, workers = core::montecarlo::DEFAULT_WORKERS))]
fn estimate_expected_length(
    py: Python<'_>,
    n: usize,
    m: usize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> PyResult<PyMcEstimate> {
    let inner = py
        .detach(|| core::estimate_expected_length(n, m, samples, seed, &McConfig { workers }))
        .map_err(value_error)?;
    Ok(PyMcEstimate { inner })
}

#[pymodule]
#[pyo3(name = "subseq_census")]
fn subseq_census_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("RNG_ID", core::RNG_ID)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyBitString>()?;
    m.add_class::<PyApproximationReport>()?;
    m.add_class::<PyMcEstimate>()?;
    m.add_function(wrap_pyfunction!(count_total, m)?)?;
    m.add_function(wrap_pyfunction!(count_total_run_recursive, m)?)?;
    m.add_function(wrap_pyfunction!(count_length, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_distinct, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_expected_total, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_expected_length, m)?)?;
    m.add_function(wrap_pyfunction!(expected_total, m)?)?;
    m.add_function(wrap_pyfunction!(expected_total_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(expected_length, m)?)?;
    m.add_function(wrap_pyfunction!(triangle, m)?)?;
    m.add_function(wrap_pyfunction!(deficiency_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_approximation, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_approximation_report, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_expected_total, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_expected_length, m)?)?;
    Ok(())
}
