//! Exact expectations over uniformly random binary strings.
//!
//! Write `Ŝ(n, m)` for the expected number of distinct length-`m`
//! subsequences of a uniform binary string of length `n`, and `Ŝ_n` for the
//! expected total. Conditioning on the length `k` of the initial run (which
//! has probability `2^-k` for `k < n`) gives
//!
//! ```text
//! Ŝ(n, m) = Σ_{k=0}^{n-1} 2^-k Ŝ(n-k-1, m-1)        (m ≥ 1)
//! Ŝ_n     = 1 + Σ_{k=0}^{n-1} 2^-k Ŝ_{n-k-1}
//! ```
//!
//! which collapse to the Pascal-like rule `Ŝ(n, m) = Ŝ(n-1, m-1) + Ŝ(n-1, m)/2`
//! with `Ŝ(n, 0) = Ŝ(n, n) = 1`, and to `Ŝ_n = 1/2 + (3/2) Ŝ_{n-1}`, whose
//! solution is `Ŝ_n = 2 (3/2)^n - 1`. The convolution sums are kept as
//! independent check paths ([`expected_length_run_sum`],
//! [`expected_total_run_sum`]).
//!
//! No floating point is used anywhere in this module.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polynomial::RationalPolynomial;
use crate::ExactRational;

/// Largest `m` accepted by [`deficiency_polynomial`].
pub const DEFICIENCY_LIMIT: usize = 64;
/// Extra triangle values each deficiency polynomial is checked against
/// beyond its interpolation nodes.
pub const DEFICIENCY_EXTRA_CHECKS: usize = 10;

fn half() -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::from(2))
}

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `2 (3/2)^n - 1`.
pub fn expected_total(n: usize) -> ExactRational {
    let three_pow = num_traits::pow(BigInt::from(3), n);
    ExactRational::new(three_pow * 2, pow2(n)) - ExactRational::one()
}

/// Iterates `Ŝ_n = 1/2 + (3/2) Ŝ_{n-1}` from `Ŝ_0 = 1`.
pub fn expected_total_recurrence(n: usize) -> ExactRational {
    expected_total_recurrence_table(n).pop().expect("nonempty")
}

/// `Ŝ_0 ..= Ŝ_{n_max}` by the first-order recurrence.
pub fn expected_total_recurrence_table(n_max: usize) -> Vec<ExactRational> {
    let three_halves = ExactRational::new(3.into(), 2.into());
    let mut out = Vec::with_capacity(n_max + 1);
    let mut current = ExactRational::one();
    out.push(current.clone());
    for _ in 0..n_max {
        current = half() + &three_halves * current;
        out.push(current.clone());
    }
    out
}

/// `Ŝ_0 ..= Ŝ_{n_max}` by the run-conditioned convolution
/// `Ŝ_n = 1 + Σ_{k=0}^{n-1} 2^-k Ŝ_{n-k-1}`.
///
/// The constant string (initial run of length `n`, probability `2^{1-n}`)
/// only reaches `s[1:]`, so its second successor contributes nothing; that
/// is why the sum stops at `k = n - 1`. Quadratic in `n_max`.
pub fn expected_total_run_sum(n_max: usize) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = Vec::with_capacity(n_max + 1);
    out.push(ExactRational::one());
    for n in 1..=n_max {
        let mut value = ExactRational::one();
        for k in 0..n {
            value += ExactRational::new(BigInt::one(), pow2(k)) * &out[n - k - 1];
        }
        out.push(value);
    }
    out
}

/// Rows `0..=n_max` of the expectation triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectationTriangle {
    rows: Vec<Vec<ExactRational>>,
}

impl ExpectationTriangle {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `Ŝ(n, 0..=n)`.
    pub fn row(&self, n: usize) -> Option<&[ExactRational]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<ExactRational>] {
        &self.rows
    }

    /// `Ŝ(n, m)`; zero when `m > n`, `None` when `n` is past the table.
    pub fn get(&self, n: usize, m: usize) -> Option<ExactRational> {
        let row = self.rows.get(n)?;
        Some(row.get(m).cloned().unwrap_or_else(ExactRational::zero))
    }

    /// `(n, m, Ŝ(n, m))` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ExactRational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(m, v)| (n, m, v)))
    }
}

/// One step of the Pascal-like rule; `width` caps the columns kept.
fn next_row(prev: &[ExactRational], width: usize) -> Vec<ExactRational> {
    let h = half();
    let mut row = Vec::with_capacity(width);
    row.push(ExactRational::one());
    for m in 1..width {
        let mut v = prev.get(m - 1).cloned().unwrap_or_else(ExactRational::zero);
        if let Some(p) = prev.get(m) {
            v += &h * p;
        }
        row.push(v);
    }
    row
}

/// The full triangle `Ŝ(n, m)` for `0 ≤ m ≤ n ≤ n_max`.
///
/// Memory grows quadratically; callers exposing this to user input should
/// bound `n_max`.
pub fn triangle(n_max: usize) -> ExpectationTriangle {
    let mut rows = Vec::with_capacity(n_max + 1);
    rows.push(vec![ExactRational::one()]);
    for n in 1..=n_max {
        let row = next_row(&rows[n - 1], n + 1);
        rows.push(row);
    }
    ExpectationTriangle { rows }
}

/// `Ŝ(n, m)` with a single rolling row of width `m + 1`.
pub fn expected_length(n: usize, m: usize) -> ExactRational {
    if m > n {
        return ExactRational::zero();
    }
    let mut row = vec![ExactRational::one()];
    for i in 1..=n {
        row = next_row(&row, (i + 1).min(m + 1));
    }
    row.swap_remove(m)
}

/// `Ŝ(n, m)` from the run-conditioned convolution, column by column:
/// `Ŝ(j, c) = Σ_{k=0}^{j-1} 2^-k Ŝ(j-k-1, c-1)` for `c ≥ 1`, `Ŝ(j, 0) = 1`.
///
/// Independent of the Pascal-like rule; `O(m n^2)`.
pub fn expected_length_run_sum(n: usize, m: usize) -> ExactRational {
    if m > n {
        return ExactRational::zero();
    }
    run_sum_columns(n, m).pop().expect("nonempty").swap_remove(n)
}

/// Every `Ŝ(n, m)` with `m ≤ n ≤ n_max` by the convolution route, as rows
/// `[n][m]`.
pub fn run_sum_table(n_max: usize) -> Vec<Vec<ExactRational>> {
    let columns = run_sum_columns(n_max, n_max);
    (0..=n_max)
        .map(|n| (0..=n).map(|m| columns[m][n].clone()).collect())
        .collect()
}

/// Columns `0..=m_max`, each holding `Ŝ(j, c)` for `j = 0..=n_max`.
fn run_sum_columns(n_max: usize, m_max: usize) -> Vec<Vec<ExactRational>> {
    let weights: Vec<ExactRational> = (0..n_max).map(|k| ExactRational::new(BigInt::one(), pow2(k))).collect();
    let mut columns = vec![vec![ExactRational::one(); n_max + 1]];
    for c in 1..=m_max {
        let prev = &columns[c - 1];
        let mut next = vec![ExactRational::zero(); n_max + 1];
        // Ŝ(j, c) vanishes for j < c
        for (j, slot) in next.iter_mut().enumerate().skip(c) {
            for k in 0..j {
                *slot += &weights[k] * &prev[j - k - 1];
            }
        }
        columns.push(next);
    }
    columns
}

/// The polynomial `p_m` with `p_m(n) = Ŝ(n, n - m)` for all `n ≥ m`.
///
/// Interpolated through `n = m ..= 2m`, then checked against
/// [`DEFICIENCY_EXTRA_CHECKS`] further triangle values and against the
/// leading coefficient `1 / (2^m m!)`.
pub fn deficiency_polynomial(m: usize) -> Result<RationalPolynomial> {
    if m > DEFICIENCY_LIMIT {
        return Err(Error::GuardExceeded {
            what: "deficiency polynomial degree",
            requested: m,
            limit: DEFICIENCY_LIMIT,
        });
    }
    let last = 2 * m + DEFICIENCY_EXTRA_CHECKS;
    let table = triangle(last);
    let diagonal = |n: usize| table.get(n, n - m).expect("within table");
    let nodes: Vec<(ExactRational, ExactRational)> = (m..=2 * m)
        .map(|n| (ExactRational::from_integer(n.into()), diagonal(n)))
        .collect();
    let poly = RationalPolynomial::interpolate(&nodes)?;

    for n in 2 * m + 1..=last {
        if poly.eval_at(n as u64) != diagonal(n) {
            return Err(Error::Verification(format!(
                "p_{m}({n}) = {} but the triangle gives {}",
                poly.eval_at(n as u64),
                diagonal(n)
            )));
        }
    }
    let expected_leading = deficiency_leading_coefficient(m);
    if poly.degree() != Some(m) || poly.leading_coefficient() != Some(&expected_leading) {
        return Err(Error::Verification(format!(
            "p_{m} = {poly} does not have degree {m} with leading coefficient {expected_leading}"
        )));
    }
    Ok(poly)
}

/// `1 / (2^m m!)`.
pub fn deficiency_leading_coefficient(m: usize) -> ExactRational {
    let factorial: BigInt = (1..=m).map(BigInt::from).product();
    ExactRational::new(BigInt::one(), pow2(m) * factorial)
}

/// `2^-m C(n, m)`, the leading-order estimate of `Ŝ(n, n - m)`.
pub fn binomial_approximation(n: usize, m: usize) -> Result<ExactRational> {
    if m > n {
        return Err(Error::Domain(format!("binomial approximation needs m ≤ n, got m = {m}, n = {n}")));
    }
    Ok(ExactRational::new(BigInt::from(binomial(n, m)), pow2(m)))
}

/// [`binomial_approximation`] alongside the exact value it approximates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationReport {
    pub n: usize,
    pub m: usize,
    /// `2^-m C(n, m)`.
    pub approximation: ExactRational,
    /// `Ŝ(n, n - m)`.
    pub exact: ExactRational,
    /// `exact - approximation`.
    pub error: ExactRational,
}

pub fn binomial_approximation_report(n: usize, m: usize) -> Result<ApproximationReport> {
    let approximation = binomial_approximation(n, m)?;
    let exact = expected_length(n, n - m);
    let error = &exact - &approximation;
    Ok(ApproximationReport {
        n,
        m,
        approximation,
        exact,
        error,
    })
}

/// Whether `value * 2^k` is an integer.
pub fn is_dyadic_with_exponent(value: &ExactRational, k: usize) -> bool {
    (value.numer() * pow2(k)).is_multiple_of(value.denom())
}
