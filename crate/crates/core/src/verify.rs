//! Self-checks behind the `verify` subcommand.
//!
//! Each check exercises one family of identities and reports pass or fail
//! with a short detail line. [`Bounds::full`] uses the sizes the library is
//! validated at; [`Bounds::quick`] shrinks them for a fast smoke run.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::count::{census, census_run_recursive, count_length, count_total, count_total_run_recursive};
use crate::expectation::{
    binomial, binomial_approximation_report, deficiency_leading_coefficient, deficiency_polynomial,
    expected_length, expected_total, expected_total_recurrence_table, expected_total_run_sum,
    is_dyadic_with_exponent, run_sum_table, triangle,
};
use crate::montecarlo::{estimate_expected_total, sample_string, worker_rng, McConfig};
use crate::oracle::{enumerate_distinct, exhaustive_expected_census, exhaustive_expected_total};
use crate::output::OutputRecord;
use crate::polynomial::forward_difference;
use crate::string::BitString;
use crate::{BigCount, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub exhaustive_strings: usize,
    pub random_strings: usize,
    pub random_length: usize,
    pub oracle_expectation: usize,
    pub closed_form: usize,
    pub run_sum: usize,
    pub triangle: usize,
    pub runs_identity: usize,
    pub deficiency: usize,
    pub deficiency_span: usize,
    pub mc_samples: u64,
    pub mc_seeds: u64,
}

impl Bounds {
    pub fn full() -> Self {
        Bounds {
            exhaustive_strings: 12,
            random_strings: 1000,
            random_length: 64,
            oracle_expectation: 14,
            closed_form: 2000,
            run_sum: 300,
            triangle: 500,
            runs_identity: 100,
            deficiency: 10,
            deficiency_span: 50,
            mc_samples: 100_000,
            mc_seeds: 20,
        }
    }

    pub fn quick() -> Self {
        Bounds {
            exhaustive_strings: 8,
            random_strings: 100,
            random_length: 64,
            oracle_expectation: 8,
            closed_form: 200,
            run_sum: 60,
            triangle: 60,
            runs_identity: 100,
            deficiency: 4,
            deficiency_span: 20,
            mc_samples: 5_000,
            mc_seeds: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type CheckResult = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn per_string_exhaustive(b: &Bounds) -> CheckResult {
    let mut strings = 0u64;
    for n in 0..=b.exhaustive_strings {
        for mask in 0..1u64 << n {
            let s = BitString::from_mask(n, mask);
            let set = enumerate_distinct(&s).map_err(|e| e.to_string())?;
            let total = count_total(&s);
            let c = census(&s);
            ensure(total == count_total_run_recursive(&s), || format!("{s}: DP and recursion disagree"))?;
            ensure(total == BigCount::from(set.len()), || format!("{s}: DP disagrees with enumeration"))?;
            ensure(c == census_run_recursive(&s), || format!("{s}: census routes disagree"))?;
            let grouped: Vec<BigCount> = set.by_length().into_iter().map(BigCount::from).collect();
            ensure(c == grouped, || format!("{s}: census disagrees with enumeration"))?;
            ensure(c.iter().sum::<BigCount>() == total, || format!("{s}: census does not sum to total"))?;
            for (m, v) in c.iter().enumerate() {
                ensure(*v <= binomial(n, m), || format!("{s}: U_{m} above C(n, m)"))?;
                ensure(*v == count_length(&s, m), || format!("{s}: count_length({m}) disagrees"))?;
            }
            ensure(c[n].is_one() && count_length(&s, n + 1).is_zero(), || format!("{s}: boundary counts"))?;
            strings += 1;
        }
    }
    Ok(format!("{strings} strings, n ≤ {}", b.exhaustive_strings))
}

fn per_string_random(b: &Bounds) -> CheckResult {
    let mut rng = worker_rng(0x5eed, 0);
    for _ in 0..b.random_strings {
        let s = sample_string(b.random_length, &mut rng);
        let total = count_total(&s);
        ensure(total == count_total_run_recursive(&s), || format!("{s}: DP and recursion disagree"))?;
        ensure(census(&s).iter().sum::<BigCount>() == total, || format!("{s}: census sum"))?;
        // relabeling leaves the counts alone
        let flipped = BitString::from_bits(s.symbols().iter().map(|&c| c == b'0'));
        ensure(count_total(&flipped) == total, || format!("{s}: relabeling changed the total"))?;
    }
    for n in 0..=b.random_length {
        let constant = BitString::from_bits(std::iter::repeat(false).take(n));
        ensure(count_total(&constant) == BigCount::from(n + 1), || format!("constant string of length {n}"))?;
    }
    Ok(format!("{} strings of length {}", b.random_strings, b.random_length))
}

fn oracle_expectations(b: &Bounds) -> CheckResult {
    for n in 0..=b.oracle_expectation {
        let total = exhaustive_expected_total(n).map_err(|e| e.to_string())?;
        ensure(total == expected_total(n), || format!("n = {n}: exhaustive total {total}"))?;
        let by_length = exhaustive_expected_census(n).map_err(|e| e.to_string())?;
        for (m, v) in by_length.iter().enumerate() {
            ensure(*v == expected_length(n, m), || format!("({n}, {m}): exhaustive {v}"))?;
        }
    }
    Ok(format!("n ≤ {}", b.oracle_expectation))
}

fn closed_form(b: &Bounds) -> CheckResult {
    let recurrence = expected_total_recurrence_table(b.closed_form);
    for (n, r) in recurrence.iter().enumerate() {
        let closed = expected_total(n);
        ensure(closed == *r, || format!("n = {n}: closed form differs from recurrence"))?;
        let scaled = (closed + ExactRational::one()) * ExactRational::from_integer(BigInt::one() << n);
        let target = ExactRational::from_integer(num_traits::pow(BigInt::from(3), n) * 2);
        ensure(scaled == target, || format!("n = {n}: 2^n (S_n + 1) ≠ 2·3^n"))?;
    }
    let run_sum = expected_total_run_sum(b.run_sum);
    for (n, v) in run_sum.iter().enumerate() {
        ensure(*v == recurrence[n], || format!("n = {n}: run-conditioned sum differs"))?;
    }
    Ok(format!("n ≤ {} (run sum n ≤ {})", b.closed_form, b.run_sum))
}

fn triangle_consistency(b: &Bounds) -> CheckResult {
    let t = triangle(b.triangle);
    for n in 0..=b.triangle {
        let row = t.row(n).expect("row");
        ensure(row.iter().sum::<ExactRational>() == expected_total(n), || format!("row {n} sum"))?;
        for (m, v) in row.iter().enumerate() {
            ensure(is_dyadic_with_exponent(v, n - m), || format!("({n}, {m}) not dyadic"))?;
            ensure(*v >= ExactRational::one(), || format!("({n}, {m}) below 1"))?;
        }
    }
    let check = b.triangle.min(60);
    for (n, row) in run_sum_table(check).iter().enumerate() {
        ensure(row.as_slice() == t.row(n).expect("row"), || format!("row {n}: convolution route differs"))?;
    }
    Ok(format!("n ≤ {} (convolution n ≤ {check})", b.triangle))
}

fn runs_identity(b: &Bounds) -> CheckResult {
    let t = triangle(b.runs_identity);
    for n in 1..=b.runs_identity {
        let want = ExactRational::new(BigInt::from(n + 1), BigInt::from(2));
        ensure(t.get(n, n - 1) == Some(want), || format!("n = {n}"))?;
    }
    let n = b.runs_identity;
    ensure(expected_length(n, n - 1) == ExactRational::new(BigInt::from(n + 1), BigInt::from(2)), || {
        format!("rolling row at n = {n}")
    })?;
    Ok(format!("1 ≤ n ≤ {}", b.runs_identity))
}

fn deficiency(b: &Bounds) -> CheckResult {
    let t = triangle(b.deficiency + b.deficiency_span);
    for m in 0..=b.deficiency {
        let p = deficiency_polynomial(m).map_err(|e| e.to_string())?;
        ensure(p.leading_coefficient() == Some(&deficiency_leading_coefficient(m)), || {
            format!("p_{m} leading coefficient")
        })?;
        let values: Vec<ExactRational> = (m..=m + b.deficiency_span).map(|n| t.get(n, n - m).expect("entry")).collect();
        for (i, v) in values.iter().enumerate() {
            ensure(p.eval_at((m + i) as u64) == *v, || format!("p_{m}({})", m + i))?;
        }
        ensure(forward_difference(&values, m + 1).iter().all(Zero::is_zero), || {
            format!("order-{} differences of the m = {m} diagonal", m + 1)
        })?;
    }
    let errors: Vec<ExactRational> = (2..=2 + b.deficiency_span)
        .map(|n| binomial_approximation_report(n, 2).map(|r| r.error))
        .collect::<crate::Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure(forward_difference(&errors, 2).iter().all(Zero::is_zero), || "m = 2 error is not linear".into())?;
    Ok(format!("m ≤ {}, span {}", b.deficiency, b.deficiency_span))
}

fn monte_carlo(b: &Bounds) -> CheckResult {
    let cfg = McConfig::default();
    let e = estimate_expected_total(1, 100, 1, &cfg).map_err(|e| e.to_string())?;
    ensure(e.mean_exact == ExactRational::from_integer(2.into()), || "n = 1 mean is not exactly 2".into())?;
    let n = if b.mc_seeds > 0 { 30 } else { 20 };
    let e = estimate_expected_total(n, b.mc_samples, 2024, &cfg).map_err(|e| e.to_string())?;
    ensure(e.within_standard_errors(&expected_total(n), 4), || {
        format!("n = {n}: mean {} too far from exact", e.mean)
    })?;
    let mut covered = 0;
    for seed in 0..b.mc_seeds {
        let e = estimate_expected_total(20, 10_000, seed, &cfg).map_err(|e| e.to_string())?;
        covered += u64::from(e.ci_contains(&expected_total(20)));
    }
    let need = b.mc_seeds * 3 / 4;
    ensure(covered >= need, || format!("only {covered}/{} intervals cover the exact value", b.mc_seeds))?;
    Ok(format!("n = {n} with {} samples; coverage {covered}/{}", b.mc_samples, b.mc_seeds))
}

fn output_roundtrip(_: &Bounds) -> CheckResult {
    let t = triangle(12);
    let record = crate::output::triangle_record(&t, Some(8));
    let mut json = Vec::new();
    record.write_json(&mut json).map_err(|e| e.to_string())?;
    let back = OutputRecord::from_json(&String::from_utf8_lossy(&json)).map_err(|e| e.to_string())?;
    for ((n, m, v), entry) in t.entries().zip(&back.results) {
        ensure(entry.exact().ok().as_ref() == Some(v), || format!("JSON entry ({n}, {m})"))?;
    }
    let mut csv = Vec::new();
    record.write_csv(&mut csv).map_err(|e| e.to_string())?;
    let rows = crate::output::read_csv_entries(&String::from_utf8_lossy(&csv)).map_err(|e| e.to_string())?;
    ensure(rows == back.results, || "CSV and JSON disagree".into())?;
    Ok(format!("{} entries", rows.len()))
}

type Check = (&'static str, fn(&Bounds) -> CheckResult);

const CHECKS: &[Check] = &[
    ("per-string exhaustive", per_string_exhaustive),
    ("per-string random", per_string_random),
    ("oracle expectations", oracle_expectations),
    ("closed form", closed_form),
    ("triangle consistency", triangle_consistency),
    ("runs identity", runs_identity),
    ("deficiency polynomials", deficiency),
    ("monte carlo", monte_carlo),
    ("output round trip", output_roundtrip),
];

pub fn run_checks(bounds: &Bounds) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let result = check(bounds);
            let elapsed = start.elapsed();
            let (passed, detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome {
                name,
                passed,
                detail,
                elapsed,
            }
        })
        .collect()
}
