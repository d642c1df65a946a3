//! Acceptance criteria, run in order with one PASS/FAIL line each.
//!
//! `cargo test -p subseq-census --test acceptance`

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use subseq_census::expectation::{
    deficiency_leading_coefficient, expected_total_recurrence_table, triangle as expectation_triangle,
};
use subseq_census::montecarlo::worker_rng;
use subseq_census::oracle::exhaustive_expected_census;
use subseq_census::polynomial::forward_difference;
use subseq_census::{
    census, count_total, count_total_run_recursive, deficiency_polynomial, enumerate_distinct,
    estimate_expected_total, exhaustive_expected_length, exhaustive_expected_total, expected_length,
    expected_total, expected_total_recurrence, sample_string, BigCount, BitString, ExactRational,
    McConfig,
};

type Outcome = Result<String, String>;

fn rat(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p.into(), q.into())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    check(spent < limit, || format!("took {spent:.2?}, limit {limit:?}"))
}

/// Closed form against the first-order recurrence, 0 ≤ n ≤ 2000, under 10 s.
fn closed_form() -> Outcome {
    let start = Instant::now();
    let recurrence = expected_total_recurrence_table(2000);
    for (n, value) in recurrence.iter().enumerate() {
        check(expected_total(n) == *value, || format!("n = {n}"))?;
    }
    check(expected_total_recurrence(2000) == expected_total(2000), || "n = 2000 single call".into())?;
    within(Duration::from_secs(10), start)?;
    Ok(format!("0 ≤ n ≤ 2000 exact, {:.2?}", start.elapsed()))
}

/// Exhaustive averages over all binary strings equal the exact expectations, n ≤ 14, under 60 s.
fn definition_ground_truth() -> Outcome {
    let start = Instant::now();
    for n in 0..=14 {
        let total = exhaustive_expected_total(n).map_err(|e| e.to_string())?;
        check(total == expected_total(n), || format!("total, n = {n}: {total}"))?;
        let by_length = exhaustive_expected_census(n).map_err(|e| e.to_string())?;
        for (m, v) in by_length.iter().enumerate() {
            check(*v == expected_length(n, m), || format!("({n}, {m}): {v}"))?;
        }
        check(
            exhaustive_expected_length(n, n + 1).map_err(|e| e.to_string())?.is_zero(),
            || format!("m = n + 1 at n = {n}"),
        )?;
    }
    for n in 0..=10 {
        for m in 0..=n {
            let v = exhaustive_expected_length(n, m).map_err(|e| e.to_string())?;
            check(v == expected_length(n, m), || format!("direct ({n}, {m}): {v}"))?;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("n ≤ 14, all m, {:.2?}", start.elapsed()))
}

/// Row sums and dyadic form of the triangle for n ≤ 500.
fn triangle_consistency() -> Outcome {
    let table = expectation_triangle(500);
    for n in 0..=500 {
        let row = table.row(n).ok_or("missing row")?;
        check(row.len() == n + 1, || format!("row {n} length"))?;
        check(row.iter().sum::<ExactRational>() == expected_total(n), || format!("row {n} sum"))?;
        for (m, v) in row.iter().enumerate() {
            let scaled = v.numer() * (BigInt::one() << (n - m));
            check(scaled.is_multiple_of(v.denom()), || format!("2^(n-m) Ŝ({n},{m}) not an integer"))?;
        }
    }
    Ok("n ≤ 500: row sums exact, all entries dyadic".into())
}

/// Ŝ(n, n-1) = (n+1)/2 for 1 ≤ n ≤ 100.
fn runs_identity() -> Outcome {
    for n in 1..=100 {
        check(expected_length(n, n - 1) == rat(n as i64 + 1, 2), || format!("n = {n}"))?;
    }
    Ok("1 ≤ n ≤ 100".into())
}

/// Deficiency polynomials for m ≤ 10.
fn deficiency_polynomials() -> Outcome {
    let table = expectation_triangle(60);
    for m in 0..=10usize {
        let p = deficiency_polynomial(m).map_err(|e| e.to_string())?;
        let factorial: BigInt = (1..=m).map(BigInt::from).product();
        let leading = ExactRational::new(BigInt::one(), (BigInt::one() << m) * factorial);
        check(p.degree() == Some(m), || format!("p_{m} degree {:?}", p.degree()))?;
        check(p.leading_coefficient() == Some(&leading), || format!("p_{m} leading coefficient"))?;
        check(deficiency_leading_coefficient(m) == leading, || format!("library 1/(2^{m} {m}!)"))?;
        let diagonal: Vec<ExactRational> = (m..=m + 50).map(|n| table.get(n, n - m).expect("in table")).collect();
        for (i, v) in diagonal.iter().enumerate() {
            check(p.eval_at((m + i) as u64) == *v, || format!("p_{m}({})", m + i))?;
        }
        check(forward_difference(&diagonal, m + 1).iter().all(Zero::is_zero), || {
            format!("order {} differences, m = {m}", m + 1)
        })?;
    }
    Ok("m ≤ 10, n ∈ [m, m+50]".into())
}

/// DP, recursion, and enumeration agree per string; under 60 s.
fn per_string_agreement() -> Outcome {
    let start = Instant::now();
    let mut strings = 0;
    for n in 0..=12 {
        for mask in 0..1u64 << n {
            let s = BitString::from_mask(n, mask);
            let set = enumerate_distinct(&s).map_err(|e| e.to_string())?;
            let total = count_total(&s);
            check(total == count_total_run_recursive(&s), || format!("{s}: DP vs recursion"))?;
            check(total == BigCount::from(set.len()), || format!("{s}: DP vs enumeration"))?;
            let grouped: Vec<BigCount> = set.by_length().into_iter().map(BigCount::from).collect();
            check(census(&s) == grouped, || format!("{s}: census vs enumeration"))?;
            strings += 1;
        }
    }
    let mut rng = worker_rng(64, 0);
    for _ in 0..1000 {
        let s = sample_string(64, &mut rng);
        check(count_total(&s) == count_total_run_recursive(&s), || format!("{s}: DP vs recursion"))?;
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{strings} exhaustive strings + 1000 at n = 64, {:.2?}", start.elapsed()))
}

/// Monte Carlo: n = 30 within 4 SE; ≥ 15 of 20 CIs cover at n = 20.
fn monte_carlo_calibration() -> Outcome {
    let cfg = McConfig::default();
    let e = estimate_expected_total(30, 100_000, 30, &cfg).map_err(|e| e.to_string())?;
    let exact = expected_total(30);
    check(e.within_standard_errors(&exact, 4), || {
        format!("n = 30: mean {} se {} exact {exact}", e.mean, e.std_error)
    })?;
    let exact20 = expected_total(20);
    let mut covered = 0;
    for seed in 0..20 {
        let e = estimate_expected_total(20, 10_000, seed, &cfg).map_err(|e| e.to_string())?;
        covered += usize::from(e.ci_contains(&exact20));
    }
    check(covered >= 15, || format!("coverage {covered}/20"))?;
    Ok(format!("n = 30 within 4 SE; coverage {covered}/20 at n = 20"))
}

/// Pinned point values.
fn point_values() -> Outcome {
    check(count_total(&BitString::binary("0101").unwrap()) == BigCount::from(12u32), || "C(0101)".into())?;
    check(expected_total(2) == rat(7, 2), || "Ŝ_2".into())?;
    check(expected_length(2, 1) == rat(3, 2), || "Ŝ(2,1)".into())?;
    let p2 = deficiency_polynomial(2).map_err(|e| e.to_string())?;
    for n in 2..=50i64 {
        check(p2.eval_at(n as u64) * rat(8, 1) == rat(n * n + n + 2, 1), || format!("8 p_2({n})"))?;
    }
    Ok("C(0101)=12, Ŝ_2=7/2, Ŝ(2,1)=3/2, 8·p_2(n)=n²+n+2".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 closed form vs recurrence", closed_form),
        ("2 exhaustive ground truth", definition_ground_truth),
        ("3 triangle consistency", triangle_consistency),
        ("4 runs identity", runs_identity),
        ("5 deficiency polynomials", deficiency_polynomials),
        ("6 per-string agreement", per_string_agreement),
        ("7 monte carlo calibration", monte_carlo_calibration),
        ("8 point values", point_values),
    ];
    let mut failures = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
