//! Sampling estimates of the expected counts, for sizes the exhaustive
//! oracle cannot reach.
//!
//! Samples are split over a fixed number of logical workers. Worker `w`
//! draws from ChaCha8 seeded with `seed_from_u64(seed)` on stream `w`, so an
//! estimate is a pure function of `(n, m, samples, seed, workers)` no matter
//! how many threads actually run it. Per-sample counts are exact integers and
//! are summed exactly; only the summary is rounded.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::count::{count_length, count_total};
use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::string::BitString;
use crate::{BigCount, ExactRational};

/// Generator identifier recorded in every estimate.
pub const RNG_ID: &str = "chacha8/rand_chacha-0.9/seed_from_u64+stream=worker/u64-lsb-first";

/// Fractional digits carried by summary decimals.
pub const SUMMARY_SCALE: u32 = 40;

pub const DEFAULT_WORKERS: usize = 4;

/// Two-sided 95% normal quantile, 1.96.
fn z95() -> ExactRational {
    ExactRational::new(49.into(), 25.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    /// Number of logical sample partitions; part of the reproducibility key.
    pub workers: usize,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            workers: DEFAULT_WORKERS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McEstimate {
    pub n: usize,
    pub m: Option<usize>,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    #[serde(serialize_with = "display")]
    pub mean: Decimal,
    #[serde(serialize_with = "display")]
    pub std_error: Decimal,
    #[serde(serialize_with = "display")]
    pub ci95_low: Decimal,
    #[serde(serialize_with = "display")]
    pub ci95_high: Decimal,
    pub rng_id: String,
    /// Sample mean as an exact rational.
    #[serde(serialize_with = "display")]
    pub mean_exact: ExactRational,
    /// Unbiased sample variance as an exact rational.
    #[serde(serialize_with = "display")]
    pub variance_exact: ExactRational,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl McEstimate {
    /// `|mean - target| ≤ k · std_error`, evaluated exactly.
    pub fn within_standard_errors(&self, target: &ExactRational, k: u32) -> bool {
        let gap = (&self.mean_exact - target).abs();
        gap <= self.std_error.to_rational() * ExactRational::from_integer(k.into())
    }

    pub fn ci_contains(&self, target: &ExactRational) -> bool {
        self.ci95_low.to_rational() <= *target && *target <= self.ci95_high.to_rational()
    }
}

/// A uniform binary string of length `n`.
///
/// Consumes `ceil(n / 64)` calls to `next_u64`; bit `i` of the string is bit
/// `i % 64` (least significant first) of word `i / 64`.
pub fn sample_string<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> BitString {
    let mut bits = Vec::with_capacity(n);
    while bits.len() < n {
        let word = rng.next_u64();
        let take = (n - bits.len()).min(64);
        bits.extend((0..take).map(|i| word >> i & 1 == 1));
    }
    BitString::from_bits(bits)
}

/// The generator for logical worker `worker`.
pub fn worker_rng(seed: u64, worker: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker as u64);
    rng
}

/// How many of `samples` go to `worker`: an even split, the first
/// `samples % workers` workers taking one extra.
fn worker_share(samples: u64, workers: usize, worker: usize) -> u64 {
    let w = workers as u64;
    samples / w + u64::from((worker as u64) < samples % w)
}

struct Sums {
    total: BigCount,
    squares: BigCount,
}

fn run<F>(n: usize, m: Option<usize>, samples: u64, seed: u64, config: &McConfig, count: F) -> Result<McEstimate>
where
    F: Fn(&BitString) -> BigCount + Sync,
{
    if samples < 2 {
        return Err(Error::Domain(format!("need at least 2 samples, got {samples}")));
    }
    if config.workers == 0 {
        return Err(Error::Domain("need at least one worker".into()));
    }
    let partials: Vec<Sums> = (0..config.workers)
        .into_par_iter()
        .map(|worker| {
            let mut rng = worker_rng(seed, worker);
            let mut sums = Sums {
                total: BigCount::zero(),
                squares: BigCount::zero(),
            };
            for _ in 0..worker_share(samples, config.workers, worker) {
                let c = count(&sample_string(n, &mut rng));
                sums.squares += &c * &c;
                sums.total += c;
            }
            sums
        })
        .collect();
    let (total, squares) = partials
        .into_iter()
        .fold((BigCount::zero(), BigCount::zero()), |(t, q), s| (t + s.total, q + s.squares));

    let k = ExactRational::from_integer(samples.into());
    let total = ExactRational::from_integer(BigInt::from(total));
    let squares = ExactRational::from_integer(BigInt::from(squares));
    let mean_exact = &total / &k;
    let variance_exact = (squares - &total * &total / &k) / (&k - ExactRational::from_integer(1.into()));
    let std_error = Decimal::sqrt_of(&(&variance_exact / &k), SUMMARY_SCALE);
    let half_width = z95() * std_error.to_rational();
    Ok(McEstimate {
        n,
        m,
        samples,
        seed,
        workers: config.workers,
        mean: Decimal::from_rational(&mean_exact, SUMMARY_SCALE),
        ci95_low: Decimal::from_rational(&(&mean_exact - &half_width), SUMMARY_SCALE),
        ci95_high: Decimal::from_rational(&(&mean_exact + &half_width), SUMMARY_SCALE),
        std_error,
        rng_id: RNG_ID.to_string(),
        mean_exact,
        variance_exact,
    })
}

/// Estimates the expected total number of distinct subsequences.
pub fn estimate_expected_total(n: usize, samples: u64, seed: u64, config: &McConfig) -> Result<McEstimate> {
    run(n, None, samples, seed, config, count_total)
}

/// Estimates the expected number of distinct length-`m` subsequences.
pub fn estimate_expected_length(
    n: usize,
    m: usize,
    samples: u64,
    seed: u64,
    config: &McConfig,
) -> Result<McEstimate> {
    if m > n {
        return Err(Error::Domain(format!("length m = {m} exceeds n = {n}; the expectation is exactly 0")));
    }
    run(n, Some(m), samples, seed, config, |s| count_length(s, m))
}
