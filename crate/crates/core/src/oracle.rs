//! Brute-force ground truth.
//!
//! [`enumerate_distinct`] lists subsequences straight from the definition by
//! walking all `2^n` index subsets. The exhaustive expectations average a
//! count over every binary string of length `n`; up to
//! [`ENUMERATION_SWEEP_LIMIT`] each string is enumerated, beyond it the
//! (already oracle-checked) prefix DP from [`crate::count`] is used.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::count::{census, count_total};
use crate::error::{Error, Result};
use crate::string::BitString;
use crate::{BigCount, ExactRational};

/// Largest string [`enumerate_distinct`] accepts.
pub const ENUMERATION_LIMIT: usize = 24;
/// Largest `n` for the exhaustive expectation sweeps.
pub const EXHAUSTIVE_LIMIT: usize = 14;
/// Largest `n` at which the exhaustive sweeps enumerate rather than use the DP.
pub const ENUMERATION_SWEEP_LIMIT: usize = 12;

/// The set of distinct subsequences of a source string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsequenceSet {
    elements: BTreeSet<Vec<u8>>,
    source_length: usize,
}

impl SubsequenceSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Never true: the empty subsequence is always present.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn contains(&self, subsequence: &[u8]) -> bool {
        self.elements.contains(subsequence)
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        self.elements.iter().map(Vec::as_slice)
    }

    /// Number of elements of each length `0..=source_length`.
    pub fn by_length(&self) -> Vec<usize> {
        let mut counts = vec![0; self.source_length + 1];
        for e in &self.elements {
            counts[e.len()] += 1;
        }
        counts
    }
}

/// Greedy left-to-right embedding test.
pub fn is_subsequence(candidate: &[u8], source: &[u8]) -> bool {
    let mut rest = source.iter();
    candidate.iter().all(|c| rest.any(|s| s == c))
}

/// All distinct subsequences of `s`, from all `2^n` index subsets.
pub fn enumerate_distinct(s: &BitString) -> Result<SubsequenceSet> {
    let n = s.len();
    if n > ENUMERATION_LIMIT {
        return Err(Error::LengthGuardExceeded {
            what: "subsequence enumeration",
            requested: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let symbols = s.symbols();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut buf = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << n) {
        buf.clear();
        buf.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| symbols[i]));
        if !seen.contains(&buf) {
            seen.insert(buf.clone());
        }
    }
    Ok(SubsequenceSet {
        elements: seen.into_iter().collect(),
        source_length: n,
    })
}

fn check_exhaustive(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::LengthGuardExceeded {
            what: "exhaustive expectation",
            requested: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(())
}

fn average(sum: BigUint, n: usize) -> ExactRational {
    ExactRational::new(BigInt::from(sum), BigInt::one() << n)
}

/// Mean of `count_total` over all binary strings of length `n`.
pub fn exhaustive_expected_total(n: usize) -> Result<ExactRational> {
    check_exhaustive(n)?;
    let sum = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let s = BitString::from_mask(n, mask);
            if n <= ENUMERATION_SWEEP_LIMIT {
                BigCount::from(enumerate_distinct(&s).expect("within guard").len())
            } else {
                count_total(&s)
            }
        })
        .reduce(BigCount::zero, |a, b| a + b);
    Ok(average(sum, n))
}

/// Mean of `count_length(·, m)` over all binary strings of length `n`.
pub fn exhaustive_expected_length(n: usize, m: usize) -> Result<ExactRational> {
    check_exhaustive(n)?;
    if m > n {
        return Ok(ExactRational::zero());
    }
    let sum = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let s = BitString::from_mask(n, mask);
            if n <= ENUMERATION_SWEEP_LIMIT {
                BigCount::from(enumerate_distinct(&s).expect("within guard").by_length()[m])
            } else {
                crate::count::count_length(&s, m)
            }
        })
        .reduce(BigCount::zero, |a, b| a + b);
    Ok(average(sum, n))
}

/// All of `exhaustive_expected_length(n, 0..=n)` from a single sweep.
pub fn exhaustive_expected_census(n: usize) -> Result<Vec<ExactRational>> {
    check_exhaustive(n)?;
    let sums = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let s = BitString::from_mask(n, mask);
            if n <= ENUMERATION_SWEEP_LIMIT {
                enumerate_distinct(&s)
                    .expect("within guard")
                    .by_length()
                    .into_iter()
                    .map(BigCount::from)
                    .collect()
            } else {
                census(&s)
            }
        })
        .reduce(
            || vec![BigCount::zero(); n + 1],
            |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect(),
        );
    Ok(sums.into_iter().map(|sum| average(sum, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p.into(), q.into())
    }

    fn listing(s: &str) -> Vec<String> {
        let set = enumerate_distinct(&BitString::binary(s).unwrap()).unwrap();
        set.iter().map(|e| String::from_utf8(e.to_vec()).unwrap()).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(listing(""), vec![""]);
        assert_eq!(listing("01"), vec!["", "0", "01", "1"]);
        assert_eq!(listing("11"), vec!["", "1", "11"]);
    }

    #[test]
    fn enumeration_guard() {
        let s = BitString::from_mask(25, 0);
        assert!(matches!(
            enumerate_distinct(&s),
            Err(Error::LengthGuardExceeded { requested: 25, limit: 24, .. })
        ));
        assert!(enumerate_distinct(&BitString::from_mask(24, 0xabcdef)).is_ok());
    }

    #[test]
    fn elements_are_subsequences() {
        for mask in 0..(1u64 << 9) {
            let s = BitString::from_mask(9, mask);
            let set = enumerate_distinct(&s).unwrap();
            assert!(set.contains(b""));
            assert!(set.iter().all(|e| is_subsequence(e, s.symbols())));
        }
        assert!(!is_subsequence(b"110", b"0101"));
        assert!(is_subsequence(b"011", b"0101"));
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(exhaustive_expected_total(0).unwrap(), rat(1, 1));
        assert_eq!(exhaustive_expected_total(2).unwrap(), rat(7, 2));
        assert_eq!(exhaustive_expected_total(3).unwrap(), rat(23, 4));
        for n in 0..8 {
            assert_eq!(exhaustive_expected_length(n, 0).unwrap(), rat(1, 1));
        }
        assert_eq!(exhaustive_expected_length(2, 1).unwrap(), rat(3, 2));
        assert_eq!(exhaustive_expected_length(5, 4).unwrap(), rat(3, 1));
        assert_eq!(exhaustive_expected_length(3, 7).unwrap(), rat(0, 1));
    }

    #[test]
    fn exhaustive_guard() {
        assert!(matches!(
            exhaustive_expected_total(15),
            Err(Error::LengthGuardExceeded { requested: 15, limit: 14, .. })
        ));
        assert!(exhaustive_expected_length(15, 2).is_err());
        assert!(exhaustive_expected_census(15).is_err());
    }

    #[test]
    fn total_is_sum_of_lengths() {
        for n in 0..=10 {
            let total = exhaustive_expected_total(n).unwrap();
            let by_length: ExactRational =
                (0..=n).map(|m| exhaustive_expected_length(n, m).unwrap()).sum();
            assert_eq!(total, by_length);
            let batched = exhaustive_expected_census(n).unwrap();
            assert_eq!(batched.iter().sum::<ExactRational>(), total);
        }
    }

    #[test]
    fn dp_and_enumeration_sweeps_agree_at_the_switch() {
        // n = 12 enumerates; recompute with the DP directly
        let n = ENUMERATION_SWEEP_LIMIT;
        let sum: BigCount = (0..1u64 << n).map(|mask| count_total(&BitString::from_mask(n, mask))).sum();
        assert_eq!(exhaustive_expected_total(n).unwrap(), average(sum, n));
    }
}
