//! Distinct-subsequence counts of a single string.
//!
//! Two independent routes are provided for every count:
//!
//! * a prefix DP that deduplicates via the previous occurrence of each symbol
//!   ([`count_total`], [`count_length`], [`census`]);
//! * a suffix recursion on where each distinct subsequence can first be
//!   embedded ([`count_total_run_recursive`], [`count_length_run_recursive`],
//!   [`census_run_recursive`]). For a binary string starting with a run of
//!   length `k`, every nonempty subsequence can be embedded starting at `s_0`
//!   or at `s_k`, so `C(s) = 1 + C(s[1:]) + C(s[k+1:])` and
//!   `U_m(s) = U_{m-1}(s[1:]) + U_{m-1}(s[k+1:])`, the second term vanishing
//!   when `k = n`. Over a general alphabet the same holds with one term per
//!   distinct symbol.
//!
//! The empty subsequence is counted by the totals and at length 0.

use num_traits::{One, Zero};

use crate::string::BitString;
use crate::BigCount;

/// Number of distinct subsequences of `s`, the empty one included.
pub fn count_total(s: &BitString) -> BigCount {
    // total after the prefix that ends just before the previous occurrence of each symbol
    let mut before_last: Vec<Option<BigCount>> = vec![None; 256];
    let mut total = BigCount::one();
    for &symbol in s.symbols() {
        let mut next = &total << 1usize;
        if let Some(repeat) = &before_last[symbol as usize] {
            next -= repeat;
        }
        before_last[symbol as usize] = Some(std::mem::replace(&mut total, next));
    }
    total
}

/// Number of distinct subsequences of `s` with length exactly `m`.
pub fn count_length(s: &BitString, m: usize) -> BigCount {
    if m > s.len() {
        return BigCount::zero();
    }
    length_table(s, m).swap_remove(m)
}

/// Distinct-subsequence counts of `s` by length, indexed `0..=n`.
pub fn census(s: &BitString) -> Vec<BigCount> {
    length_table(s, s.len())
}

/// Counts for lengths `0..=cap` via `D[i][m] = D[i-1][m] + D[i-1][m-1] - D[j-1][m-1]`,
/// `j` being the previous occurrence of `s_{i-1}`.
fn length_table(s: &BitString, cap: usize) -> Vec<BigCount> {
    let mut row = vec![BigCount::zero(); cap + 1];
    row[0] = BigCount::one();
    let mut before_last: Vec<Option<Vec<BigCount>>> = vec![None; 256];
    for &symbol in s.symbols() {
        let mut next = row.clone();
        for m in 1..=cap {
            next[m] += &row[m - 1];
            if let Some(repeat) = &before_last[symbol as usize] {
                next[m] -= &repeat[m - 1];
            }
        }
        before_last[symbol as usize] = Some(std::mem::replace(&mut row, next));
    }
    row
}

/// For every suffix start `i`, the first position of each distinct symbol in
/// `s[i:]`. For binary input this is `[i]` or `[i, i + k]`, `k` the run length at `i`.
fn first_occurrences(s: &BitString) -> Vec<Vec<usize>> {
    let symbols = s.symbols();
    let mut next: Vec<Option<usize>> = vec![None; 256];
    let mut seen: Vec<u8> = Vec::new();
    let mut out = vec![Vec::new(); symbols.len()];
    for i in (0..symbols.len()).rev() {
        let symbol = symbols[i];
        if next[symbol as usize].is_none() {
            seen.push(symbol);
        }
        next[symbol as usize] = Some(i);
        let mut firsts: Vec<usize> = seen.iter().filter_map(|&c| next[c as usize]).collect();
        firsts.sort_unstable();
        out[i] = firsts;
    }
    out
}

/// [`count_total`] by the first-embedding recursion, memoized over suffixes.
pub fn count_total_run_recursive(s: &BitString) -> BigCount {
    let n = s.len();
    let firsts = first_occurrences(s);
    let mut suffix_total = vec![BigCount::one(); n + 1];
    for i in (0..n).rev() {
        let mut total = BigCount::one();
        for &p in &firsts[i] {
            total += &suffix_total[p + 1];
        }
        suffix_total[i] = total;
    }
    suffix_total.swap_remove(0)
}

/// [`count_length`] by the first-embedding recursion over `(suffix, m)`.
pub fn count_length_run_recursive(s: &BitString, m: usize) -> BigCount {
    if m > s.len() {
        return BigCount::zero();
    }
    suffix_length_table(s, m).swap_remove(m)
}

/// [`census`] by the first-embedding recursion.
pub fn census_run_recursive(s: &BitString) -> Vec<BigCount> {
    suffix_length_table(s, s.len())
}

fn suffix_length_table(s: &BitString, cap: usize) -> Vec<BigCount> {
    let n = s.len();
    let firsts = first_occurrences(s);
    // table[i][m] = U_m(s[i:])
    let mut table = vec![vec![BigCount::zero(); cap + 1]; n + 1];
    table[n][0] = BigCount::one();
    for i in (0..n).rev() {
        let mut row = vec![BigCount::zero(); cap + 1];
        row[0] = BigCount::one();
        for m in 1..=cap {
            for &p in &firsts[i] {
                row[m] += &table[p + 1][m - 1];
            }
        }
        table[i] = row;
    }
    table.swap_remove(0)
}
