//! Finite strings over a small alphabet and their run structure.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which symbols a [`BitString`] may contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Alphabet {
    /// `'0'` and `'1'` only.
    #[default]
    Binary,
    /// Any byte value, so up to 256 distinct symbols.
    General,
}

impl Alphabet {
    pub fn contains(self, symbol: u8) -> bool {
        match self {
            Alphabet::Binary => symbol == b'0' || symbol == b'1',
            Alphabet::General => true,
        }
    }
}

/// A finite sequence of byte symbols tagged with its alphabet.
///
/// Binary strings store the ASCII bytes `b'0'` and `b'1'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    symbols: Vec<u8>,
    alphabet: Alphabet,
}

impl BitString {
    /// Parses a string of `'0'`/`'1'` characters.
    pub fn binary(text: &str) -> Result<Self> {
        if let Some((position, symbol)) = text.chars().enumerate().find(|&(_, c)| c != '0' && c != '1') {
            return Err(Error::InvalidSymbol { symbol, position });
        }
        Ok(BitString {
            symbols: text.as_bytes().to_vec(),
            alphabet: Alphabet::Binary,
        })
    }

    /// Parses an ASCII string over the general alphabet.
    pub fn general(text: &str) -> Result<Self> {
        if let Some(position) = text.bytes().position(|b| !b.is_ascii()) {
            return Err(Error::NonAscii { position });
        }
        Ok(BitString {
            symbols: text.as_bytes().to_vec(),
            alphabet: Alphabet::General,
        })
    }

    /// Wraps arbitrary bytes as a general-alphabet string.
    pub fn from_bytes(symbols: Vec<u8>) -> Self {
        BitString {
            symbols,
            alphabet: Alphabet::General,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        BitString {
            symbols: bits.into_iter().map(|b| if b { b'1' } else { b'0' }).collect(),
            alphabet: Alphabet::Binary,
        }
    }

    /// The binary string of length `n` spelling `mask` most significant bit
    /// first, so masks `0..2^n` enumerate strings in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        Self::from_bits((0..n).map(|i| (mask >> (n - 1 - i)) & 1 == 1))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The half-open substring `s[start:end]`.
    ///
    /// # Panics
    ///
    /// Panics if `start > end` or `end > self.len()`.
    pub fn slice(&self, start: usize, end: usize) -> BitString {
        BitString {
            symbols: self.symbols[start..end].to_vec(),
            alphabet: self.alphabet,
        }
    }

    pub fn push(&mut self, symbol: u8) -> Result<()> {
        if !self.alphabet.contains(symbol) {
            return Err(Error::InvalidSymbol {
                symbol: symbol as char,
                position: self.symbols.len(),
            });
        }
        self.symbols.push(symbol);
        Ok(())
    }

    pub fn runs(&self) -> RunDecomposition {
        runs(self)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BitString::binary(s)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.symbols))
    }
}

/// Maximal constant substrings, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RunDecomposition {
    pub run_lengths: Vec<usize>,
    pub run_symbols: Vec<u8>,
}

impl RunDecomposition {
    pub fn len(&self) -> usize {
        self.run_lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.run_lengths.is_empty()
    }

    /// Length of the initial run, 0 for the empty string.
    pub fn initial_run(&self) -> usize {
        self.run_lengths.first().copied().unwrap_or(0)
    }
}

pub fn runs(s: &BitString) -> RunDecomposition {
    let mut out = RunDecomposition::default();
    for &symbol in s.symbols() {
        match out.run_symbols.last() {
            Some(&last) if last == symbol => *out.run_lengths.last_mut().unwrap() += 1,
            _ => {
                out.run_symbols.push(symbol);
                out.run_lengths.push(1);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decomposition(s: &str) -> (Vec<usize>, Vec<u8>) {
        let r = BitString::binary(s).unwrap().runs();
        (r.run_lengths, r.run_symbols)
    }

    #[test]
    fn run_examples() {
        assert_eq!(decomposition(""), (vec![], vec![]));
        assert_eq!(decomposition("0011"), (vec![2, 2], b"01".to_vec()));
        assert_eq!(decomposition("0100"), (vec![1, 1, 2], b"010".to_vec()));
    }

    #[test]
    fn rejects_non_binary() {
        assert_eq!(
            BitString::binary("01a1"),
            Err(Error::InvalidSymbol { symbol: 'a', position: 2 })
        );
        assert!(BitString::general("01a1").is_ok());
        assert_eq!(BitString::general("ab\u{e9}"), Err(Error::NonAscii { position: 2 }));
    }

    #[test]
    fn slicing_is_half_open() {
        let s = BitString::binary("011010").unwrap();
        assert_eq!(s.slice(1, 4).to_string(), "110");
        assert_eq!(s.slice(3, 3).to_string(), "");
        assert_eq!(s.slice(0, 6), s);
    }

    #[test]
    fn push_respects_alphabet() {
        let mut s = BitString::binary("0").unwrap();
        s.push(b'1').unwrap();
        assert!(s.push(b'2').is_err());
        assert_eq!(s.to_string(), "01");
    }

    #[test]
    fn masks_are_msb_first() {
        assert_eq!(BitString::from_mask(4, 0b0101).to_string(), "0101");
        assert_eq!(BitString::from_mask(0, 0).to_string(), "");
    }

    #[test]
    fn runs_partition_the_string() {
        for mask in 0..(1u64 << 10) {
            let s = BitString::from_mask(10, mask);
            let r = s.runs();
            assert_eq!(r.run_lengths.iter().sum::<usize>(), 10);
            assert!(r.run_symbols.windows(2).all(|w| w[0] != w[1]));
        }
    }
}
