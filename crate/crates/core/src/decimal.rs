//! Fixed-scale decimals for approximate summaries.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::ExactRational;

/// `mantissa / 10^scale`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

fn ten_pow(scale: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), scale as usize)
}

impl Decimal {
    /// Rounds `value` to `scale` fractional digits, ties away from zero.
    pub fn from_rational(value: &ExactRational, scale: u32) -> Self {
        let scaled = value.numer() * ten_pow(scale);
        let den = value.denom();
        let magnitude: BigInt = (scaled.abs() * 2 + den) / (den * 2);
        let mantissa = if scaled.sign() == Sign::Minus { -magnitude } else { magnitude };
        Decimal { mantissa, scale }
    }

    /// `sqrt(value)` truncated to `scale` fractional digits.
    ///
    /// # Panics
    ///
    /// Panics if `value` is negative.
    pub fn sqrt_of(value: &ExactRational, scale: u32) -> Self {
        assert!(!value.is_negative(), "square root of a negative value");
        let radicand = value.numer() * ten_pow(2 * scale) / value.denom();
        Decimal {
            mantissa: radicand.sqrt(),
            scale,
        }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// The exact rational this decimal spells.
    pub fn to_rational(&self) -> ExactRational {
        ExactRational::new(self.mantissa.clone(), ten_pow(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or_else(|_| self.to_rational().to_f64().unwrap_or(f64::NAN))
    }

    /// Number of significant digits carried.
    pub fn significant_digits(&self) -> usize {
        let digits = self.mantissa.abs().to_string();
        if self.mantissa.is_zero() {
            self.scale as usize
        } else {
            digits.trim_start_matches('0').len()
        }
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_rational().cmp(&other.to_rational())
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int_part, frac_part) = self.mantissa.abs().div_rem(&ten_pow(self.scale));
        if self.mantissa.is_negative() {
            f.write_str("-")?;
        }
        write!(f, "{int_part}")?;
        if self.scale > 0 {
            write!(f, ".{:0>width$}", frac_part.to_string(), width = self.scale as usize)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p.into(), q.into())
    }

    #[test]
    fn rounding() {
        assert_eq!(Decimal::from_rational(&rat(58537, 512), 4).to_string(), "114.3301");
        assert_eq!(Decimal::from_rational(&rat(1, 3), 5).to_string(), "0.33333");
        assert_eq!(Decimal::from_rational(&rat(2, 3), 5).to_string(), "0.66667");
        assert_eq!(Decimal::from_rational(&rat(-7, 2), 0).to_string(), "-4");
        assert_eq!(Decimal::from_rational(&rat(-1, 8), 2).to_string(), "-0.13");
        assert_eq!(Decimal::from_rational(&rat(7, 2), 3).to_string(), "3.500");
    }

    #[test]
    fn square_roots() {
        assert_eq!(Decimal::sqrt_of(&rat(2, 1), 10).to_string(), "1.4142135623");
        assert_eq!(Decimal::sqrt_of(&rat(9, 4), 2).to_string(), "1.50");
        assert_eq!(Decimal::sqrt_of(&rat(0, 1), 3).to_string(), "0.000");
    }

    #[test]
    fn ordering_and_roundtrip() {
        let a = Decimal::from_rational(&rat(1, 4), 2);
        let b = Decimal::from_rational(&rat(1, 3), 6);
        assert!(a < b);
        assert_eq!(a.to_rational(), rat(1, 4));
        assert_eq!(b.to_f64(), 0.333333);
        assert_eq!(Decimal::from_rational(&rat(114, 1), 40).significant_digits(), 43);
    }
}
