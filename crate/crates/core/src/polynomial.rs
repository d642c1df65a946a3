//! Dense polynomials with exact rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ExactRational;

/// Coefficients stored low degree first; index `i` multiplies `n^i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<ExactRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// `α_i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> ExactRational {
        self.coefficients.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&ExactRational> {
        self.coefficients.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coefficients
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at(&self, n: u64) -> ExactRational {
        self.eval(&ExactRational::from_integer(n.into()))
    }

    /// The unique polynomial of degree below `points.len()` through `points`,
    /// via Newton divided differences expanded into the monomial basis.
    pub fn interpolate(points: &[(ExactRational, ExactRational)]) -> Result<Self> {
        let xs: Vec<&ExactRational> = points.iter().map(|(x, _)| x).collect();
        for (i, x) in xs.iter().enumerate() {
            if xs[..i].contains(x) {
                return Err(Error::Domain(format!("duplicate interpolation node {x}")));
            }
        }
        let mut divided: Vec<ExactRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..points.len() {
            for i in (level..points.len()).rev() {
                divided[i] = (&divided[i] - &divided[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        // Horner over the Newton basis: c_k + (x - x_k) * (...)
        let mut acc: Vec<ExactRational> = Vec::new();
        for k in (0..points.len()).rev() {
            let mut next = vec![ExactRational::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * xs[k];
            }
            next[0] += &divided[k];
            acc = next;
        }
        Ok(Self::new(acc))
    }
}

/// Applies the forward difference operator `order` times.
pub fn forward_difference(values: &[ExactRational], order: usize) -> Vec<ExactRational> {
    let mut current = values.to_vec();
    for _ in 0..order {
        current = current.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    current
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_coefficient = i == 0 || !magnitude.is_one();
            if show_coefficient {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 if show_coefficient => f.write_str("·n")?,
                1 => f.write_str("n")?,
                _ if show_coefficient => write!(f, "·n^{i}")?,
                _ => write!(f, "n^{i}")?,
            }
        }
        Ok(())
    }
}
