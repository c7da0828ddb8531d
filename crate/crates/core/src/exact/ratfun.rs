use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational, TruncatedSeries};

/// Polynomial in `t` with integer coefficients; `coeffs[d]` multiplies `t^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `c * t^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `1 + sign * t^d`.
    pub fn binomial(sign: i64, d: usize) -> Self {
        Self::one().add(&Self::monomial(sign, d))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient when `divisor` divides `self` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(Self::default);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for q in (0..quot.len()).rev() {
            let (c, r) = rem[q + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (k, b) in divisor.coeffs.iter().enumerate() {
                rem[q + k] -= &c * b;
            }
            quot[q] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let coeffs = (0..=order).map(|d| Rational::from_integer(self.coeff(d))).collect();
        TruncatedSeries::new(coeffs).expect("order + 1 > 0 coefficients")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show = d == 0 || !mag.is_one();
            if show {
                write!(f, "{mag}")?;
            }
            let star = if show { "*" } else { "" };
            match d {
                0 => {}
                1 => write!(f, "{star}t")?,
                _ => write!(f, "{star}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A quotient of integer polynomials in `t` whose denominator does not
/// vanish at `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionT {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalFunctionT {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self, ExactError> {
        if denominator.coeff(0).is_zero() {
            return Err(ExactError::SingularAtZero);
        }
        Ok(Self { numerator, denominator })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// Power-series expansion at `t = 0` through `t^order`, by exact long
    /// division.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let lead = Rational::from_integer(self.denominator.coeff(0));
        let den: Vec<Rational> = (0..=order)
            .map(|d| Rational::from_integer(self.denominator.coeff(d)))
            .collect();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for d in 0..=order {
            let mut acc = Rational::from_integer(self.numerator.coeff(d));
            for (k, c) in out.iter().enumerate() {
                let b = &den[d - k];
                if !b.is_zero() {
                    acc -= c * b;
                }
            }
            out.push(acc / &lead);
        }
        TruncatedSeries::new(out).expect("order + 1 > 0 coefficients")
    }
}

/// Expansion of `f` at `t = 0` through `t^order`.
pub fn series_expand(f: &RationalFunctionT, order: usize) -> TruncatedSeries {
    f.expand(order)
}

impl fmt::Display for RationalFunctionT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}
