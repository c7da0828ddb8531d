use std::fmt;

use num_traits::{One, Zero};

use super::{fmt_rational, ExactError, Rational};

/// A power series in `t` known up to and including `t^order`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        if coeffs.is_empty() {
            return Err(ExactError::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Builds a series from integer coefficients, padded with zeros to `order`.
    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (c, &v) in coeffs.iter_mut().zip(values) {
            *c = super::rat(v);
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `c * t^degree`, or the zero series if `degree > order`.
    pub fn monomial(c: Rational, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; zero past the truncation order.
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    /// Multiplies by `t^k`, keeping the same order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Rational::zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Self { coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::linear_combination(&[(Rational::one(), self), (Rational::one(), other)])
            .expect("two terms")
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::linear_combination(&[(Rational::one(), self), (-Rational::one(), other)])
            .expect("two terms")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `Σ c_i · s_i`, truncated to the smallest order among the terms.
    /// Returns `None` for an empty list.
    pub fn linear_combination(terms: &[(Rational, &Self)]) -> Option<Self> {
        let order = terms.iter().map(|(_, s)| s.order()).min()?;
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (c, s) in terms {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in coeffs.iter_mut().zip(&s.coeffs) {
                *acc += c * x;
            }
        }
        Some(Self { coeffs })
    }

    /// Formal quotient `self / divisor`, truncated to the smaller order.
    pub fn div(&self, divisor: &Self) -> Result<Self, ExactError> {
        let lead = &divisor.coeffs[0];
        if lead.is_zero() {
            return Err(ExactError::SingularAtZero);
        }
        let order = self.order().min(divisor.order());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for d in 0..=order {
            let mut acc = self.coeffs[d].clone();
            for (k, qk) in q.iter().enumerate() {
                let b = &divisor.coeffs[d - k];
                if !b.is_zero() {
                    acc -= qk * b;
                }
            }
            q.push(acc / lead);
        }
        Ok(Self { coeffs: q })
    }

    /// Highest degree with a nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

impl fmt::Display for TruncatedSeries {
    /// Ascending powers, zero terms omitted, followed by `+ O(t^{N+1})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = d == 0 || !mag.is_one();
            if show_coeff {
                f.write_str(&fmt_rational(&mag))?;
            }
            match d {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{}", if show_coeff { "*" } else { "" }, d)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn ints(xs: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(xs, order)
    }

    #[test]
    fn difference_of_squares() {
        let p = ints(&[1, 1], 2).mul(&ints(&[1, -1], 2));
        assert_eq!(p, ints(&[1, 0, -1], 2));
    }

    #[test]
    fn geometric_series_inverse() {
        let geo = ints(&[1; 6], 5);
        assert_eq!(geo.mul(&ints(&[1, -1], 5)), TruncatedSeries::one(5));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = ints(&[1, 2, 3, 4], 3);
        let b = ints(&[1, 1], 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b), ints(&[2, 3], 1));
    }

    #[test]
    fn shift_drops_overflow() {
        let s = ints(&[1, 2, 3], 2);
        assert_eq!(s.shift(1), ints(&[0, 1, 2], 2));
        assert!(s.shift(3).is_zero());
        assert!(s.shift(10).is_zero());
    }

    #[test]
    fn linear_combinations() {
        let s = ints(&[3, 1, 4, 1, 5], 4);
        let half = ratio(1, 2);
        let avg = TruncatedSeries::linear_combination(&[(half.clone(), &s), (half, &s)]).unwrap();
        assert_eq!(avg, s);
        let zero = TruncatedSeries::linear_combination(&[(rat(1), &s), (rat(-1), &s)]).unwrap();
        assert!(zero.is_zero());
        assert!(TruncatedSeries::linear_combination(&[]).is_none());
    }

    #[test]
    fn division_checks_constant_term() {
        let s = ints(&[1, 1], 3);
        assert_eq!(s.div(&ints(&[0, 1], 3)), Err(ExactError::SingularAtZero));
        assert_eq!(ints(&[1], 3).div(&ints(&[1, -1], 3)).unwrap(), ints(&[1, 1, 1, 1], 3));
        assert!(TruncatedSeries::new(vec![]).is_err());
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::new(vec![rat(1), rat(0), ratio(-1, 3), rat(2)]).unwrap();
        assert_eq!(s.to_string(), "1 - 1/3*t^2 + 2*t^3 + O(t^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(t^2)");
    }

    fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-9i64..10, order + 1)
            .prop_map(move |v| TruncatedSeries::from_integers(&v, order))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in series(8), b in series(6), c in series(7)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
