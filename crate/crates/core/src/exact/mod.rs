//! Exact arithmetic: rationals, truncated power series in `t`, and rational
//! functions of `t` with power-series expansion at `t = 0`.

mod ratfun;
mod series;

pub use ratfun::{series_expand, IntPoly, RationalFunctionT};
pub use series::TruncatedSeries;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("denominator has zero constant term; no power-series expansion at t = 0")]
    SingularAtZero,
    #[error("coefficient list must be nonempty")]
    EmptySeries,
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as an exact rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, m)`, zero when `m < 0` or `m > n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 || n < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Returns the value as a nonnegative machine integer if it is one.
pub fn as_nonnegative_integer(q: &Rational) -> Option<u64> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d` (with optional leading `-`).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
