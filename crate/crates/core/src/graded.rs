//! Polynomials in `α, β, γ` graded by weighted degree `|α| = 2, |β| = 4,
//! |γ| = 6`, and the Mumford relation sequence `c_n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::exact::{fmt_rational, parse_rational, rat, ratio, Rational};

pub const WEIGHTS: [u32; 3] = [2, 4, 6];
const NAMES: [&str; 3] = ["alpha", "beta", "gamma"];

/// `α^i β^j γ^k`.
///
/// `Ord` is the fixed monomial order used throughout the crate: weighted
/// degree first, ties broken lexicographically with `α > β > γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial3 {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Monomial3 {
    pub const ONE: Self = Self { i: 0, j: 0, k: 0 };
    pub const ALPHA: Self = Self { i: 1, j: 0, k: 0 };
    pub const BETA: Self = Self { i: 0, j: 1, k: 0 };
    pub const GAMMA: Self = Self { i: 0, j: 0, k: 1 };

    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Self { i, j, k }
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.i, self.j, self.k]
    }

    pub fn weighted_degree(&self) -> u32 {
        WEIGHTS[0] * self.i + WEIGHTS[1] * self.j + WEIGHTS[2] * self.k
    }

    pub fn mul(&self, other: &Self) -> Self {
        let add = |a: u32, b: u32| a.checked_add(b).expect("exponent overflow");
        Self::new(add(self.i, other.i), add(self.j, other.j), add(self.k, other.k))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.i <= other.i && self.j <= other.j && self.k <= other.k
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other)
            .then(|| Self::new(other.i - self.i, other.j - self.j, other.k - self.k))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.i.max(other.i), self.j.max(other.j), self.k.max(other.k))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exponents().iter().zip(other.exponents()).all(|(&a, b)| a == 0 || b == 0)
    }
}

impl Ord for Monomial3 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree()
            .cmp(&other.weighted_degree())
            .then_with(|| self.exponents().cmp(&other.exponents()))
    }
}

impl PartialOrd for Monomial3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.exponents().into_iter().zip(NAMES) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A finitely supported map from monomials to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial3, Rational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Rational::one(), Monomial3::ONE)
    }

    pub fn term(c: Rational, m: Monomial3) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial3) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn alpha() -> Self {
        Self::monomial(Monomial3::ALPHA)
    }

    pub fn beta() -> Self {
        Self::monomial(Monomial3::BETA)
    }

    pub fn gamma() -> Self {
        Self::monomial(Monomial3::GAMMA)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial3) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial3, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial3, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial3, Rational)> {
        self.terms.pop_last()
    }

    pub fn leading_monomial(&self) -> Option<Monomial3> {
        self.leading_term().map(|(m, _)| *m)
    }

    /// Maximum weighted degree over the support; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial3::weighted_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial3::weighted_degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn add_term(&mut self, m: Monomial3, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled_shifted(&mut self, c: &Rational, m: &Monomial3, other: &Self) {
        for (n, d) in &other.terms {
            self.add_term(m.mul(n), c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial3) -> Self {
        Self { terms: self.terms.iter().map(|(n, d)| (m.mul(n), d.clone())).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

/// Sum of two polynomials.
pub fn poly_add(a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
    a + b
}

/// Product of two polynomials.
pub fn poly_mul(a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
    a * b
}

/// `c · a`.
pub fn poly_scale(c: &Rational, a: &GradedPoly) -> GradedPoly {
    a.scale(c)
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (m, c) in &self.terms {
            out.add_scaled_shifted(c, m, rhs);
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for GradedPoly {
            type Output = GradedPoly;
            fn $f(self, rhs: GradedPoly) -> GradedPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for GradedPoly {
    /// Canonical text form: terms in descending monomial order, e.g.
    /// `1/6*alpha^3 + 1/3*alpha*beta + 2/3*gamma`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial3::ONE {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial term `{0}`")]
pub struct ParsePolyError(pub String);

impl FromStr for GradedPoly {
    type Err = ParsePolyError;

    /// Parses the canonical text form written by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let (mut sign, mut rest) = match s.strip_prefix('-') {
            Some(r) => (-1, r),
            None => (1, s),
        };
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(q)) if q < p => (&rest[..q], Some((-1, &rest[q + 3..]))),
                (Some(p), _) => (&rest[..p], Some((1, &rest[p + 3..]))),
                (None, Some(q)) => (&rest[..q], Some((-1, &rest[q + 3..]))),
                (None, None) => (rest, None),
            };
            let (c, m) = parse_term(term).ok_or_else(|| ParsePolyError(term.to_string()))?;
            out.add_term(m, c * rat(sign));
            match next {
                Some((sg, r)) => {
                    sign = sg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(Rational, Monomial3)> {
    let mut coeff = Rational::one();
    let mut exps = [0u32; 3];
    for (n, factor) in term.split('*').enumerate() {
        let factor = factor.trim();
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => (name, e.parse::<u32>().ok()?),
            None => (factor, 1),
        };
        match NAMES.iter().position(|&v| v == name) {
            Some(v) => exps[v] += e,
            None if n == 0 => coeff = parse_rational(factor)?,
            None => return None,
        }
    }
    Some((coeff, Monomial3::new(exps[0], exps[1], exps[2])))
}

/// The sequence `c_0, …, c_n` defined by `c_0 = 1, c_1 = α, c_2 = α²/2`
/// and `m c_m = α c_{m-1} + (m-2) β c_{m-2} + 2γ c_{m-3}`.
pub fn mumford_sequence(n: usize) -> Vec<GradedPoly> {
    let mut cs = vec![GradedPoly::one(), GradedPoly::alpha(), GradedPoly::term(ratio(1, 2), Monomial3::new(2, 0, 0))];
    let (a, b, g) = (Monomial3::ALPHA, Monomial3::BETA, Monomial3::GAMMA);
    for m in 3..=n {
        let mut next = GradedPoly::zero();
        next.add_scaled_shifted(&Rational::one(), &a, &cs[m - 1]);
        next.add_scaled_shifted(&rat(m as i64 - 2), &b, &cs[m - 2]);
        next.add_scaled_shifted(&rat(2), &g, &cs[m - 3]);
        let next = next.scale(&ratio(1, m as i64));
        assert!(next.is_homogeneous() && next.degree() == Some(2 * m as u32));
        cs.push(next);
    }
    cs.truncate(n + 1);
    cs
}

/// The single relation polynomial `c_n`, homogeneous of weighted degree `2n`.
pub fn mumford_c(n: usize) -> GradedPoly {
    mumford_sequence(n).pop().expect("nonempty sequence")
}

/// `ξ = αβ + 2γ`.
pub fn xi() -> GradedPoly {
    let mut p = GradedPoly::monomial(Monomial3::new(1, 1, 0));
    p.add_term(Monomial3::GAMMA, rat(2));
    p
}

/// `α^i β^j ξ^k` expanded in `α, β, γ`.
pub fn expand_abxi_monomial(i: u32, j: u32, k: u32) -> GradedPoly {
    xi().pow(k).mul_monomial(&Monomial3::new(i, j, 0))
}
