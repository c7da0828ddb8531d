//! Poincaré series of the equivariant and intersection cohomology of the
//! SU(2) representation space of a genus-`g` surface group, each computed
//! along two independent routes, together with the intersection pairing.
//!
//! The closed route expands explicit rational functions. The structural
//! route assembles the same series from primitive-part dimensions and
//! either Hilbert series of the relation ideals `I_k` (equivariant) or the
//! monomial sets `E_m` (intersection).

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{
    as_nonnegative_integer, factorial, fmt_rational, rat, ratio, ExactError, IntPoly, Rational,
    RationalFunctionT, TruncatedSeries,
};
use crate::exterior::prim_dimension_formula;
use crate::graded::{expand_abxi_monomial, GradedPoly, Monomial3};
use crate::groebner::{
    hilbert_series_quotient, leading_term_ideal, normal_form, BasisStore, GroebnerError,
};
use crate::linalg::{rank, row_dependency};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IhError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("coefficient of t^{degree} is {value}, not a nonnegative integer")]
    NotADimension { degree: usize, value: String },
    #[error("series does not terminate at t^{top}: coefficient of t^{degree} is {value}")]
    NotPolynomial { top: usize, degree: usize, value: String },
    #[error("pairing needs m + 2n = {target} and n < {bound}; got m = {m}, n = {n}")]
    OutsidePairingRange { m: u32, n: u32, target: u32, bound: u32 },
}

fn check_genus(g: u32) -> Result<(), IhError> {
    if g < 2 {
        return Err(IhError::GenusTooSmall(g));
    }
    Ok(())
}

/// Top degree `6g - 6` of the intersection Poincaré polynomial.
pub fn top_degree(g: u32) -> usize {
    6 * g as usize - 6
}

/// Default truncation order `6g + 24`.
pub fn default_order(g: u32) -> usize {
    6 * g as usize + 24
}

/// Which computation produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Closed,
    Structural,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Structural => "structural",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Intersection Betti numbers in degrees `0..=6g-6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub genus: u32,
    pub coefficients: Vec<u64>,
    pub provenance: Route,
}

impl BettiTable {
    pub fn total_dimension(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    /// Same numbers, regardless of which route produced them.
    pub fn same_values(&self, other: &Self) -> bool {
        self.genus == other.genus && self.coefficients == other.coefficients
    }

    /// First degree where two tables differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.coefficients.len().max(other.coefficients.len());
        (0..n).find(|&d| self.coefficients.get(d) != other.coefficients.get(d))
    }

    pub fn to_series(&self) -> TruncatedSeries {
        let values: Vec<i64> = self.coefficients.iter().map(|&c| c as i64).collect();
        TruncatedSeries::from_integers(&values, self.coefficients.len() - 1)
    }
}

fn to_dimensions(s: &TruncatedSeries, upto: usize) -> Result<Vec<u64>, IhError> {
    (0..=upto)
        .map(|d| {
            let c = s.coeff(d);
            as_nonnegative_integer(&c)
                .ok_or_else(|| IhError::NotADimension { degree: d, value: fmt_rational(&c) })
        })
        .collect()
}

/// Expansion of `((1+t³)^{2g} - t^{2g+2}(1+t)^{2g}) / ((1-t²)(1-t⁴))`.
pub fn equivariant_series_closed(g: u32, order: usize) -> TruncatedSeries {
    let two_g = 2 * g;
    let num = IntPoly::binomial(1, 3)
        .pow(two_g)
        .sub(&IntPoly::monomial(1, 2 * g as usize + 2).mul(&IntPoly::binomial(1, 1).pow(two_g)));
    let den = IntPoly::binomial(-1, 2).mul(&IntPoly::binomial(-1, 4));
    RationalFunctionT::new(num, den).expect("denominator is 1 at t = 0").expand(order)
}

/// Expansion of
/// `½ { (1+t)^{2g} (t²)^{g-1} / (1-t²) + (1-t)^{2g} (-t²)^{g-1} / (1+t²) }`,
/// the Poincaré series of `[H*(Jac) ⊗ u^{g-1} Q[u]]^{Z/2}`. Every
/// coefficient must be a nonnegative integer.
pub fn correction_series(g: u32, order: usize) -> Result<TruncatedSeries, IhError> {
    check_genus(g)?;
    let shift = 2 * (g as usize - 1);
    let sign = if (g - 1).is_multiple_of(2) { 1 } else { -1 };
    let plus = RationalFunctionT::new(
        IntPoly::binomial(1, 1).pow(2 * g).mul(&IntPoly::monomial(1, shift)),
        IntPoly::binomial(-1, 2),
    )?;
    let minus = RationalFunctionT::new(
        IntPoly::binomial(-1, 1).pow(2 * g).mul(&IntPoly::monomial(sign, shift)),
        IntPoly::binomial(1, 2),
    )?;
    let half = ratio(1, 2);
    let s = TruncatedSeries::linear_combination(&[
        (half.clone(), &plus.expand(order)),
        (half, &minus.expand(order)),
    ])
    .expect("two terms");
    to_dimensions(&s, order)?;
    Ok(s)
}

/// Intersection Betti numbers as the closed-form difference of the
/// equivariant series and the correction series, checked to vanish in
/// degrees `6g-5..=6g+24`.
pub fn ip_series_closed(g: u32) -> Result<BettiTable, IhError> {
    check_genus(g)?;
    let order = default_order(g);
    let diff = equivariant_series_closed(g, order).sub(&correction_series(g, order)?);
    let top = top_degree(g);
    if let Some(d) = (top + 1..=order).find(|&d| !diff.coeff(d).is_zero()) {
        return Err(IhError::NotPolynomial { top, degree: d, value: fmt_rational(&diff.coeff(d)) });
    }
    Ok(BettiTable { genus: g, coefficients: to_dimensions(&diff, top)?, provenance: Route::Closed })
}

fn factorial_series(order: usize, parity: usize) -> TruncatedSeries {
    // Σ t^{2n} / (2n + parity)!
    let coeffs = (0..=order)
        .map(|d| if d % 2 == 0 { factorial((d + parity) as u32).recip() } else { Rational::zero() })
        .collect();
    TruncatedSeries::new(coeffs).expect("nonempty")
}

/// `t / tanh t = cosh t / (sinh t / t)` through `t^order`.
pub fn t_over_tanh_series(order: usize) -> TruncatedSeries {
    let cosh = factorial_series(order, 0);
    let sinh_over_t = factorial_series(order, 1);
    cosh.div(&sinh_over_t).expect("constant term 1")
}

/// `tanh t / t = (sinh t / t) / cosh t` through `t^order`.
pub fn tanh_over_t_series(order: usize) -> TruncatedSeries {
    factorial_series(order, 1).div(&factorial_series(order, 0)).expect("constant term 1")
}

/// `b_0, …, b_K` with `t / tanh t = Σ b_k t^{2k}`.
pub fn b_coefficients(k: usize) -> Vec<Rational> {
    let s = t_over_tanh_series(2 * k);
    (0..=k).map(|i| s.coeff(2 * i)).collect()
}

/// A monomial `α^i β^j ξ^k`, `ξ = αβ + 2γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl EMonomial {
    pub fn degree(&self) -> u32 {
        2 * self.i + 4 * self.j + 6 * self.k
    }

    pub fn expand(&self) -> GradedPoly {
        expand_abxi_monomial(self.i, self.j, self.k)
    }

    /// Membership in `E_m`: `i + 2k ≤ m`, `j + 2k ≤ m`, and `j < ⌊m/2⌋`
    /// when `k = 0`.
    pub fn admissible(&self, m: u32) -> bool {
        self.i + 2 * self.k <= m
            && self.j + 2 * self.k <= m
            && (self.k > 0 || self.j < m / 2)
    }
}

impl fmt::Display for EMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [(self.i, "alpha"), (self.j, "beta"), (self.k, "xi")]
            .iter()
            .filter(|(e, _)| *e > 0)
            .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// The spanning set of `E_m`, sorted by `(degree, i, j, k)`.
pub fn e_basis(m: u32) -> Vec<EMonomial> {
    let mut out = Vec::new();
    for k in 0..=m / 2 {
        for i in 0..=m - 2 * k {
            for j in 0..=m - 2 * k {
                let e = EMonomial { i, j, k };
                if e.admissible(m) {
                    out.push(e);
                }
            }
        }
    }
    out.sort_by_key(|e| (e.degree(), e.i, e.j, e.k));
    out
}

/// `Σ_{E_m} t^{deg}`, to order `6m`.
pub fn e_hilbert(m: u32) -> TruncatedSeries {
    let order = 6 * m as usize;
    let mut coeffs = vec![Rational::zero(); order + 1];
    for e in e_basis(m) {
        coeffs[e.degree() as usize] += Rational::one();
    }
    TruncatedSeries::new(coeffs).expect("nonempty")
}

/// Intersection Betti numbers as `Σ_l dim Prim_l · t^{3l} · e_hilbert(g-l)`.
pub fn ih_series_structural(g: u32) -> Result<BettiTable, IhError> {
    check_genus(g)?;
    let top = top_degree(g);
    let mut coefficients = vec![0u64; top + 1];
    for l in 0..=g {
        let prim = prim_dimension_formula(g, l);
        for e in e_basis(g - l) {
            let d = 3 * l as usize + e.degree() as usize;
            let slot = coefficients.get_mut(d).ok_or_else(|| IhError::NotPolynomial {
                top,
                degree: d,
                value: prim.to_string(),
            })?;
            *slot += prim;
        }
    }
    Ok(BettiTable { genus: g, coefficients, provenance: Route::Structural })
}

/// Equivariant Poincaré series as
/// `Σ_l dim Prim_l · t^{3l} · HS(Q[α,β,γ]/I_{g-l})`, with each Hilbert
/// series read off the leading-term ideal of a Gröbner basis.
pub fn equivariant_series_structural(
    g: u32,
    order: usize,
    store: &BasisStore,
) -> Result<TruncatedSeries, IhError> {
    check_genus(g)?;
    let mut total = TruncatedSeries::zero(order);
    for l in 0..=g {
        let shift = 3 * l as usize;
        if shift > order {
            break;
        }
        let basis = store.basis(g - l)?;
        let hs = hilbert_series_quotient(&leading_term_ideal(&basis)).expand(order);
        let prim = rat(prim_dimension_formula(g, l) as i64);
        total = total.add(&hs.shift(shift).scale(&prim));
    }
    Ok(total)
}

/// Outcome of reducing the `E_m` monomials modulo `I_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceVerdict {
    pub m: u32,
    pub size: usize,
    pub rank: usize,
    /// Degree and coefficient vector (over that degree's `E_m` monomials,
    /// in `e_basis` order) of a linear dependency, if one exists.
    pub dependency: Option<(u32, Vec<Rational>)>,
}

impl IndependenceVerdict {
    pub fn independent(&self) -> bool {
        self.rank == self.size
    }
}

/// Checks that the normal forms of the `E_m` monomials modulo `I_m` are
/// linearly independent.
pub fn e_basis_independence(m: u32, store: &BasisStore) -> Result<IndependenceVerdict, IhError> {
    let basis = e_basis(m);
    if basis.is_empty() {
        return Ok(IndependenceVerdict { m, size: 0, rank: 0, dependency: None });
    }
    let gb = store.basis(m)?;
    let mut total_rank = 0;
    let mut dependency = None;
    // everything is homogeneous, so independence can be checked one degree
    // at a time
    let mut degrees: Vec<u32> = basis.iter().map(EMonomial::degree).collect();
    degrees.dedup();
    for d in degrees {
        let forms: Vec<GradedPoly> = basis
            .iter()
            .filter(|e| e.degree() == d)
            .map(|e| normal_form(&e.expand(), &gb))
            .collect();
        let mut support: Vec<Monomial3> =
            forms.iter().flat_map(|f| f.terms().map(|(m, _)| *m)).collect();
        support.sort();
        support.dedup();
        let rows: Vec<Vec<Rational>> =
            forms.iter().map(|f| support.iter().map(|m| f.coeff(m)).collect()).collect();
        let r = rank(&rows);
        total_rank += r;
        if r < rows.len() && dependency.is_none() {
            dependency = row_dependency(&rows).map(|v| (d, v));
        }
    }
    Ok(IndependenceVerdict { m, size: basis.len(), rank: total_rank, dependency })
}

/// `α^{g-2} β^{g-2} ξ / ((g-2)! (-4)^{g-1})`.
pub fn fundamental_class(g: u32) -> GradedPoly {
    assert!(g >= 2, "genus must be at least 2");
    let scale = (factorial(g - 2) * rat(-4).pow(g as i32 - 1)).recip();
    expand_abxi_monomial(g - 2, g - 2, 1).scale(&scale)
}

/// `−(−4)^{g−1} m! b_{g−n−1}` for `m = i + k`, `n = j + l`, defined when
/// `m + 2n = 3g − 3` and `n < g − 1`.
pub fn pairing_value(g: u32, left: (u32, u32), right: (u32, u32)) -> Result<Rational, IhError> {
    check_genus(g)?;
    let m = left.0 + right.0;
    let n = left.1 + right.1;
    let target = 3 * g - 3;
    if m + 2 * n != target || n + 1 >= g {
        return Err(IhError::OutsidePairingRange { m, n, target, bound: g - 1 });
    }
    Ok(pairing_scalar(g, m, n))
}

fn pairing_scalar(g: u32, m: u32, n: u32) -> Rational {
    let b = &b_coefficients((g - n - 1) as usize)[(g - n - 1) as usize];
    -(rat(-4).pow(g as i32 - 1) * factorial(m) * b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingEntry {
    pub left: (u32, u32),
    pub right: (u32, u32),
    pub m: u32,
    pub n: u32,
    pub value: Rational,
}

/// Every admissible pair `(α^i β^j, α^k β^l)`, ordered by `(n, m, i, j)`.
pub fn pairing_matrix(g: u32) -> Result<Vec<PairingEntry>, IhError> {
    check_genus(g)?;
    let mut out = Vec::new();
    for n in 0..g - 1 {
        let m = 3 * g - 3 - 2 * n;
        let value = pairing_scalar(g, m, n);
        for i in 0..=m {
            for j in 0..=n {
                out.push(PairingEntry {
                    left: (i, j),
                    right: (m - i, n - j),
                    m,
                    n,
                    value: value.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// One `(m, n)` case of the top-degree identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopIdentityEntry {
    pub m: u32,
    pub n: u32,
    /// `−m! b_{g−n−1} / (g−2)!`, the predicted multiple of
    /// `α^{g−2} β^{g−2} ξ`.
    pub predicted: Rational,
    /// Normal form of `α^m β^n − predicted · α^{g−2} β^{g−2} ξ` modulo `I_g`.
    pub residual: GradedPoly,
    /// The multiple read off from normal forms, when `α^m β^n` reduces to
    /// a scalar multiple of `α^{g−2} β^{g−2} ξ`.
    pub ring_coefficient: Option<Rational>,
}

impl TopIdentityEntry {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }

    /// The pairing implied by the ring computation under the fundamental
    /// class normalization.
    pub fn pairing_from_ring(&self, g: u32) -> Option<Rational> {
        let norm = factorial(g - 2) * rat(-4).pow(g as i32 - 1);
        self.ring_coefficient.as_ref().map(|c| c * norm)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopIdentityVerdict {
    pub genus: u32,
    pub entries: Vec<TopIdentityEntry>,
    /// Number of standard monomials of `Q[α,β,γ]/I_g` in degree `6g − 6`.
    pub top_degree_dimension: usize,
}

impl TopIdentityVerdict {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(TopIdentityEntry::passed)
    }

    pub fn failures(&self) -> Vec<(u32, u32)> {
        self.entries.iter().filter(|e| !e.passed()).map(|e| (e.m, e.n)).collect()
    }
}

/// Multiple `c` with `a = c · b`, if one exists and `b ≠ 0`.
fn proportionality(a: &GradedPoly, b: &GradedPoly) -> Option<Rational> {
    let (lm, lc) = b.leading_term()?;
    let c = a.coeff(lm) / lc;
    (&b.scale(&c) - a).is_zero().then_some(c)
}

/// Checks `α^m β^n ≡ −m! b_{g−n−1} α^{g−2} β^{g−2} ξ / (g−2)!` modulo
/// `I_g` for every `m + 2n = 3g − 3`, `n < g − 1`. Failures are reported,
/// not raised.
pub fn top_identity_check(g: u32, store: &BasisStore) -> Result<TopIdentityVerdict, IhError> {
    check_genus(g)?;
    let gb = store.basis(g)?;
    let reference = expand_abxi_monomial(g - 2, g - 2, 1);
    let reference_nf = normal_form(&reference, &gb);
    let b = b_coefficients(g as usize);
    let entries = (0..g - 1)
        .map(|n| {
            let m = 3 * g - 3 - 2 * n;
            let predicted = -(factorial(m) * &b[(g - n - 1) as usize]) / factorial(g - 2);
            let target = GradedPoly::monomial(Monomial3::new(m, n, 0));
            let residual = normal_form(&(&target - &reference.scale(&predicted)), &gb);
            let ring_coefficient = proportionality(&normal_form(&target, &gb), &reference_nf);
            TopIdentityEntry { m, n, predicted, residual, ring_coefficient }
        })
        .collect();
    let top_degree_dimension = leading_term_ideal(&gb).standard_monomials(6 * g - 6).len();
    Ok(TopIdentityVerdict { genus: g, entries, top_degree_dimension })
}
