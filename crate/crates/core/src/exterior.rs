//! Brute-force computations in exterior algebras: primitive-part dimensions
//! of `Λ(ψ_1, …, ψ_2g)` under multiplication by `γ`, and the image of the
//! restriction map into `H*(Jac) ⊗ Q[u]`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{ToPrimitive, Zero};

use crate::exact::{binomial, rat, Rational};
use crate::linalg::rank;

/// Largest genus accepted by [`prim_dimension_bruteforce`].
pub const PRIM_BRUTEFORCE_MAX_GENUS: u32 = 5;
/// Largest genus accepted by [`restriction_image_dimensions`].
pub const RESTRICTION_MAX_GENUS: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("genus {g} is outside the brute-force range {min}..={max}")]
    GenusOutOfRange { g: u32, min: u32, max: u32 },
    #[error("level {l} is outside 0..={g}")]
    LevelOutOfRange { l: u32, g: u32 },
    #[error("u-truncation {u} is below the minimum {min} for genus {g}")]
    TruncationTooSmall { u: u32, min: u32, g: u32 },
}

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}` for disjoint index sets
/// given as bit masks; `None` if they overlap.
fn wedge_sign(a: u32, b: u32) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        swaps += (a >> (y + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

/// An element of the exterior algebra on `n` odd generators of equal
/// degree, as a map from generator subsets (bit masks) to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElement {
    generators: u32,
    generator_degree: u32,
    terms: BTreeMap<u32, Rational>,
}

impl ExtElement {
    pub fn zero(generators: u32, generator_degree: u32) -> Self {
        assert!(generators <= 31, "too many generators for a bit mask");
        Self { generators, generator_degree, terms: BTreeMap::new() }
    }

    pub fn one(generators: u32, generator_degree: u32) -> Self {
        Self::basis(generators, generator_degree, 0)
    }

    /// The monomial `e_S` for the subset `S` given as a bit mask.
    pub fn basis(generators: u32, generator_degree: u32, subset: u32) -> Self {
        let mut e = Self::zero(generators, generator_degree);
        e.terms.insert(subset, Rational::from_integer(1.into()));
        e
    }

    /// The generator with 0-based index `i`.
    pub fn generator(generators: u32, generator_degree: u32, i: u32) -> Self {
        Self::basis(generators, generator_degree, 1 << i)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, subset: u32) -> Rational {
        self.terms.get(&subset).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree of the monomial `e_S`.
    pub fn monomial_degree(&self, subset: u32) -> u32 {
        subset.count_ones() * self.generator_degree
    }

    fn add_term(&mut self, subset: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(subset).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&subset);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.generators, self.generator_degree);
        for (s, x) in &self.terms {
            out.add_term(*s, x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.generators, self.generator_degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(sign) = wedge_sign(*a, *b) {
                    out.add_term(a | b, x * y * rat(sign));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.generators, self.generator_degree), |acc, _| acc.mul(self))
    }
}

/// `γ = -2 Σ_{i=1..g} ψ_i ψ_{i+g}` in `Λ(ψ_1, …, ψ_2g)`, `|ψ_i| = 3`.
pub fn gamma_element(g: u32) -> ExtElement {
    let n = 2 * g;
    let mut out = ExtElement::zero(n, 3);
    for i in 0..g {
        out.add_term((1 << i) | (1 << (i + g)), rat(-2));
    }
    out
}

fn subsets_of_size(n: u32, size: u32) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() == size).collect()
}

/// `dim ker(γ^{g-l+1})` on exterior degree `l`, by exact rank computation.
pub fn prim_dimension_bruteforce(g: u32, l: u32) -> Result<usize, ExteriorError> {
    if !(2..=PRIM_BRUTEFORCE_MAX_GENUS).contains(&g) {
        return Err(ExteriorError::GenusOutOfRange { g, min: 2, max: PRIM_BRUTEFORCE_MAX_GENUS });
    }
    if l > g {
        return Err(ExteriorError::LevelOutOfRange { l, g });
    }
    let n = 2 * g;
    let power = gamma_element(g).pow(g - l + 1);
    let sources = subsets_of_size(n, l);
    let targets = subsets_of_size(n, l + 2 * (g - l + 1));
    let index: BTreeMap<u32, usize> = targets.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let rows: Vec<Vec<Rational>> = sources
        .iter()
        .map(|&s| {
            let image = ExtElement::basis(n, 3, s).mul(&power);
            let mut row = vec![Rational::zero(); targets.len()];
            for (t, c) in image.terms() {
                row[index[t]] = c.clone();
            }
            row
        })
        .collect();
    Ok(sources.len() - rank(&rows))
}

/// `C(2g, l) - C(2g, l-2)`.
pub fn prim_dimension_formula(g: u32, l: u32) -> u64 {
    let n = 2 * i64::from(g);
    let l = i64::from(l);
    (binomial(n, l) - binomial(n, l - 2)).to_u64().expect("nonnegative for l <= g")
}

/// Bidegree key of `H*(Jac) ⊗ Q[u]`: a subset of `d_1, …, d_2g` and a
/// power of `u`.
pub type JacKey = (u32, u32);

/// `H*(Jac) ⊗ Q[u]` for a genus-`g` Jacobian with `u`-exponents above
/// `truncation` discarded. The `d_i` have degree 1; `u` is central of
/// degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacModel {
    pub g: u32,
    pub truncation: u32,
}

/// An element of a [`JacModel`].
pub type JacElement = BTreeMap<JacKey, Rational>;

impl JacModel {
    pub fn new(g: u32, truncation: u32) -> Self {
        Self { g, truncation }
    }

    pub fn degree(key: &JacKey) -> u32 {
        key.0.count_ones() + 2 * key.1
    }

    /// Invariance under `d_i ↦ -d_i, u ↦ -u`.
    pub fn is_invariant_key(key: &JacKey) -> bool {
        (key.0.count_ones() + key.1).is_multiple_of(2)
    }

    pub fn one(&self) -> JacElement {
        JacElement::from([((0, 0), rat(1))])
    }

    /// `w = -2 Σ d_i d_{i+g}`, the image of `α`.
    pub fn w(&self) -> JacElement {
        (0..self.g).map(|i| (((1 << i) | (1 << (i + self.g)), 0), rat(-2))).collect()
    }

    /// `4u²`, the image of `β`.
    pub fn four_u_squared(&self) -> JacElement {
        self.truncate(JacElement::from([((0, 2), rat(4))]))
    }

    /// `-2u d_i`, the image of `ψ_i` (0-based `i`).
    pub fn psi_image(&self, i: u32) -> JacElement {
        self.truncate(JacElement::from([((1 << i, 1), rat(-2))]))
    }

    fn truncate(&self, mut e: JacElement) -> JacElement {
        e.retain(|k, c| k.1 <= self.truncation && !c.is_zero());
        e
    }

    pub fn mul(&self, a: &JacElement, b: &JacElement) -> JacElement {
        let mut out = JacElement::new();
        for ((sa, ua), x) in a {
            for ((sb, ub), y) in b {
                let u = ua + ub;
                if u > self.truncation {
                    continue;
                }
                // u is even-graded and central; only the d-parts anticommute
                if let Some(sign) = wedge_sign(*sa, *sb) {
                    let slot = out.entry((sa | sb, u)).or_insert_with(Rational::zero);
                    *slot += x * y * rat(sign);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn pow(&self, a: &JacElement, e: u32) -> JacElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Largest degree at which `u`-truncation cannot affect ranks.
    pub fn reliable_degree(&self) -> u32 {
        2 * self.truncation.saturating_sub(self.g)
    }

    /// Images of all monomials `α^a β^b ψ_S` of total degree `d`.
    fn image_spanning_set(&self, d: u32) -> Vec<JacElement> {
        let w = self.w();
        let b4 = self.four_u_squared();
        let mut out = Vec::new();
        for s in 0..=(2 * self.g).min(d / 3) {
            for subset in subsets_of_size(2 * self.g, s) {
                let psi = (0..2 * self.g)
                    .filter(|i| subset & (1 << i) != 0)
                    .fold(self.one(), |acc, i| self.mul(&acc, &self.psi_image(i)));
                let rest = d - 3 * s;
                for b in 0..=rest / 4 {
                    let a2 = rest - 4 * b;
                    if !a2.is_multiple_of(2) {
                        continue;
                    }
                    let e = self.mul(&self.mul(&self.pow(&w, a2 / 2), &self.pow(&b4, b)), &psi);
                    if !e.is_empty() {
                        out.push(e);
                    }
                }
            }
        }
        out
    }
}

fn check_restriction_range(g: u32, u: u32) -> Result<(), ExteriorError> {
    if !(2..=RESTRICTION_MAX_GENUS).contains(&g) {
        return Err(ExteriorError::GenusOutOfRange { g, min: 2, max: RESTRICTION_MAX_GENUS });
    }
    if u < g + 3 {
        return Err(ExteriorError::TruncationTooSmall { u, min: g + 3, g });
    }
    Ok(())
}

/// Per degree `d ≤ 2(U - g)`: the dimension of the image of
/// `α ↦ w, β ↦ 4u², ψ_i ↦ -2u d_i` intersected with
/// `H*(Jac) ⊗ u^{g-1} Q[u]`.
pub fn restriction_image_dimensions(g: u32, u: u32) -> Result<BTreeMap<u32, usize>, ExteriorError> {
    check_restriction_range(g, u)?;
    let model = JacModel::new(g, u);
    let mut out = BTreeMap::new();
    for d in 0..=model.reliable_degree() {
        let span = model.image_spanning_set(d);
        let keys: BTreeSet<JacKey> = span.iter().flat_map(|e| e.keys().copied()).collect();
        let full: Vec<JacKey> = keys.iter().copied().collect();
        let low: Vec<JacKey> = keys.iter().copied().filter(|k| k.1 + 1 < g).collect();
        let to_rows = |cols: &[JacKey]| -> Vec<Vec<Rational>> {
            span.iter()
                .map(|e| cols.iter().map(|k| e.get(k).cloned().unwrap_or_else(Rational::zero)).collect())
                .collect()
        };
        // V ∩ {u-exponent ≥ g-1} is the kernel of projecting V onto the
        // low u-exponent coordinates
        let dim = rank(&to_rows(&full)) - rank(&to_rows(&low));
        out.insert(d, dim);
    }
    Ok(out)
}

/// Per degree `d ≤ 2(U - g)`: the number of invariant basis monomials
/// `d_S u^e` with `e ≥ g - 1`.
pub fn invariant_truncated_dimensions(g: u32, u: u32) -> BTreeMap<u32, usize> {
    let model = JacModel::new(g, u);
    let mut out: BTreeMap<u32, usize> = (0..=model.reliable_degree()).map(|d| (d, 0)).collect();
    for size in 0..=2 * g {
        let subsets = binomial(2 * i64::from(g), i64::from(size)).to_usize().expect("small");
        for e in g.saturating_sub(1)..=u {
            let key = (if size == 0 { 0 } else { (1u32 << size) - 1 }, e);
            if !JacModel::is_invariant_key(&key) {
                continue;
            }
            if let Some(n) = out.get_mut(&JacModel::degree(&key)) {
                *n += subsets;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        let g2 = gamma_element(2);
        let mut expect = ExtElement::zero(4, 3);
        expect.add_term(0b0101, rat(-2));
        expect.add_term(0b1010, rat(-2));
        assert_eq!(g2, expect);
        // γ² = 8 ψ1ψ3ψ2ψ4 = -8 ψ1ψ2ψ3ψ4
        assert_eq!(g2.mul(&g2), ExtElement::basis(4, 3, 0b1111).scale(&rat(-8)));
        let p13 = ExtElement::generator(4, 3, 0).mul(&ExtElement::generator(4, 3, 2));
        let p24 = ExtElement::generator(4, 3, 1).mul(&ExtElement::generator(4, 3, 3));
        assert_eq!(g2.mul(&g2), p13.mul(&p24).scale(&rat(8)));
        for g in 2..=5 {
            assert!(gamma_element(g).pow(g + 1).is_zero());
            assert!(!gamma_element(g).pow(g).is_zero());
        }
    }

    #[test]
    fn anticommutation() {
        let a = ExtElement::generator(3, 1, 0);
        let b = ExtElement::generator(3, 1, 2);
        assert_eq!(a.mul(&b), b.mul(&a).scale(&rat(-1)));
        assert!(a.mul(&a).is_zero());
        assert_eq!(a.mul(&b).monomial_degree(0b101), 2);
    }

    #[test]
    fn prim_examples() {
        let bf: Vec<_> = (0..=2).map(|l| prim_dimension_bruteforce(2, l).unwrap()).collect();
        assert_eq!(bf, vec![1, 4, 5]);
        let formula: Vec<_> = (0..=2).map(|l| prim_dimension_formula(2, l)).collect();
        assert_eq!(formula, vec![1, 4, 5]);
        assert_eq!(prim_dimension_formula(6, 6), 429);
        for g in 2..=12 {
            assert_eq!(prim_dimension_formula(g, 0), 1);
        }
        let total: usize =
            (0..=3).map(|l| prim_dimension_bruteforce(3, l).unwrap() * (3 - l as usize + 1)).sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn prim_bruteforce_matches_formula() {
        for g in 2..=4 {
            for l in 0..=g {
                assert_eq!(prim_dimension_bruteforce(g, l).unwrap() as u64, prim_dimension_formula(g, l));
            }
        }
    }

    #[test]
    fn lefschetz_dimension_identity() {
        for g in 2..=12u32 {
            let total: u64 = (0..=g).map(|l| prim_dimension_formula(g, l) * u64::from(g - l + 1)).sum();
            assert_eq!(total, 4u64.pow(g));
        }
    }

    #[test]
    fn range_errors() {
        assert!(matches!(prim_dimension_bruteforce(6, 0), Err(ExteriorError::GenusOutOfRange { .. })));
        assert!(matches!(prim_dimension_bruteforce(1, 0), Err(ExteriorError::GenusOutOfRange { .. })));
        assert!(matches!(prim_dimension_bruteforce(3, 4), Err(ExteriorError::LevelOutOfRange { .. })));
        assert!(matches!(restriction_image_dimensions(4, 10), Err(ExteriorError::GenusOutOfRange { .. })));
        assert!(matches!(restriction_image_dimensions(2, 4), Err(ExteriorError::TruncationTooSmall { .. })));
    }

    #[test]
    fn invariant_dimension_examples() {
        let g2 = invariant_truncated_dimensions(2, 8);
        let low: Vec<usize> = (0..=6).map(|d| g2[&d]).collect();
        assert_eq!(low, vec![0, 0, 0, 4, 1, 4, 6]);
        let g3 = invariant_truncated_dimensions(3, 10);
        assert!((0..4).all(|d| g3[&d] == 0));
    }

    #[test]
    fn restriction_image_examples() {
        let dims = restriction_image_dimensions(2, 8).unwrap();
        assert_eq!(dims[&0], 0);
        assert_eq!(dims[&3], 4);
        assert_eq!(dims, invariant_truncated_dimensions(2, 8));
    }

    #[test]
    fn jac_model_involution_parity() {
        let m = JacModel::new(2, 6);
        let e = m.mul(&m.w(), &m.psi_image(0));
        assert!(!e.is_empty() && e.keys().all(JacModel::is_invariant_key));
        assert!(m.pow(&m.four_u_squared(), 4).is_empty());
    }
}
