//! Buchberger's algorithm, normal forms, and weighted Hilbert series for the
//! relation ideals `I_k = (c_{k+1}, c_{k+2}, c_{k+3})`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::exact::{IntPoly, RationalFunctionT};
use crate::graded::{mumford_sequence, GradedPoly, Monomial3, WEIGHTS};

/// Largest generator count accepted by [`hilbert_numerator_by_subsets`].
pub const HILBERT_GENERATOR_CAP: usize = 24;

/// Default largest ideal index `k` a [`BasisStore`] will compute.
pub const DEFAULT_IDEAL_INDEX_CAP: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("generator list is empty or entirely zero")]
    NoGenerators,
    #[error("{count} monomial generators exceed the inclusion-exclusion cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },
    #[error("ideal index k = {k} exceeds the configured cap {cap}")]
    IndexAboveCap { k: u32, cap: u32 },
    #[error("malformed basis text: {0}")]
    Parse(String),
}

/// The monomial orders this crate supports. There is exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Weighted degree with weights `(2, 4, 6)`, ties broken
    /// lexicographically with `α > β > γ`. The tie-break is arbitrary.
    #[default]
    WeightedDegreeLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial3, b: &Monomial3) -> Ordering {
        match self {
            Self::WeightedDegreeLex => a.cmp(b),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::WeightedDegreeLex => "weighted-degree-lex 2,4,6 alpha>beta>gamma",
        }
    }
}

/// A reduced, monic Gröbner basis, generators sorted by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<GradedPoly>,
    order: MonomialOrder,
    source_k: Option<u32>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[GradedPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn source_k(&self) -> Option<u32> {
        self.source_k
    }

    pub fn with_source_k(mut self, k: u32) -> Self {
        self.source_k = Some(k);
        self
    }

    pub fn leading_monomials(&self) -> Vec<Monomial3> {
        self.generators.iter().filter_map(GradedPoly::leading_monomial).collect()
    }

    /// No generator has a monomial divisible by another generator's leading
    /// monomial, and every generator is monic.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.generators.iter().enumerate().all(|(a, g)| {
            g.leading_term().is_some_and(|(_, c)| c.is_one())
                && g.terms().all(|(m, _)| {
                    lms.iter().enumerate().all(|(b, lm)| a == b || !lm.divides(m))
                })
        })
    }

    /// Every S-polynomial of two generators reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|a| {
            (a + 1..g.len()).all(|b| reduce(&s_polynomial(&g[a], &g[b]), g).is_zero())
        })
    }

    /// Canonical text form: a header line, the order, the generator count,
    /// then one generator per line in ascending leading-monomial order.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        match self.source_k {
            Some(k) => out.push_str(&format!("ideal I_{k}\n")),
            None => out.push_str("ideal custom\n"),
        }
        out.push_str(&format!("order {}\n", self.order.label()));
        out.push_str(&format!("generators {}\n", self.generators.len()));
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_canonical_text(text: &str) -> Result<Self, GroebnerError> {
        let bad = |m: &str| GroebnerError::Parse(m.to_string());
        let mut lines = text.lines();
        let source_k = match lines.next().and_then(|l| l.strip_prefix("ideal ")) {
            Some("custom") => None,
            Some(tag) => Some(
                tag.strip_prefix("I_").and_then(|k| k.parse().ok()).ok_or_else(|| bad(tag))?,
            ),
            None => return Err(bad("missing ideal header")),
        };
        let order = MonomialOrder::WeightedDegreeLex;
        if lines.next().and_then(|l| l.strip_prefix("order ")) != Some(order.label()) {
            return Err(bad("unknown monomial order"));
        }
        let count: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("generators "))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| bad("missing generator count"))?;
        let generators = lines
            .map(|l| l.parse::<GradedPoly>().map_err(|e| bad(&e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if generators.len() != count {
            return Err(bad("generator count mismatch"));
        }
        let basis = Self { generators, order, source_k };
        if !basis.is_reduced() {
            return Err(bad("basis is not reduced"));
        }
        Ok(basis)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

/// Minimal monomial generators of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialIdeal {
    generators: Vec<Monomial3>,
}

impl MonomialIdeal {
    /// Builds the ideal, discarding generators divisible by others.
    pub fn new(monomials: impl IntoIterator<Item = Monomial3>) -> Self {
        let all: BTreeSet<Monomial3> = monomials.into_iter().collect();
        let generators = all
            .iter()
            .filter(|m| !all.iter().any(|n| n != *m && n.divides(m)))
            .copied()
            .collect();
        Self { generators }
    }

    pub fn generators(&self) -> &[Monomial3] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial3) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_antichain(&self) -> bool {
        let g = &self.generators;
        g.iter().enumerate().all(|(a, x)| g.iter().enumerate().all(|(b, y)| a == b || !x.divides(y)))
    }

    /// Monomials of weighted degree `d` outside the ideal.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial3> {
        monomials_of_degree(d).into_iter().filter(|m| !self.contains(m)).collect()
    }
}

/// All monomials of weighted degree `d`, ascending.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial3> {
    let mut out = Vec::new();
    if !d.is_multiple_of(2) {
        return out;
    }
    for k in 0..=d / 6 {
        for j in 0..=(d - 6 * k) / 4 {
            let rest = d - 6 * k - 4 * j;
            out.push(Monomial3::new(rest / 2, j, k));
        }
    }
    out.sort();
    out
}

/// `[c_{k+1}, c_{k+2}, c_{k+3}]`.
pub fn ideal_generators(k: u32) -> Vec<GradedPoly> {
    let k = k as usize;
    mumford_sequence(k + 3).split_off(k + 1)
}

/// Full reduction of `p` by the polynomials in `divisors`: the result has
/// no monomial divisible by any divisor's leading monomial.
fn reduce(p: &GradedPoly, divisors: &[GradedPoly]) -> GradedPoly {
    let leads: Vec<(Monomial3, num_rational::BigRational)> = divisors
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, c)| (*m, c.clone())))
        .collect();
    let mut rest = p.clone();
    let mut remainder = GradedPoly::zero();
    while let Some((m, c)) = rest.pop_leading() {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(at) => {
                let (lm, lc) = &leads[at];
                let q = lm.quotient_of(&m).expect("divides");
                let factor = -(&c / lc);
                // the leading term of the divisor cancels `m`, which is
                // already popped, so skip it
                for (n, d) in divisors[at].terms().rev().skip(1) {
                    rest.add_term(q.mul(n), &factor * d);
                }
            }
            None => remainder.add_term(m, c),
        }
    }
    remainder
}

fn s_polynomial(f: &GradedPoly, g: &GradedPoly) -> GradedPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_monomial(&fm.quotient_of(&l).unwrap()).scale(&fc.recip());
    let b = g.mul_monomial(&gm.quotient_of(&l).unwrap()).scale(&gc.recip());
    &a - &b
}

/// Reduced monic Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed lowest lcm first; pairs with coprime leading
/// monomials are skipped.
pub fn buchberger(gens: &[GradedPoly], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let MonomialOrder::WeightedDegreeLex = order;
    let mut basis: Vec<GradedPoly> = Vec::new();
    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis.is_empty() {
        return Err(GroebnerError::NoGenerators);
    }

    let lm = |p: &GradedPoly| p.leading_monomial().expect("nonzero");
    let mut pairs: BTreeSet<(Monomial3, usize, usize)> = BTreeSet::new();
    for b in 0..basis.len() {
        for a in 0..b {
            pairs.insert((lm(&basis[a]).lcm(&lm(&basis[b])), a, b));
        }
    }
    while let Some((_, a, b)) = pairs.pop_first() {
        if lm(&basis[a]).is_coprime(&lm(&basis[b])) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[a], &basis[b]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let n = basis.len();
        let lr = lm(&r);
        for (a, f) in basis.iter().enumerate() {
            pairs.insert((lm(f).lcm(&lr), a, n));
        }
        basis.push(r);
    }

    // minimize, then interreduce
    let leads: Vec<Monomial3> = basis.iter().map(lm).collect();
    let keep: Vec<GradedPoly> = basis
        .iter()
        .enumerate()
        .filter(|(a, _)| {
            !leads.iter().enumerate().any(|(b, l)| {
                b != *a && l.divides(&leads[*a]) && (l != &leads[*a] || b < *a)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut reduced: Vec<GradedPoly> = (0..keep.len())
        .map(|a| {
            let others: Vec<GradedPoly> =
                keep.iter().enumerate().filter(|(b, _)| *b != a).map(|(_, g)| g.clone()).collect();
            let (m, c) = keep[a].leading_term().expect("nonzero");
            let tail = &keep[a] - &GradedPoly::term(c.clone(), *m);
            let mut g = reduce(&tail, &others);
            g.add_term(*m, c.clone());
            g.monic()
        })
        .collect();
    reduced.sort_by(|x, y| order.compare(&lm(x), &lm(y)));
    Ok(GroebnerBasis { generators: reduced, order, source_k: None })
}

/// Gröbner basis of `I_k`, tagged with `k`.
pub fn ideal_basis(k: u32) -> GroebnerBasis {
    buchberger(&ideal_generators(k), MonomialOrder::WeightedDegreeLex)
        .expect("c_{k+1} is nonzero")
        .with_source_k(k)
}

/// Remainder of `p` on division by a reduced basis.
pub fn normal_form(p: &GradedPoly, basis: &GroebnerBasis) -> GradedPoly {
    reduce(p, &basis.generators)
}

pub fn leading_term_ideal(basis: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.leading_monomials())
}

/// Numerator of the Hilbert series over `(1 - t^2)(1 - t^4)(1 - t^6)`.
///
/// Folds the inclusion–exclusion sum one generator at a time with
/// `N(J + (m)) = N(J) - t^{deg m} N(J : m)`, so no subset enumeration is
/// needed.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    fn colon_recursion(gens: &[Monomial3]) -> IntPoly {
        let Some((last, rest)) = gens.split_last() else {
            return IntPoly::one();
        };
        let colon = MonomialIdeal::new(rest.iter().map(|m| last.quotient_of(&m.lcm(last)).unwrap()));
        let shifted = colon_recursion(colon.generators())
            .mul(&IntPoly::monomial(1, last.weighted_degree() as usize));
        colon_recursion(rest).sub(&shifted)
    }
    colon_recursion(ideal.generators())
}

/// `Σ_S (-1)^{|S|} t^{deg lcm(S)}` summed literally over all subsets `S` of
/// the generators. Exponential; refuses more than [`HILBERT_GENERATOR_CAP`]
/// generators.
pub fn hilbert_numerator_by_subsets(ideal: &MonomialIdeal) -> Result<IntPoly, GroebnerError> {
    let gens = ideal.generators();
    if gens.len() > HILBERT_GENERATOR_CAP {
        return Err(GroebnerError::TooManyGenerators { count: gens.len(), cap: HILBERT_GENERATOR_CAP });
    }
    let mut coeffs: HashMap<u32, i64> = HashMap::new();
    fn walk(gens: &[Monomial3], from: usize, lcm: Monomial3, sign: i64, acc: &mut HashMap<u32, i64>) {
        *acc.entry(lcm.weighted_degree()).or_insert(0) += sign;
        for n in from..gens.len() {
            walk(gens, n + 1, lcm.lcm(&gens[n]), -sign, acc);
        }
    }
    walk(gens, 0, Monomial3::ONE, 1, &mut coeffs);
    let top = coeffs.keys().copied().max().unwrap_or(0) as usize;
    let mut dense = vec![0i64; top + 1];
    for (d, c) in coeffs {
        dense[d as usize] += c;
    }
    Ok(IntPoly::from_i64(&dense))
}

fn weight_factors() -> IntPoly {
    WEIGHTS.iter().fold(IntPoly::one(), |acc, &w| acc.mul(&IntPoly::binomial(-1, w as usize)))
}

/// Hilbert series of `Q[α,β,γ]/ideal` over the denominator
/// `(1 - t^2)(1 - t^4)(1 - t^6)`.
pub fn hilbert_series_quotient(ideal: &MonomialIdeal) -> RationalFunctionT {
    RationalFunctionT::new(hilbert_numerator(ideal), weight_factors()).expect("denominator is 1 at t = 0")
}

/// The Hilbert series with every factor `1 - t^w` that divides the
/// numerator cancelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHilbertSeries {
    pub numerator: IntPoly,
    /// Remaining denominator factors `1 - t^w`, by `w`.
    pub denominator_weights: Vec<u32>,
}

impl ReducedHilbertSeries {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        let mut numerator = hilbert_numerator(ideal);
        let mut denominator_weights = Vec::new();
        for w in WEIGHTS {
            match numerator.div_exact(&IntPoly::binomial(-1, w as usize)) {
                Some(q) => numerator = q,
                None => denominator_weights.push(w),
            }
        }
        Self { numerator, denominator_weights }
    }

    pub fn to_rational_function(&self) -> RationalFunctionT {
        let den = self
            .denominator_weights
            .iter()
            .fold(IntPoly::one(), |acc, &w| acc.mul(&IntPoly::binomial(-1, w as usize)));
        RationalFunctionT::new(self.numerator.clone(), den).expect("denominator is 1 at t = 0")
    }
}

impl fmt::Display for ReducedHilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        let multi_term = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if self.denominator_weights.is_empty() {
            return f.write_str(&num);
        }
        if multi_term {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        let factors: Vec<String> =
            self.denominator_weights.iter().map(|w| format!("(1 - t^{w})")).collect();
        if factors.len() == 1 {
            write!(f, " / {}", factors[0])
        } else {
            write!(f, " / ({})", factors.join("*"))
        }
    }
}

/// Thread-safe memo of `I_k` bases, optionally backed by a directory of
/// canonical text files.
///
/// Requests with `k` above the cap are refused.
#[derive(Debug)]
pub struct BasisStore {
    cap: u32,
    directory: Option<PathBuf>,
    memo: Mutex<HashMap<u32, Arc<GroebnerBasis>>>,
}

impl Default for BasisStore {
    fn default() -> Self {
        Self::new(DEFAULT_IDEAL_INDEX_CAP)
    }
}

impl BasisStore {
    pub fn new(cap: u32) -> Self {
        Self { cap, directory: None, memo: Mutex::new(HashMap::new()) }
    }

    pub fn with_directory(mut self, dir: impl Into<PathBuf>) -> Self {
        self.directory = Some(dir.into());
        self
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn basis(&self, k: u32) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        if k > self.cap {
            return Err(GroebnerError::IndexAboveCap { k, cap: self.cap });
        }
        if let Some(b) = self.memo.lock().expect("poisoned").get(&k) {
            return Ok(Arc::clone(b));
        }
        let basis = Arc::new(self.load(k).unwrap_or_else(|| {
            let b = ideal_basis(k);
            self.save(&b, k);
            b
        }));
        let mut memo = self.memo.lock().expect("poisoned");
        Ok(Arc::clone(memo.entry(k).or_insert(basis)))
    }

    fn path(&self, k: u32) -> Option<PathBuf> {
        self.directory.as_ref().map(|d| d.join(format!("I_{k}.gb")))
    }

    /// A cached basis is accepted only if it parses, carries the right tag,
    /// is reduced, and contains the three defining generators.
    fn load(&self, k: u32) -> Option<GroebnerBasis> {
        let text = std::fs::read_to_string(self.path(k)?).ok()?;
        let b = GroebnerBasis::from_canonical_text(&text).ok()?;
        let ok = b.source_k == Some(k)
            && ideal_generators(k).iter().all(|g| normal_form(g, &b).is_zero());
        ok.then_some(b)
    }

    fn save(&self, b: &GroebnerBasis, k: u32) {
        if let Some(path) = self.path(k) {
            // the cache is an optimization; a failed write only costs a recompute
            let _ = std::fs::create_dir_all(path.parent().unwrap_or(&path))
                .and_then(|_| std::fs::write(&path, b.to_canonical_text()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio, TruncatedSeries};
    use crate::graded::mumford_c;
    use proptest::prelude::*;

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    fn gb(gens: &[GradedPoly]) -> GroebnerBasis {
        buchberger(gens, MonomialOrder::WeightedDegreeLex).unwrap()
    }

    #[test]
    fn ideal_generator_examples() {
        let g0 = ideal_generators(0);
        assert_eq!(g0, vec![p("alpha"), p("1/2*alpha^2"), mumford_c(3)]);
        let g1 = ideal_generators(1);
        assert_eq!(g1, vec![p("1/2*alpha^2"), mumford_c(3), mumford_c(4)]);
        for k in 0..6u32 {
            let degs: Vec<_> = ideal_generators(k).iter().map(|g| g.degree().unwrap()).collect();
            assert_eq!(degs, vec![2 * (k + 1), 2 * (k + 2), 2 * (k + 3)]);
        }
    }

    #[test]
    fn monomial_generators_are_their_own_basis() {
        let b = gb(&[p("alpha"), p("gamma")]);
        assert_eq!(b.generators(), &[p("alpha"), p("gamma")]);
    }

    #[test]
    fn first_relation_ideal_is_alpha_gamma() {
        // c_2 = α²/2 vanishes mod α; c_3 ≡ 2γ/3
        let b = gb(&ideal_generators(0));
        assert_eq!(b.generators(), &[p("alpha"), p("gamma")]);
    }

    #[test]
    fn toy_two_generator_closure() {
        // S(α² - β, αγ) = γ·(α² - β) - α·(αγ) = -βγ, reducing to βγ
        let b = gb(&[p("alpha^2 - beta"), p("alpha*gamma")]);
        assert_eq!(b.generators(), &[p("alpha^2 - beta"), p("alpha*gamma"), p("beta*gamma")]);
        assert!(b.is_reduced());
        assert!(b.s_pairs_reduce_to_zero());
    }

    #[test]
    fn empty_generators_rejected() {
        assert_eq!(buchberger(&[], MonomialOrder::default()), Err(GroebnerError::NoGenerators));
        assert_eq!(
            buchberger(&[GradedPoly::zero()], MonomialOrder::default()),
            Err(GroebnerError::NoGenerators)
        );
    }

    #[test]
    fn normal_form_examples() {
        let b2 = ideal_basis(2);
        assert!(normal_form(&p("alpha^3 + 2*alpha*beta + 4*gamma"), &b2).is_zero());
        assert_eq!(normal_form(&GradedPoly::one(), &b2), GradedPoly::one());
        for k in 0..5 {
            let b = ideal_basis(k);
            for g in ideal_generators(k) {
                assert!(normal_form(&g, &b).is_zero());
            }
            assert!(b.is_reduced());
            assert!(b.s_pairs_reduce_to_zero(), "S-pairs of I_{k}");
        }
    }

    #[test]
    fn leading_term_ideal_examples() {
        let lt = leading_term_ideal(&gb(&[p("alpha"), p("gamma")]));
        assert_eq!(lt.generators(), &[Monomial3::ALPHA, Monomial3::GAMMA]);
        let lt2 = leading_term_ideal(&ideal_basis(2));
        assert!(lt2.generators().contains(&Monomial3::new(3, 0, 0)));
        for k in 0..5 {
            assert!(leading_term_ideal(&ideal_basis(k)).is_antichain());
        }
    }

    #[test]
    fn hilbert_examples() {
        let alpha_gamma = MonomialIdeal::new([Monomial3::ALPHA, Monomial3::GAMMA]);
        let f = hilbert_series_quotient(&alpha_gamma);
        assert_eq!(f.numerator(), &IntPoly::from_i64(&[1, 0, -1, 0, 0, 0, -1, 0, 1]));
        let poly_beta = RationalFunctionT::new(IntPoly::one(), IntPoly::binomial(-1, 4)).unwrap();
        assert_eq!(f.expand(30), poly_beta.expand(30));
        let reduced = ReducedHilbertSeries::from_ideal(&alpha_gamma);
        assert_eq!(reduced.to_string(), "1 / (1 - t^4)");

        let full = hilbert_series_quotient(&MonomialIdeal::default());
        assert_eq!(full.numerator(), &IntPoly::one());
        assert_eq!(
            ReducedHilbertSeries::from_ideal(&MonomialIdeal::default()).to_string(),
            "1 / ((1 - t^2)*(1 - t^4)*(1 - t^6))"
        );

        let i2 = hilbert_series_quotient(&leading_term_ideal(&ideal_basis(2)));
        assert_eq!(i2.expand(6).coeff(6), rat(2));
    }

    #[test]
    fn hilbert_generator_cap() {
        let many = MonomialIdeal::new((0..25).map(|i| Monomial3::new(i, 24 - i, 0)));
        assert_eq!(many.generators().len(), 25);
        assert!(matches!(
            hilbert_numerator_by_subsets(&many),
            Err(GroebnerError::TooManyGenerators { count: 25, .. })
        ));
        // the folded recursion has no cap
        let s = hilbert_series_quotient(&many).expand(60);
        let counted: Vec<i64> = (0..=60).map(|d| many.standard_monomials(d).len() as i64).collect();
        assert_eq!(s, TruncatedSeries::from_integers(&counted, 60));
    }

    #[test]
    fn folded_recursion_matches_subset_sum() {
        for k in 0..=5 {
            let lt = leading_term_ideal(&ideal_basis(k));
            assert_eq!(hilbert_numerator(&lt), hilbert_numerator_by_subsets(&lt).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn hilbert_counts_standard_monomials() {
        // independent oracle: enumerate monomials outside the leading-term ideal
        for k in 0..=4 {
            let lt = leading_term_ideal(&ideal_basis(k));
            let series = hilbert_series_quotient(&lt).expand(24);
            let counted: Vec<i64> =
                (0..=24).map(|d| lt.standard_monomials(d).len() as i64).collect();
            assert_eq!(series, TruncatedSeries::from_integers(&counted, 24), "k = {k}");
        }
    }

    #[test]
    fn hilbert_coefficients_are_nonnegative_integers() {
        for k in 0..=6 {
            let lt = leading_term_ideal(&ideal_basis(k));
            let s = hilbert_series_quotient(&lt).expand(40);
            assert!(s.coeffs().iter().all(|c| crate::exact::as_nonnegative_integer(c).is_some()));
        }
    }

    #[test]
    fn canonical_text_round_trip() {
        let b = ideal_basis(3);
        let text = b.to_canonical_text();
        assert!(text.starts_with("ideal I_3\norder weighted-degree-lex"));
        assert_eq!(GroebnerBasis::from_canonical_text(&text).unwrap(), b);
        assert!(GroebnerBasis::from_canonical_text("ideal I_3\n").is_err());
        let tampered = text.replacen("generators", "generators 9\n#", 1);
        assert!(GroebnerBasis::from_canonical_text(&tampered).is_err());
    }

    #[test]
    fn store_caps_and_caches() {
        let store = BasisStore::new(2);
        assert_eq!(store.basis(3).unwrap_err(), GroebnerError::IndexAboveCap { k: 3, cap: 2 });
        let a = store.basis(2).unwrap();
        let b = store.basis(2).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn store_directory_round_trip() {
        let dir = std::env::temp_dir().join(format!("ihrep-store-{}", std::process::id()));
        let fresh = BasisStore::new(3).with_directory(&dir);
        let computed = fresh.basis(3).unwrap();
        assert!(dir.join("I_3.gb").exists());
        let warm = BasisStore::new(3).with_directory(&dir);
        assert_eq!(*warm.basis(3).unwrap(), *computed);
        // a corrupt file is ignored
        std::fs::write(dir.join("I_2.gb"), "garbage").unwrap();
        assert_eq!(*BasisStore::new(3).with_directory(&dir).basis(2).unwrap(), ideal_basis(2));
        let _ = std::fs::remove_dir_all(&dir);
    }

    fn homogeneous(d: u32) -> impl Strategy<Value = GradedPoly> {
        let mons = monomials_of_degree(d);
        proptest::collection::vec((-5i64..6, 1i64..4), mons.len()).prop_map(move |cs| {
            let mut q = GradedPoly::zero();
            for (m, (n, den)) in mons.iter().zip(cs) {
                q.add_term(*m, ratio(n, den));
            }
            q
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn normal_form_is_multiplicative(
            (pa, pb) in (0u32..=6, 0u32..=6)
                .prop_flat_map(|(da, db)| (homogeneous(2 * da), homogeneous(2 * db))),
        ) {
            let b = ideal_basis(2);
            let lhs = normal_form(&(&pa * &pb), &b);
            let rhs = normal_form(&(&normal_form(&pa, &b) * &normal_form(&pb, &b)), &b);
            prop_assert_eq!(lhs, rhs);
            let sum = normal_form(&(&pa + &pb), &b);
            prop_assert_eq!(sum, &normal_form(&pa, &b) + &normal_form(&pb, &b));
        }
    }
}
