//! Bundled cross-checks for one genus.

use std::fmt;

use num_traits::Zero;

use crate::exact::{fmt_rational, TruncatedSeries};
use crate::exterior::{
    invariant_truncated_dimensions, prim_dimension_bruteforce, prim_dimension_formula,
    restriction_image_dimensions, PRIM_BRUTEFORCE_MAX_GENUS, RESTRICTION_MAX_GENUS,
};
use crate::groebner::BasisStore;
use crate::ih::{
    correction_series, default_order, e_basis_independence, equivariant_series_closed,
    equivariant_series_structural, ih_series_structural, ip_series_closed, pairing_value,
    t_over_tanh_series, tanh_over_t_series, top_degree, top_identity_check, BettiTable,
};

/// Order to which the `b_k` series inverse is checked.
pub const B_SERIES_CHECK_ORDER: usize = 24;

/// `u`-truncation used for the restriction-image check; the reliable
/// window is then degrees `0..=18`.
pub fn restriction_truncation(g: u32) -> u32 {
    g + 9
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub genus: u32,
    pub status: Status,
    pub details: String,
}

impl CheckRecord {
    fn new(name: &'static str, genus: u32, ok: bool, details: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self { name, genus, status, details: details.into() }
    }

    fn skipped(name: &'static str, genus: u32, why: impl Into<String>) -> Self {
        Self { name, genus, status: Status::Skipped, details: why.into() }
    }

    fn error(name: &'static str, genus: u32, err: impl fmt::Display) -> Self {
        Self::new(name, genus, false, format!("error: {err}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub genus: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    /// Pass iff every non-skipped check passed.
    pub fn overall(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }
}

fn series_mismatch(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<String> {
    let n = a.order().min(b.order());
    (0..=n).find(|&d| a.coeff(d) != b.coeff(d)).map(|d| {
        format!("first mismatch at t^{d}: {} vs {}", fmt_rational(&a.coeff(d)), fmt_rational(&b.coeff(d)))
    })
}

fn tables_agree(name: &'static str, g: u32, a: &BettiTable, b: &BettiTable) -> CheckRecord {
    match a.first_mismatch(b) {
        None => CheckRecord::new(name, g, true, format!("{} degrees agree", a.coefficients.len())),
        Some(d) => CheckRecord::new(
            name,
            g,
            false,
            format!(
                "first mismatch at degree {d}: {:?} vs {:?}",
                a.coefficients.get(d),
                b.coefficients.get(d)
            ),
        ),
    }
}

pub fn check_intersection_routes(g: u32) -> CheckRecord {
    const NAME: &str = "route-agreement-intersection";
    match (ip_series_closed(g), ih_series_structural(g)) {
        (Ok(a), Ok(b)) => tables_agree(NAME, g, &a, &b),
        (Err(e), _) | (_, Err(e)) => CheckRecord::error(NAME, g, e),
    }
}

pub fn check_equivariant_routes(g: u32, store: &BasisStore) -> CheckRecord {
    const NAME: &str = "route-agreement-equivariant";
    if g > store.cap() {
        return CheckRecord::skipped(NAME, g, format!("needs I_{g}; Groebner cap is {}", store.cap()));
    }
    let order = default_order(g);
    match equivariant_series_structural(g, order, store) {
        Ok(s) => match series_mismatch(&s, &equivariant_series_closed(g, order)) {
            None => CheckRecord::new(NAME, g, true, format!("agree through t^{order}")),
            Some(m) => CheckRecord::new(NAME, g, false, m),
        },
        Err(e) => CheckRecord::error(NAME, g, e),
    }
}

pub fn check_polynomiality(g: u32) -> CheckRecord {
    const NAME: &str = "polynomiality";
    let order = default_order(g);
    let diff = match correction_series(g, order) {
        Ok(c) => equivariant_series_closed(g, order).sub(&c),
        Err(e) => return CheckRecord::error(NAME, g, e),
    };
    let top = top_degree(g);
    match (top + 1..=order).find(|&d| !diff.coeff(d).is_zero()) {
        None => CheckRecord::new(NAME, g, true, format!("zero in degrees {}..={order}", top + 1)),
        Some(d) => CheckRecord::new(
            NAME,
            g,
            false,
            format!("coefficient of t^{d} is {}", fmt_rational(&diff.coeff(d))),
        ),
    }
}

pub fn check_duality(g: u32) -> CheckRecord {
    const NAME: &str = "poincare-duality";
    match ip_series_closed(g) {
        Ok(t) => {
            let ok = t.is_palindromic() && t.coefficients.first() == Some(&1);
            let details = match (0..t.coefficients.len())
                .find(|&d| t.coefficients[d] != t.coefficients[t.coefficients.len() - 1 - d])
            {
                None if ok => format!("palindromic about degree {}", top_degree(g)),
                None => format!("leading entry is {:?}", t.coefficients.first()),
                Some(d) => format!("degree {d} differs from its dual"),
            };
            CheckRecord::new(NAME, g, ok, details)
        }
        Err(e) => CheckRecord::error(NAME, g, e),
    }
}

pub fn check_e_independence(g: u32, store: &BasisStore) -> CheckRecord {
    const NAME: &str = "e-basis-independence";
    if g > store.cap() {
        return CheckRecord::skipped(NAME, g, format!("needs I_0..I_{g}; Groebner cap is {}", store.cap()));
    }
    let mut notes = Vec::new();
    for m in 0..=g {
        match e_basis_independence(m, store) {
            Ok(v) if v.independent() => notes.push(format!("m={m}: rank {}", v.rank)),
            Ok(v) => {
                let dep = v
                    .dependency
                    .map(|(d, c)| {
                        let c: Vec<String> = c.iter().map(fmt_rational).collect();
                        format!(" in degree {d}, dependency [{}]", c.join(", "))
                    })
                    .unwrap_or_default();
                return CheckRecord::new(NAME, g, false, format!("m={m}: rank {} < {}{dep}", v.rank, v.size));
            }
            Err(e) => return CheckRecord::error(NAME, g, e),
        }
    }
    CheckRecord::new(NAME, g, true, notes.join("; "))
}

pub fn check_b_series(g: u32) -> CheckRecord {
    const NAME: &str = "b-series-inverse";
    let n = B_SERIES_CHECK_ORDER;
    let product = t_over_tanh_series(n).mul(&tanh_over_t_series(n));
    match series_mismatch(&product, &TruncatedSeries::one(n)) {
        None => CheckRecord::new(NAME, g, true, format!("product is 1 through t^{n}")),
        Some(m) => CheckRecord::new(NAME, g, false, m),
    }
}

pub fn check_lefschetz_identity(g: u32) -> CheckRecord {
    const NAME: &str = "lefschetz-dimension-identity";
    let total: u128 =
        (0..=g).map(|l| u128::from(prim_dimension_formula(g, l)) * u128::from(g - l + 1)).sum();
    let expected = 4u128.pow(g);
    CheckRecord::new(NAME, g, total == expected, format!("sum = {total}, 4^g = {expected}"))
}

pub fn check_prim_bruteforce(g: u32) -> CheckRecord {
    const NAME: &str = "prim-formula-vs-bruteforce";
    if g > PRIM_BRUTEFORCE_MAX_GENUS {
        return CheckRecord::skipped(NAME, g, format!("brute force limited to g <= {PRIM_BRUTEFORCE_MAX_GENUS}"));
    }
    for l in 0..=g {
        let formula = prim_dimension_formula(g, l);
        match prim_dimension_bruteforce(g, l) {
            Ok(b) if b as u64 == formula => {}
            Ok(b) => {
                return CheckRecord::new(NAME, g, false, format!("l={l}: formula {formula}, brute force {b}"))
            }
            Err(e) => return CheckRecord::error(NAME, g, e),
        }
    }
    CheckRecord::new(NAME, g, true, format!("l = 0..={g} agree"))
}

pub fn check_restriction_image(g: u32) -> CheckRecord {
    const NAME: &str = "restriction-image-vs-invariant";
    if g > RESTRICTION_MAX_GENUS {
        return CheckRecord::skipped(NAME, g, format!("brute force limited to g <= {RESTRICTION_MAX_GENUS}"));
    }
    let u = restriction_truncation(g);
    let image = match restriction_image_dimensions(g, u) {
        Ok(m) => m,
        Err(e) => return CheckRecord::error(NAME, g, e),
    };
    let invariant = invariant_truncated_dimensions(g, u);
    let top = *invariant.keys().last().unwrap_or(&0);
    let correction = match correction_series(g, top as usize) {
        Ok(c) => c,
        Err(e) => return CheckRecord::error(NAME, g, e),
    };
    for (d, inv) in &invariant {
        let img = image.get(d).copied().unwrap_or(0);
        let corr = correction.coeff(*d as usize);
        if img != *inv || corr != crate::exact::rat(*inv as i64) {
            return CheckRecord::new(
                NAME,
                g,
                false,
                format!("degree {d}: image {img}, invariant {inv}, series {}", fmt_rational(&corr)),
            );
        }
    }
    CheckRecord::new(NAME, g, true, format!("degrees 0..={top} agree (u-truncation {u})"))
}

pub fn check_top_identity(g: u32, store: &BasisStore) -> CheckRecord {
    const NAME: &str = "top-identity";
    if g > store.cap() {
        return CheckRecord::skipped(NAME, g, format!("needs I_{g}; Groebner cap is {}", store.cap()));
    }
    let verdict = match top_identity_check(g, store) {
        Ok(v) => v,
        Err(e) => return CheckRecord::error(NAME, g, e),
    };
    let mut notes = Vec::new();
    let mut ok = true;
    for e in &verdict.entries {
        let pairing = pairing_value(g, (e.m, e.n), (0, 0)).ok();
        let consistent = e.pairing_from_ring(g).is_some_and(|p| Some(p) == pairing);
        ok &= e.passed() && consistent;
        notes.push(format!(
            "(m,n)=({},{}): {}{}",
            e.m,
            e.n,
            if e.passed() { "pass" } else { "fail" },
            if consistent { "" } else { ", pairing inconsistent" }
        ));
    }
    notes.push(format!("dim of degree {} piece of Q[alpha,beta,gamma]/I_{g} = {}", 6 * g - 6, verdict.top_degree_dimension));
    CheckRecord::new(NAME, g, ok, notes.join("; "))
}

/// Runs every check for genus `g`. Checks run concurrently; the report
/// lists them in a fixed order.
pub fn run_verification(g: u32, store: &BasisStore) -> VerificationReport {
    type Check<'a> = Box<dyn Fn() -> CheckRecord + Send + Sync + 'a>;
    let checks: Vec<Check<'_>> = vec![
        Box::new(|| check_intersection_routes(g)),
        Box::new(|| check_equivariant_routes(g, store)),
        Box::new(|| check_polynomiality(g)),
        Box::new(|| check_duality(g)),
        Box::new(|| check_e_independence(g, store)),
        Box::new(|| check_b_series(g)),
        Box::new(|| check_lefschetz_identity(g)),
        Box::new(|| check_prim_bruteforce(g)),
        Box::new(|| check_restriction_image(g)),
        Box::new(|| check_top_identity(g, store)),
    ];
    let checks = std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(c)).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    VerificationReport { genus: g, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_all_pass() {
        let r = run_verification(2, &BasisStore::default());
        assert_eq!(r.checks.len(), 10);
        for c in &r.checks {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.details);
        }
        assert_eq!(r.overall(), Status::Pass);
    }

    #[test]
    fn large_genus_skips_groebner_checks() {
        let r = run_verification(6, &BasisStore::default());
        let skipped: Vec<_> =
            r.checks.iter().filter(|c| c.status == Status::Skipped).map(|c| c.name).collect();
        assert_eq!(
            skipped,
            vec![
                "route-agreement-equivariant",
                "e-basis-independence",
                "prim-formula-vs-bruteforce",
                "restriction-image-vs-invariant",
                "top-identity"
            ]
        );
        assert_eq!(r.overall(), Status::Pass);
    }

    #[test]
    fn overall_ignores_skips_but_not_failures() {
        let mut r = VerificationReport {
            genus: 2,
            checks: vec![CheckRecord::skipped("x", 2, ""), CheckRecord::new("y", 2, true, "")],
        };
        assert_eq!(r.overall(), Status::Pass);
        r.checks.push(CheckRecord::new("z", 2, false, ""));
        assert_eq!(r.overall(), Status::Fail);
    }
}
