//! Acceptance gate. One test per criterion; each prints a single
//! `PASS`/`FAIL` line with its wall time.
//!
//! Run with `cargo test -p ihrep --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use ihrep::exact::{factorial, rat, ratio, Rational, TruncatedSeries};
use ihrep::exterior::{
    invariant_truncated_dimensions, prim_dimension_bruteforce, prim_dimension_formula,
    restriction_image_dimensions,
};
use ihrep::graded::{expand_abxi_monomial, GradedPoly, Monomial3};
use ihrep::groebner::{normal_form, BasisStore};
use ihrep::ih::{
    b_coefficients, correction_series, e_basis, e_basis_independence, equivariant_series_closed,
    equivariant_series_structural, ih_series_structural, ip_series_closed, pairing_value,
    t_over_tanh_series, top_identity_check,
};
use ihrep::report::restriction_truncation;

/// Runs one criterion, prints its verdict line, and fails the test on an
/// error or when the time limit is exceeded.
fn criterion(n: u32, title: &str, limit_secs: u64, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let verdict = match (&outcome, elapsed <= limit) {
        (Ok(()), true) => Ok(()),
        (Ok(()), false) => Err(format!("took {elapsed:?}, limit {limit:?}")),
        (Err(e), _) => Err(e.clone()),
    };
    match &verdict {
        Ok(()) => println!("PASS criterion {n}: {title} ({:.3}s, limit {limit_secs}s)", elapsed.as_secs_f64()),
        Err(e) => println!("FAIL criterion {n}: {title} ({:.3}s, limit {limit_secs}s): {e}", elapsed.as_secs_f64()),
    }
    if let Err(e) = verdict {
        panic!("criterion {n} failed: {e}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn choose(n: i64, k: i64) -> u128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `tanh t` from `T' = 1 - T²`, `T(0) = 0`, coefficient by coefficient.
fn tanh_by_ode(order: usize) -> Vec<Rational> {
    let mut t = vec![rat(0); order + 2];
    for n in 0..=order {
        let mut sq = rat(0);
        for i in 0..=n {
            sq += &t[i] * &t[n - i];
        }
        let rhs = if n == 0 { rat(1) } else { rat(0) } - sq;
        t[n + 1] = rhs / rat(n as i64 + 1);
    }
    t
}

/// Bernoulli numbers from `Σ_{j≤n} C(n+1, j) B_j = 0`.
fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![rat(1)];
    for m in 1..=n {
        let mut s = rat(0);
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from_integer(BigInt::from(choose(m as i64 + 1, j as i64))) * bj;
        }
        b.push(-s / rat(m as i64 + 1));
    }
    b
}

/// `b_k = 2^{2k} B_{2k} / (2k)!`, the coefficients of `t / tanh t`.
fn b_from_bernoulli(k: usize) -> Rational {
    let bern = bernoulli(2 * k);
    Rational::from_integer(BigInt::from(1) << (2 * k)) * &bern[2 * k] / factorial(2 * k as u32)
}

#[test]
fn criterion_1_genus_two_betti_numbers() {
    criterion(1, "genus-2 intersection Betti numbers", 1, || {
        let closed = ip_series_closed(2).map_err(|e| e.to_string())?;
        ensure(closed.coefficients == vec![1, 0, 1, 0, 1, 0, 1], || {
            format!("closed route gave {:?}", closed.coefficients)
        })?;
        let structural = ih_series_structural(2).map_err(|e| e.to_string())?;
        ensure(structural.coefficients == closed.coefficients, || {
            format!("structural route gave {:?}", structural.coefficients)
        })
    });
}

#[test]
fn criterion_2_intersection_route_agreement() {
    criterion(2, "intersection routes agree for g = 2..6", 10, || {
        for g in 2..=6 {
            let closed = ip_series_closed(g).map_err(|e| e.to_string())?;
            let structural = ih_series_structural(g).map_err(|e| e.to_string())?;
            ensure(closed.coefficients.len() == 6 * g as usize - 5, || format!("g={g}: wrong length"))?;
            ensure(closed.first_mismatch(&structural).is_none(), || {
                format!("g={g}: mismatch at degree {:?}", closed.first_mismatch(&structural))
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_3_equivariant_route_agreement() {
    criterion(3, "equivariant routes agree for g = 2..4 to order 6g+24", 60, || {
        // fresh store: Buchberger runs inside the timed window
        let store = BasisStore::default();
        for g in 2..=4u32 {
            let order = 6 * g as usize + 24;
            let closed = equivariant_series_closed(g, order);
            let structural = equivariant_series_structural(g, order, &store).map_err(|e| e.to_string())?;
            let mismatch = (0..=order).find(|&d| closed.coeff(d) != structural.coeff(d));
            ensure(mismatch.is_none(), || format!("g={g}: first mismatch at t^{mismatch:?}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_4_polynomiality_and_duality() {
    criterion(4, "polynomiality and duality for g = 2..8", 10, || {
        for g in 2..=8u32 {
            let top = 6 * g as usize - 6;
            let order = 6 * g as usize + 24;
            let diff = equivariant_series_closed(g, order)
                .sub(&correction_series(g, order).map_err(|e| e.to_string())?);
            for d in top + 1..=order {
                ensure(diff.coeff(d) == rat(0), || format!("g={g}: t^{d} coefficient {}", diff.coeff(d)))?;
            }
            let table: Vec<Rational> = (0..=top).map(|d| diff.coeff(d)).collect();
            for (d, c) in table.iter().enumerate() {
                ensure(c.is_integer() && *c >= rat(0), || format!("g={g}: t^{d} coefficient {c}"))?;
                ensure(*c == table[top - d], || format!("g={g}: not palindromic at {d}"))?;
            }
            ensure(table[0] == rat(1), || format!("g={g}: leading entry {}", table[0]))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_5_lefschetz_dimension_identity() {
    criterion(5, "Lefschetz dimension identity and primitive dimensions", 30, || {
        for g in 2..=12i64 {
            let sum: u128 = (0..=g)
                .map(|l| (choose(2 * g, l) - choose(2 * g, l - 2)) * (g - l + 1) as u128)
                .sum();
            ensure(sum == 4u128.pow(g as u32), || format!("g={g}: sum {sum}"))?;
        }
        for g in 2..=4u32 {
            for l in 0..=g {
                let brute = prim_dimension_bruteforce(g, l).map_err(|e| e.to_string())?;
                let formula = prim_dimension_formula(g, l);
                ensure(brute as u64 == formula, || format!("g={g}, l={l}: {brute} vs {formula}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_truncation_intersection() {
    criterion(6, "restriction image equals invariant part equals correction term", 60, || {
        for g in 2..=3u32 {
            let u = restriction_truncation(g);
            let image = restriction_image_dimensions(g, u).map_err(|e| e.to_string())?;
            let invariant = invariant_truncated_dimensions(g, u);
            let window = 2 * (u - g);
            let correction = correction_series(g, window as usize).map_err(|e| e.to_string())?;
            ensure(image.keys().copied().eq(0..=window), || format!("g={g}: window {:?}", image.keys()))?;
            for d in 0..=window {
                let c = correction.coeff(d as usize);
                ensure(image[&d] == invariant[&d] && rat(image[&d] as i64) == c, || {
                    format!("g={g}, degree {d}: image {}, invariant {}, correction {c}", image[&d], invariant[&d])
                })?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_top_identity_and_pairing() {
    criterion(7, "top-degree identity modulo I_g for g = 2..4", 60, || {
        let store = BasisStore::default();
        for g in 2..=4u32 {
            let verdict = top_identity_check(g, &store).map_err(|e| e.to_string())?;
            ensure(verdict.passed(), || format!("g={g}: failing (m,n) {:?}", verdict.failures()))?;

            // the identity again, with b_k from Bernoulli numbers
            let gb = store.basis(g).map_err(|e| e.to_string())?;
            let reference = expand_abxi_monomial(g - 2, g - 2, 1);
            for n in 0..g - 1 {
                let m = 3 * g - 3 - 2 * n;
                let scalar = factorial(m) * b_from_bernoulli((g - n - 1) as usize) / factorial(g - 2);
                let lhs = GradedPoly::monomial(Monomial3::new(m, n, 0)) + reference.scale(&scalar);
                let nf = normal_form(&lhs, &gb);
                ensure(nf.is_zero(), || format!("g={g}, (m,n)=({m},{n}): residual {nf}"))?;
            }
        }

        let gb2 = store.basis(2).map_err(|e| e.to_string())?;
        let a3 = GradedPoly::alpha().pow(3);
        let xi = expand_abxi_monomial(0, 0, 1);
        let diff = &a3 + &xi.scale(&rat(2));
        ensure(normal_form(&diff, &gb2).is_zero(), || "alpha^3 is not -2 xi modulo I_2".into())?;
        let p = pairing_value(2, (1, 0), (2, 0)).map_err(|e| e.to_string())?;
        ensure(p == rat(8), || format!("<alpha, alpha^2> = {p}"))
    });
}

#[test]
fn criterion_8_b_series() {
    criterion(8, "t/tanh t times tanh t/t is 1 to order 24", 1, || {
        let order = 24;
        let tanh = tanh_by_ode(order + 1);
        // tanh t / t: drop the zero constant term
        let tanh_over_t = TruncatedSeries::new(tanh[1..=order + 1].to_vec()).map_err(|e| e.to_string())?;
        let product = t_over_tanh_series(order).mul(&tanh_over_t);
        ensure(product == TruncatedSeries::one(order), || format!("product {product}"))?;
        let b = b_coefficients(2);
        ensure(b == vec![rat(1), ratio(1, 3), ratio(-1, 45)], || format!("b_0..b_2 = {b:?}"))?;
        for k in 0..=12 {
            let lib = t_over_tanh_series(order).coeff(2 * k);
            ensure(lib == b_from_bernoulli(k), || format!("b_{k}: {lib} vs Bernoulli"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_9_e_basis_independence() {
    criterion(9, "E_m monomials independent modulo I_m for m = 0..4", 30, || {
        let store = BasisStore::default();
        for m in 0..=4u32 {
            let v = e_basis_independence(m, &store).map_err(|e| e.to_string())?;
            ensure(v.size == e_basis(m).len(), || format!("m={m}: size {}", v.size))?;
            ensure(v.independent() && v.dependency.is_none(), || {
                format!("m={m}: rank {} of {}, dependency {:?}", v.rank, v.size, v.dependency)
            })?;
        }
        Ok(())
    });
}
