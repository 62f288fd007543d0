//! Seeded random generators for exact test data.
//!
//! All randomness in the crate flows from a `ChaCha8Rng` seeded by the caller,
//! so sweeps are reproducible bit for bit.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::{RatMatrix, RatVector};
use crate::poly::{MPoly, Monomial};
use crate::rational::Rational;
use std::sync::Arc;

pub use rand::SeedableRng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Default bound on numerators and denominators of random rationals.
pub const DEFAULT_ENTRY_BOUND: i64 = 20;

pub fn rational(rng: &mut SeededRng, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound);
    Rational::new(p.into(), q.into())
}

pub fn small_int(rng: &mut SeededRng, bound: i64) -> Rational {
    Rational::from_integer(rng.gen_range(-bound..=bound).into())
}

/// `n` pairwise distinct rationals.
pub fn distinct_rationals(rng: &mut SeededRng, n: usize, bound: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let r = rational(rng, bound);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn vector(rng: &mut SeededRng, n: usize, bound: i64) -> RatVector {
    RatVector((0..n).map(|_| rational(rng, bound)).collect())
}

pub fn matrix(rng: &mut SeededRng, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| rational(rng, bound)).collect())
            .collect(),
    )
    .expect("rectangular")
}

/// Random invertible matrix with small integer entries, together with its inverse.
pub fn invertible(rng: &mut SeededRng, n: usize, bound: i64) -> (RatMatrix, RatMatrix) {
    loop {
        let g = RatMatrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| small_int(rng, bound)).collect())
                .collect(),
        )
        .expect("rectangular");
        if let Some(inv) = g.inverse() {
            return (g, inv);
        }
    }
}

/// Random polynomial with at most `max_terms` terms of total degree `<= max_degree`.
pub fn polynomial(
    rng: &mut SeededRng,
    vars: Arc<[String]>,
    max_degree: u32,
    max_terms: usize,
    bound: i64,
) -> MPoly<Rational> {
    let n = vars.len();
    let terms = rng.gen_range(1..=max_terms);
    let mut p = MPoly::zero(vars);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        p.add_term(Monomial(e), &rational(rng, bound));
    }
    p
}

/// Normal-form parameters with distinct random `y` and random `x`.
pub fn normal_form_params(
    rng: &mut SeededRng,
    n: usize,
    k_prime: usize,
    k_double_prime: usize,
    bound: i64,
) -> crate::Result<crate::acv::NormalFormParams> {
    let y = distinct_rationals(rng, n, bound);
    let x = (0..n).map(|_| rational(rng, bound)).collect();
    crate::acv::NormalFormParams::new(y, x, k_prime, k_double_prime)
}

/// Random element of `H_c` with at most `max_terms` PBW terms, each of
/// `(x, y)`-degree `<= max_degree`, and coefficients of degree `<= 1` in `c`.
pub fn h_element(
    rng: &mut SeededRng,
    n: usize,
    max_degree: u32,
    max_terms: usize,
    bound: i64,
) -> crate::cherednik::HElem {
    use crate::cherednik::{HElem, PbwKey};
    let perms = crate::perm::Permutation::all(n);
    let mut out = HElem::zero(n);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let deg = rng.gen_range(0..=max_degree);
        let (mut x, mut y) = (vec![0u32; n], vec![0u32; n]);
        for _ in 0..deg {
            let k = rng.gen_range(0..n);
            if rng.gen_bool(0.5) {
                x[k] += 1;
            } else {
                y[k] += 1;
            }
        }
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let coef = crate::upoly::UniPoly::new(vec![small_int(rng, bound), small_int(rng, bound)]);
        out.add_term(PbwKey { x, w, y }, &coef);
    }
    out
}
