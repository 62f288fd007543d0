use num_traits::Zero;

use super::quadruple::Quadruple;
use crate::error::{Error, Result};
use crate::matrix::{RatMatrix, RatVector};
use crate::rational::Rational;
use crate::span::SpanBuilder;
use crate::spectrum::rational_spectrum;

/// `g` with `g X g^-1 = xu` and `g Y g^-1 = yu` both upper triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangularization {
    pub g: RatMatrix,
    pub g_inv: RatMatrix,
    pub xu: RatMatrix,
    pub yu: RatMatrix,
}

/// Scales so the first nonzero entry is 1.
fn normalize(v: &RatVector) -> RatVector {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => v.scale(&lead.recip()),
        None => v.clone(),
    }
}

fn lex_cmp(a: &RatVector, b: &RatVector) -> std::cmp::Ordering {
    a.0.cmp(&b.0)
}

/// Coordinates `r` with `m * basis = basis * r`, or `None` if the span is not `m`-stable.
fn restrict(m: &RatMatrix, basis: &[RatVector]) -> Result<Option<RatMatrix>> {
    let b = RatMatrix::from_columns(basis)?;
    let mut cols = Vec::with_capacity(basis.len());
    for v in basis {
        match b.solve(&m.mul_vec(v)) {
            Some(c) => cols.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(RatMatrix::from_columns(&cols)?))
}

fn lift(basis: &[RatVector], coords: &RatVector) -> RatVector {
    let mut out = RatVector::zeros(basis[0].len());
    for (b, c) in basis.iter().zip(coords.iter()) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

fn eigenvectors(m: &RatMatrix) -> Result<Vec<RatVector>> {
    let n = m.rows();
    let mut out = Vec::new();
    for (mu, _) in rational_spectrum(m)? {
        let shifted = m.sub(&RatMatrix::diag(&vec![mu; n]));
        out.extend(shifted.kernel());
    }
    Ok(out)
}

/// Common eigenvectors reachable through eigenspaces of `b`, using that
/// `ker(b - mu)` is `a`-stable once `[a,b]` kills it, and that otherwise
/// `Im(b - mu)` is stable under both when the commutator has rank one.
fn candidates_via(a: &RatMatrix, b: &RatMatrix) -> Result<Vec<RatVector>> {
    let n = a.rows();
    if n == 1 {
        return Ok(vec![RatVector::unit(1, 0)]);
    }
    let comm = RatMatrix::commutator(a, b);
    let mut out = Vec::new();
    for (mu, _) in rational_spectrum(b)? {
        let shifted = b.sub(&RatMatrix::diag(&vec![mu; n]));
        let eig = shifted.kernel();
        if eig.iter().all(|v| comm.mul_vec(v).is_zero()) {
            let ra = restrict(a, &eig)?
                .ok_or_else(|| Error::InternalInconsistency("eigenspace not stable".into()))?;
            for w in eigenvectors(&ra)? {
                out.push(lift(&eig, &w));
            }
        } else {
            let mut img = SpanBuilder::new(n);
            for c in 0..n {
                img.insert(&shifted.column(c));
            }
            let basis = img.basis().to_vec();
            if basis.is_empty() || basis.len() == n {
                continue;
            }
            let (Some(ra), Some(rb)) = (restrict(a, &basis)?, restrict(b, &basis)?) else {
                continue;
            };
            for w in candidates_via(&ra, &rb)? {
                out.push(lift(&basis, &w));
            }
        }
    }
    Ok(out)
}

fn common_eigenvector(x: &RatMatrix, y: &RatMatrix) -> Result<RatVector> {
    let mut cands = candidates_via(x, y)?;
    if cands.is_empty() {
        cands = candidates_via(y, x)?;
    }
    cands
        .iter()
        .map(normalize)
        .min_by(lex_cmp)
        .ok_or(Error::NoCommonFlag)
}

/// Columns `b_1..b_n` with `X b_k, Y b_k` in `span(b_1..b_k)`.
fn flag_basis(x: &RatMatrix, y: &RatMatrix) -> Result<Vec<RatVector>> {
    let n = x.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let v = common_eigenvector(x, y)?;
    let mut span = SpanBuilder::new(n);
    span.insert(&v);
    let mut complement = Vec::new();
    for k in 0..n {
        let e = RatVector::unit(n, k);
        if span.insert(&e) {
            complement.push(e);
        }
    }
    let mut full = vec![v.clone()];
    full.extend(complement.iter().cloned());
    let p = RatMatrix::from_columns(&full)?;
    let p_inv = p
        .inverse()
        .ok_or_else(|| Error::InternalInconsistency("basis not invertible".into()))?;
    let quotient = |m: &RatMatrix| -> Result<RatMatrix> {
        let c = p_inv.mul(m).mul(&p);
        for r in 1..n {
            if !c[(r, 0)].is_zero() {
                return Err(Error::NoCommonFlag);
            }
        }
        RatMatrix::from_rows(
            (1..n)
                .map(|r| (1..n).map(|s| c[(r, s)].clone()).collect())
                .collect(),
        )
    };
    let (xq, yq) = (quotient(x)?, quotient(y)?);
    let mut out = vec![v];
    for w in flag_basis(&xq, &yq)? {
        out.push(lift(&complement, &w));
    }
    Ok(out)
}

pub fn simultaneous_triangularize(x: &RatMatrix, y: &RatMatrix) -> Result<Triangularization> {
    let n = x.require_square()?;
    if y.rows() != n || y.cols() != n {
        return Err(Error::DimensionMismatch("X and Y sizes differ".into()));
    }
    let basis = flag_basis(x, y)?;
    let p = RatMatrix::from_columns(&basis)?;
    let g = p
        .inverse()
        .ok_or_else(|| Error::InternalInconsistency("flag basis not invertible".into()))?;
    let xu = x.conjugate_by(&g, &p);
    let yu = y.conjugate_by(&g, &p);
    if !xu.is_upper_triangular() || !yu.is_upper_triangular() {
        return Err(Error::InternalInconsistency(
            "triangularization check failed".into(),
        ));
    }
    Ok(Triangularization {
        g,
        g_inv: p,
        xu,
        yu,
    })
}

/// Sorted diagonal pairs of a simultaneous triangularization.
pub fn spec_map_f(q: &Quadruple) -> Result<Vec<(Rational, Rational)>> {
    if !q.on_variety() {
        return Err(Error::NotOnVariety);
    }
    let t = simultaneous_triangularize(&q.x, &q.y)?;
    let mut pairs: Vec<_> = t.xu.diagonal().into_iter().zip(t.yu.diagonal()).collect();
    pairs.sort();
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acv::{epsilon, normal_form, NormalFormParams};
    use crate::perm::Permutation;
    use crate::random;
    use crate::rational::int;
    use num_traits::One;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&v| int(v)).collect()
    }

    fn perm_matrix(p: &Permutation) -> RatMatrix {
        let n = p.len();
        let mut m = RatMatrix::zeros(n, n);
        for k in 0..n {
            m[(p.apply(k), k)] = Rational::one();
        }
        m
    }

    #[test]
    fn commuting_diagonal_pair_is_permuted() {
        let x = RatMatrix::diag(&ints(&[1, 2, 3]));
        let y = RatMatrix::diag(&ints(&[4, 0, 4]));
        let t = simultaneous_triangularize(&x, &y).unwrap();
        let n = 3;
        let is_perm = (0..n).all(|r| (0..n).filter(|&s| !t.g[(r, s)].is_zero()).count() == 1);
        assert!(is_perm);
        assert!(t.xu.is_upper_triangular() && t.yu.is_upper_triangular());
    }

    #[test]
    fn normal_form_gives_reversal() {
        let p = NormalFormParams::component(ints(&[0, 1, 3, -2]), ints(&[5, 6, 7, 8]), 2).unwrap();
        let q = normal_form(&p).unwrap();
        let t = simultaneous_triangularize(&q.x, &q.y).unwrap();
        let rev = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(t.g, perm_matrix(&rev));
        let mut expect: Vec<_> = p.x.iter().cloned().zip(p.y.iter().cloned()).collect();
        expect.sort();
        assert_eq!(spec_map_f(&q).unwrap(), expect);
    }

    #[test]
    fn conjugated_epsilon_has_same_spectrum() {
        let mut rng = random::rng(11);
        let (x, y) = (ints(&[1, 2, 2]), ints(&[0, 0, 5]));
        let e = epsilon(&RatVector(x.clone()), &RatVector(y.clone())).unwrap();
        let (g, gi) = random::invertible(&mut rng, 3, 5);
        let mut expect: Vec<_> = x.into_iter().zip(y).collect();
        expect.sort();
        assert_eq!(spec_map_f(&e).unwrap(), expect);
        assert_eq!(spec_map_f(&e.conjugate(&g, &gi)).unwrap(), expect);
    }

    #[test]
    fn high_rank_commutator_fails() {
        // Pauli-like pair with no common eigenvector.
        let x = RatMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let y = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(simultaneous_triangularize(&x, &y), Err(Error::NoCommonFlag));
    }
}
