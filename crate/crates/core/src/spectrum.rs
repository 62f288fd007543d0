//! Characteristic polynomials, rational spectra and generalized eigenspaces.
//!
//! Rational eigenvalues are found without factoring integers: real roots of the
//! squarefree part are isolated with a Sturm chain, each isolating interval is
//! shrunk below `1/(2 a^2)` (with `a` the leading coefficient of the primitive
//! integer polynomial), and the simplest rational inside it is the only
//! possible rational root there.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{RatMatrix, RatVector};
use crate::rational::{simplest_between, Rational};
use crate::upoly::UniPoly;

/// Monic characteristic polynomial `det(t I - M)` by Faddeev–LeVerrier.
pub fn charpoly(m: &RatMatrix) -> Result<UniPoly> {
    let n = m.require_square()?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = RatMatrix::zeros(n, n);
    let id = RatMatrix::identity(n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&id.scale(&coeffs[n - k + 1]));
        let am = m.mul(&mk);
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    Ok(UniPoly::new(coeffs))
}

/// True iff the characteristic polynomial is squarefree, i.e. the eigenvalues
/// (over an algebraic closure) are pairwise distinct.
pub fn has_distinct_eigenvalues(m: &RatMatrix) -> Result<bool> {
    let f = charpoly(m)?;
    Ok(f.gcd(&f.derivative()).is_constant())
}

/// Eigenvalues with algebraic multiplicity, ascending. Fails with
/// `NonRationalSpectrum` unless the characteristic polynomial splits over Q.
pub fn rational_spectrum(m: &RatMatrix) -> Result<Vec<(Rational, usize)>> {
    let f = charpoly(m)?;
    let roots = rational_roots(&f);
    let mut out = Vec::new();
    let mut total = 0;
    for r in roots {
        let lin = UniPoly::linear_root(&r);
        let mut rest = f.clone();
        let mut mult = 0;
        while let Ok(q) = rest.exact_div(&lin) {
            rest = q;
            mult += 1;
        }
        total += mult;
        out.push((r, mult));
    }
    if total != m.rows() {
        return Err(Error::NonRationalSpectrum);
    }
    Ok(out)
}

/// Distinct rational roots of `f`, ascending.
pub fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    if f.is_constant() {
        return Vec::new();
    }
    let g = primitive_integer(&f.squarefree_part());
    let chain = sturm_chain(&g);
    let lead = g.leading().abs();
    let width = (&lead * &lead * Rational::from_integer(2.into())).recip();
    let bound = cauchy_bound(&g);
    let mut roots = Vec::new();
    isolate(&g, &chain, -bound.clone(), bound, &width, &mut roots);
    roots.sort();
    roots
}

fn primitive_integer(f: &UniPoly) -> UniPoly {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    UniPoly::new(
        scaled
            .into_iter()
            .map(|c| Rational::from_integer(c / &content))
            .collect(),
    )
}

fn cauchy_bound(f: &UniPoly) -> Rational {
    let lead = f.leading().abs();
    let max = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

fn sturm_chain(f: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_variations(chain: &[UniPoly], t: &Rational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| {
            let v = p.eval(t);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Collects the rational roots of squarefree `g` in the open interval `(lo, hi)`;
/// `g(lo)` and `g(hi)` are nonzero.
fn isolate(
    g: &UniPoly,
    chain: &[UniPoly],
    lo: Rational,
    hi: Rational,
    width: &Rational,
    out: &mut Vec<Rational>,
) {
    let count = sign_variations(chain, &lo) - sign_variations(chain, &hi);
    if count == 0 {
        return;
    }
    if count == 1 && &(&hi - &lo) < width {
        let candidate = simplest_between(&lo, Some(&hi));
        if g.eval(&candidate).is_zero() {
            out.push(candidate);
        }
        return;
    }
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    if g.eval(&mid).is_zero() {
        out.push(mid.clone());
        // Shrink a window around `mid` until it isolates that root alone.
        let mut delta = (&hi - &lo) / Rational::from_integer(4.into());
        loop {
            let a = &mid - &delta;
            let b = &mid + &delta;
            if !g.eval(&a).is_zero()
                && !g.eval(&b).is_zero()
                && sign_variations(chain, &a) - sign_variations(chain, &b) == 1
            {
                isolate(g, chain, lo, a, width, out);
                isolate(g, chain, b, hi, width, out);
                return;
            }
            delta /= Rational::from_integer(2.into());
        }
    }
    isolate(g, chain, lo, mid.clone(), width, out);
    isolate(g, chain, mid, hi, width, out);
}

/// Basis of `ker (M - z)^n`.
pub fn generalized_eigenspace(m: &RatMatrix, z: &Rational) -> Result<Vec<RatVector>> {
    let n = m.require_square()?;
    let shifted = m.sub(&RatMatrix::identity(n).scale(z));
    Ok(shifted.pow(n as u32).kernel())
}

/// Decomposition of `V` into generalized eigenspaces of `m` (ascending
/// eigenvalues) and the matching spectral projectors.
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<Rational>,
    pub multiplicities: Vec<usize>,
    pub bases: Vec<Vec<RatVector>>,
    pub projectors: Vec<RatMatrix>,
}

pub fn spectral_decomposition(m: &RatMatrix) -> Result<SpectralDecomposition> {
    let n = m.require_square()?;
    let spectrum = rational_spectrum(m)?;
    let mut bases = Vec::new();
    for (z, mult) in &spectrum {
        let b = generalized_eigenspace(m, z)?;
        if b.len() != *mult {
            return Err(Error::InternalInconsistency(format!(
                "generalized eigenspace of dimension {} for multiplicity {mult}",
                b.len()
            )));
        }
        bases.push(b);
    }
    let all: Vec<RatVector> = bases.iter().flatten().cloned().collect();
    let p = RatMatrix::from_columns(&all)?;
    let p_inv = p
        .inverse()
        .ok_or_else(|| Error::InternalInconsistency("eigenspaces do not span".into()))?;
    let mut projectors = Vec::new();
    let mut offset = 0;
    for b in &bases {
        let mut sel = RatMatrix::zeros(n, n);
        for k in offset..offset + b.len() {
            sel[(k, k)] = Rational::one();
        }
        offset += b.len();
        projectors.push(p.mul(&sel).mul(&p_inv));
    }
    Ok(SpectralDecomposition {
        eigenvalues: spectrum.iter().map(|(z, _)| z.clone()).collect(),
        multiplicities: spectrum.iter().map(|(_, m)| *m).collect(),
        bases,
        projectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn charpoly_examples() {
        let d = RatMatrix::diag(&[int(0), int(1)]);
        assert_eq!(charpoly(&d).unwrap(), up(&[0, -1, 1]));
        let j = RatMatrix::from_i64(&[&[3, 1], &[0, 3]]);
        assert_eq!(charpoly(&j).unwrap(), up(&[-3, 1]).pow(2));
        let rot = RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(charpoly(&rot).unwrap(), up(&[1, 0, 1]));
        assert!(charpoly(&RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let d = RatMatrix::diag(&[int(1), int(1), int(5)]);
        assert_eq!(
            rational_spectrum(&d).unwrap(),
            vec![(int(1), 2), (int(5), 1)]
        );
        let rot = RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(rational_spectrum(&rot), Err(Error::NonRationalSpectrum));
        // companion of (t-2)(t-3) = t^2 - 5t + 6
        let comp = RatMatrix::from_i64(&[&[0, -6], &[1, 5]]);
        assert_eq!(
            rational_spectrum(&comp).unwrap(),
            vec![(int(2), 1), (int(3), 1)]
        );
        // t^2 - 2 has real but irrational roots
        let sqrt2 = RatMatrix::from_i64(&[&[0, 2], &[1, 0]]);
        assert_eq!(rational_spectrum(&sqrt2), Err(Error::NonRationalSpectrum));
        let frac = RatMatrix::diag(&[rat(-7, 3), rat(1, 12), rat(1, 12), int(0)]);
        assert_eq!(
            rational_spectrum(&frac).unwrap(),
            vec![(rat(-7, 3), 1), (int(0), 1), (rat(1, 12), 2)]
        );
    }

    #[test]
    fn distinct_eigenvalue_examples() {
        assert!(has_distinct_eigenvalues(&RatMatrix::diag(&[int(0), int(1), int(2)])).unwrap());
        assert!(!has_distinct_eigenvalues(&RatMatrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(has_distinct_eigenvalues(&RatMatrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap());
    }

    #[test]
    fn projectors_are_idempotent_and_sum_to_identity() {
        let m = RatMatrix::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[1, 0, 5]]);
        let sd = spectral_decomposition(&m).unwrap();
        let mut sum = RatMatrix::zeros(3, 3);
        for p in &sd.projectors {
            assert_eq!(p.mul(p), *p);
            assert_eq!(p.mul(&m), m.mul(p));
            sum = sum.add(p);
        }
        assert_eq!(sum, RatMatrix::identity(3));
        assert_eq!(sd.multiplicities, vec![2, 1]);
    }
}
