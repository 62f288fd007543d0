use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::echelon::PolyEchelon;
use super::labels::{a_basis, alternant, Bidegree};
use crate::error::{Error, Result};
use crate::poly::MPoly;

/// Largest `dx + dy` accepted for a bound.
pub const MAX_TOTAL_DEGREE: u32 = 16;

/// Basis of `A^k` in each bidegree `<=` the bound (componentwise).
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub n: usize,
    pub k: usize,
    pub bound: Bidegree,
    pub pieces: BTreeMap<Bidegree, Vec<MPoly>>,
}

impl GradedBasis {
    pub fn piece(&self, d: Bidegree) -> &[MPoly] {
        self.pieces.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self, d: Bidegree) -> usize {
        self.piece(d).len()
    }
}

pub(crate) fn bidegrees_upto(bound: Bidegree) -> Vec<Bidegree> {
    let mut out: Vec<Bidegree> = (0..=bound.0)
        .flat_map(|a| (0..=bound.1).map(move |b| (a, b)))
        .collect();
    out.sort_by_key(|&(a, b)| (a + b, a));
    out
}

pub(crate) fn check_bound(bound: Bidegree) -> Result<()> {
    if bound.0 + bound.1 > MAX_TOTAL_DEGREE {
        return Err(Error::BoundExceeded(format!(
            "bidegree bound {bound:?} exceeds total degree {MAX_TOTAL_DEGREE}"
        )));
    }
    Ok(())
}

/// `A^k_D` as the span of `b a` with `b` in `A^{k-1}_{D1}` and `a` in `A_{D - D1}`.
pub fn ak_basis(n: usize, k: usize, bound: Bidegree) -> Result<GradedBasis> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    check_bound(bound)?;
    let degrees = bidegrees_upto(bound);
    let a1: BTreeMap<Bidegree, Vec<MPoly>> = degrees
        .iter()
        .map(|&d| (d, a_basis(n, d).iter().map(alternant).collect()))
        .collect();
    let mut current = a1.clone();
    for _ in 1..k {
        let mut next = BTreeMap::new();
        for &d in &degrees {
            let mut span = PolyEchelon::new();
            for (&d1, prev) in &current {
                if d1.0 > d.0 || d1.1 > d.1 || prev.is_empty() {
                    continue;
                }
                let Some(gens) = a1.get(&(d.0 - d1.0, d.1 - d1.1)) else {
                    continue;
                };
                for b in prev {
                    for a in gens {
                        span.insert(&b.mul(a));
                    }
                }
            }
            next.insert(d, span.basis().to_vec());
        }
        current = next;
    }
    Ok(GradedBasis {
        n,
        k,
        bound,
        pieces: current,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertEntry {
    pub x_degree: u32,
    pub y_degree: u32,
    pub dim: usize,
}

/// `dim A^k_D` for every `D <= bound`, ordered by `(dx, dy)`.
pub fn hilbert_series(n: usize, k: usize, bound: Bidegree) -> Result<Vec<HilbertEntry>> {
    let basis = ak_basis(n, k, bound)?;
    Ok(basis
        .pieces
        .iter()
        .map(|(&(a, b), v)| HilbertEntry {
            x_degree: a,
            y_degree: b,
            dim: v.len(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(a: u64, b: u64) -> u64 {
        (1..=b).fold(1, |acc, k| acc * (a - b + k) / k)
    }

    #[test]
    fn k1_matches_labels() {
        let g = ak_basis(2, 1, (3, 2)).unwrap();
        for (&d, v) in &g.pieces {
            assert_eq!(v.len(), a_basis(2, d).len());
        }
    }

    #[test]
    fn n1_is_polynomial_ring() {
        for k in 1..=3 {
            for e in hilbert_series(1, k, (3, 3)).unwrap() {
                assert_eq!(e.dim, 1, "{e:?}");
            }
        }
        // Summed over a total degree this is the binomial count of C[x,y].
        let total: usize = hilbert_series(1, 1, (4, 4))
            .unwrap()
            .iter()
            .filter(|e| e.x_degree + e.y_degree == 4)
            .map(|e| e.dim)
            .sum();
        assert_eq!(total as u64, binom(5, 1));
    }

    #[test]
    fn n2_pure_x_dims() {
        // Vandermonde times symmetric polynomials of degree d - 1.
        let h = hilbert_series(2, 1, (6, 0)).unwrap();
        let dims: Vec<usize> = h.iter().map(|e| e.dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn products_land_in_higher_powers() {
        let a2 = ak_basis(2, 2, (2, 2)).unwrap();
        let a1 = ak_basis(2, 1, (2, 2)).unwrap();
        let a3 = ak_basis(2, 3, (3, 3)).unwrap();
        let mut span = PolyEchelon::new();
        for f in a3.piece((3, 1)) {
            span.insert(f);
        }
        for f in a2.piece((2, 1)) {
            for g in a1.piece((1, 0)) {
                assert!(span.contains(&f.mul(g)));
            }
        }
        assert!(matches!(
            ak_basis(2, 1, (10, 10)),
            Err(Error::BoundExceeded(_))
        ));
    }
}
