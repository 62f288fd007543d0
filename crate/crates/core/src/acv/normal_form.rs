use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::quadruple::Quadruple;
use crate::error::{Error, Result};
use crate::matrix::{RatMatrix, RatVector};
use crate::rational::Rational;

/// Coordinates of a generic normal form: `Y = diag(y)`, `X` with diagonal `x`,
/// `j` supported on the first `k_prime` coordinates, `i` on the last `n - k_double_prime`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormParams {
    #[serde(with = "crate::serial::rational_vec")]
    pub y: Vec<Rational>,
    #[serde(with = "crate::serial::rational_vec")]
    pub x: Vec<Rational>,
    pub k_prime: usize,
    pub k_double_prime: usize,
}

impl NormalFormParams {
    pub fn new(
        y: Vec<Rational>,
        x: Vec<Rational>,
        k_prime: usize,
        k_double_prime: usize,
    ) -> Result<Self> {
        let p = NormalFormParams {
            y,
            x,
            k_prime,
            k_double_prime,
        };
        p.validate()?;
        Ok(p)
    }

    /// The `M'_k` representative: `k' = k'' = k`.
    pub fn component(y: Vec<Rational>, x: Vec<Rational>, k: usize) -> Result<Self> {
        Self::new(y, x, k, k)
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.x.len() != n {
            return Err(Error::DimensionMismatch("x and y lengths differ".into()));
        }
        if !(self.k_prime <= self.k_double_prime && self.k_double_prime <= n) {
            return Err(Error::InvalidInput(format!(
                "need 0 <= k' <= k'' <= n, got k'={}, k''={}, n={n}",
                self.k_prime, self.k_double_prime
            )));
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.y[a] == self.y[b] {
                    return Err(Error::InvalidInput(format!(
                        "repeated y value at positions {} and {}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Builds the normal-form quadruple; its moment map vanishes identically.
pub fn normal_form(p: &NormalFormParams) -> Result<Quadruple> {
    p.validate()?;
    let n = p.n();
    let (kp, kpp) = (p.k_prime, p.k_double_prime);
    let mut x = RatMatrix::diag(&p.x);
    for r in kpp..n {
        for s in 0..kp {
            x[(r, s)] = (&p.y[r] - &p.y[s]).recip();
        }
    }
    let i = RatVector(
        (0..n)
            .map(|r| {
                if r >= kpp {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    );
    let j = RatVector(
        (0..n)
            .map(|s| {
                if s < kp {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    );
    Quadruple::new(x, RatMatrix::diag(&p.y), i, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acv::{co_cyclic_subspace, cyclic_subspace};
    use crate::rational::{int, rat};

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn two_by_two_example() {
        let (a, b) = (rat(3, 7), int(-2));
        let p = NormalFormParams::component(ints(&[0, 1]), vec![a.clone(), b.clone()], 1).unwrap();
        let q = normal_form(&p).unwrap();
        let expect_x = RatMatrix::from_rows(vec![vec![a, int(0)], vec![int(1), b]]).unwrap();
        assert_eq!(q.x, expect_x);
        assert_eq!(q.i, RatVector(ints(&[0, 1])));
        assert_eq!(q.j, RatVector(ints(&[1, 0])));
        assert!(q.moment_map().is_zero());
        assert_eq!(cyclic_subspace(&q.x, &q.y, &q.i).len(), 1);
        assert_eq!(co_cyclic_subspace(&q.j, &q.x, &q.y).len(), 1);
    }

    #[test]
    fn extreme_k() {
        let y = ints(&[1, 2, 3]);
        let x = ints(&[4, 5, 6]);
        let q0 =
            normal_form(&NormalFormParams::component(y.clone(), x.clone(), 0).unwrap()).unwrap();
        assert!(q0.j.is_zero());
        assert_eq!(q0.i, RatVector(ints(&[1, 1, 1])));
        assert_eq!(q0.x, RatMatrix::diag(&x));
        let q3 = normal_form(&NormalFormParams::component(y, x.clone(), 3).unwrap()).unwrap();
        assert!(q3.i.is_zero());
        assert_eq!(q3.j, RatVector(ints(&[1, 1, 1])));
        assert_eq!(q3.x, RatMatrix::diag(&x));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(NormalFormParams::component(ints(&[1, 1]), ints(&[0, 0]), 1).is_err());
        assert!(NormalFormParams::new(ints(&[1, 2]), ints(&[0, 0]), 2, 1).is_err());
        assert!(NormalFormParams::new(ints(&[1, 2]), ints(&[0, 0]), 0, 3).is_err());
    }
}
