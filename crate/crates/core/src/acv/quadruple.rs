use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{RatMatrix, RatVector};
use crate::span::closure;

/// A point `(X, Y, i, j)` of `gl_n x gl_n x V x V*`; `i` is a column, `j` a row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quadruple {
    pub n: usize,
    #[serde(rename = "X")]
    pub x: RatMatrix,
    #[serde(rename = "Y")]
    pub y: RatMatrix,
    pub i: RatVector,
    pub j: RatVector,
}

impl Quadruple {
    pub fn new(x: RatMatrix, y: RatMatrix, i: RatVector, j: RatVector) -> Result<Self> {
        let n = x.rows();
        let q = Quadruple { n, x, y, i, j };
        q.validate()?;
        Ok(q)
    }

    pub fn zero(n: usize) -> Self {
        Quadruple {
            n,
            x: RatMatrix::zeros(n, n),
            y: RatMatrix::zeros(n, n),
            i: RatVector::zeros(n),
            j: RatVector::zeros(n),
        }
    }

    /// Checks that all shapes agree with `n` (used after deserialization too).
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let ok = self.x.rows() == n
            && self.x.cols() == n
            && self.y.rows() == n
            && self.y.cols() == n
            && self.i.len() == n
            && self.j.len() == n;
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "quadruple shapes do not match n = {n}"
            )))
        }
    }

    /// `g . (X, Y, i, j) = (g X g^-1, g Y g^-1, g i, j g^-1)`.
    pub fn conjugate(&self, g: &RatMatrix, g_inv: &RatMatrix) -> Quadruple {
        Quadruple {
            n: self.n,
            x: self.x.conjugate_by(g, g_inv),
            y: self.y.conjugate_by(g, g_inv),
            i: g.mul_vec(&self.i),
            j: RatMatrix::vec_mul(&self.j, g_inv),
        }
    }

    pub fn moment_map(&self) -> RatMatrix {
        moment_map(self)
    }

    pub fn on_variety(&self) -> bool {
        moment_map(self).is_zero()
    }
}

/// `[X,Y] + i j`
pub fn moment_map(q: &Quadruple) -> RatMatrix {
    RatMatrix::commutator(&q.x, &q.y).add(&RatMatrix::outer(&q.i, &q.j))
}

/// Basis of `C[X,Y] i`, the smallest `X`- and `Y`-stable subspace containing `i`.
pub fn cyclic_subspace(x: &RatMatrix, y: &RatMatrix, i: &RatVector) -> Vec<RatVector> {
    let ax = |v: &RatVector| x.mul_vec(v);
    let ay = |v: &RatVector| y.mul_vec(v);
    closure(i.len(), std::slice::from_ref(i), &[&ax, &ay])
        .basis()
        .to_vec()
}

/// Basis of `j C[X,Y]`, the right-module analogue acting on row vectors.
pub fn co_cyclic_subspace(j: &RatVector, x: &RatMatrix, y: &RatMatrix) -> Vec<RatVector> {
    let ax = |v: &RatVector| RatMatrix::vec_mul(v, x);
    let ay = |v: &RatVector| RatMatrix::vec_mul(v, y);
    closure(j.len(), std::slice::from_ref(j), &[&ax, &ay])
        .basis()
        .to_vec()
}

/// Whether `j` kills all of `C[X,Y] i`. Only meaningful on the variety.
pub fn pairing_vanishes(q: &Quadruple) -> Result<bool> {
    if !q.on_variety() {
        return Err(Error::NotOnVariety);
    }
    Ok(cyclic_subspace(&q.x, &q.y, &q.i)
        .iter()
        .all(|v| q.j.dot(v).is_zero()))
}

/// On the variety and `Y` nilpotent.
pub fn is_nil_point(q: &Quadruple) -> bool {
    q.on_variety() && q.y.pow(q.n as u32).is_zero()
}

/// `(diag x, diag y, (1,..,1), 0)`
pub fn epsilon(x: &RatVector, y: &RatVector) -> Result<Quadruple> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch("x and y lengths differ".into()));
    }
    let n = x.len();
    Ok(Quadruple {
        n,
        x: RatMatrix::diag(&x.0),
        y: RatMatrix::diag(&y.0),
        i: RatVector(vec![One::one(); n]),
        j: RatVector::zeros(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn iv(xs: &[i64]) -> RatVector {
        RatVector(xs.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn moment_map_examples() {
        assert!(moment_map(&Quadruple::zero(3)).is_zero());
        let q = epsilon(&iv(&[1, 2, 3]), &iv(&[4, -1, 0])).unwrap();
        assert!(moment_map(&q).is_zero());
    }

    #[test]
    fn cyclic_subspace_examples() {
        let z = RatMatrix::zeros(3, 3);
        assert_eq!(cyclic_subspace(&z, &z, &iv(&[0, 1, 0])).len(), 1);
        let q = epsilon(&iv(&[5, 5, 5]), &iv(&[0, 1, 2])).unwrap();
        assert_eq!(cyclic_subspace(&q.x, &q.y, &q.i).len(), 3);
        assert_eq!(co_cyclic_subspace(&iv(&[0, 0, 0]), &z, &z).len(), 0);
        assert_eq!(co_cyclic_subspace(&iv(&[1, 0, 0]), &z, &z).len(), 1);
    }

    #[test]
    fn nil_points() {
        let shift = RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let q = Quadruple::new(
            RatMatrix::zeros(3, 3),
            shift,
            iv(&[0, 0, 0]),
            iv(&[0, 0, 0]),
        )
        .unwrap();
        assert!(is_nil_point(&q));
        let e = epsilon(&iv(&[0, 0]), &iv(&[1, 2])).unwrap();
        assert!(!is_nil_point(&e));
        let off = Quadruple::new(
            RatMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            RatMatrix::from_i64(&[&[0, 0], &[1, 0]]),
            iv(&[0, 0]),
            iv(&[0, 0]),
        )
        .unwrap();
        assert!(!is_nil_point(&off));
    }

    #[test]
    fn pairing_requires_variety() {
        let off = Quadruple::new(
            RatMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            RatMatrix::from_i64(&[&[0, 0], &[1, 0]]),
            iv(&[1, 0]),
            iv(&[1, 0]),
        )
        .unwrap();
        assert_eq!(pairing_vanishes(&off), Err(Error::NotOnVariety));
        let e = epsilon(&iv(&[1, 2]), &iv(&[3, 4])).unwrap();
        assert!(pairing_vanishes(&e).unwrap());
    }
}
