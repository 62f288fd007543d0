use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{RatMatrix, RatVector};
use crate::poly::{var_names, MPoly};
use crate::rational::Rational;
use crate::spectrum::spectral_decomposition;

/// Upper Jordan block `z I + N` with `N e_{s+1} = e_s`.
pub fn jordan_block(z: &Rational, n: usize) -> RatMatrix {
    let mut m = RatMatrix::diag(&vec![z.clone(); n]);
    for r in 0..n.saturating_sub(1) {
        m[(r, r + 1)] = Rational::one();
    }
    m
}

/// Solves `[X,Y] + ij = 0` for the single Jordan block `X = J_n(z)`, with
/// `i` the first `m` unit vectors summed and `j` vanishing on them, given
/// the first row of `Y`. The result is upper triangular with diagonal
/// `Y11` on rows `1..=m` and `Y11 - j_{m+1}` below when `0 < m`.
pub fn jordan_block_solve(
    _z: &Rational,
    n: usize,
    m: usize,
    j: &RatVector,
    first_row: &RatVector,
) -> Result<RatMatrix> {
    if m > n || j.len() != n || first_row.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "need m <= n = {n} and j, first row of length n"
        )));
    }
    if j.iter().take(m).any(|v| !v.is_zero()) {
        return Err(Error::InvalidInput(
            "j must vanish on the first m coordinates".into(),
        ));
    }
    // The recursion only involves i_{r-1} j_s, independent of z.
    let i_at = |r: usize| {
        if r < m {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    let mut y = RatMatrix::zeros(n, n);
    for s in 0..n {
        y[(0, s)] = first_row[s].clone();
    }
    for r in 1..n {
        for s in 0..n {
            let prev = if s == 0 {
                Rational::zero()
            } else {
                y[(r - 1, s - 1)].clone()
            };
            y[(r, s)] = prev - i_at(r - 1) * &j[s];
        }
    }
    Ok(y)
}

/// `dim { A : [A, X] = 0 }`
pub fn centralizer_dim(x: &RatMatrix) -> Result<usize> {
    let n = x.require_square()?;
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = RatMatrix::zeros(n, n);
            e[(a, b)] = Rational::one();
            cols.push(RatVector(RatMatrix::commutator(&e, x).entries().to_vec()));
        }
    }
    let sys = RatMatrix::from_columns(&cols)?;
    Ok(n * n - sys.rank())
}

pub fn is_regular(x: &RatMatrix) -> Result<bool> {
    Ok(centralizer_dim(x)? == x.require_square()?)
}

/// One generalized eigenspace of `X`, with the nilpotency height of the
/// corresponding component of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    #[serde(with = "crate::serial::rational_str")]
    pub eigenvalue: Rational,
    pub size: usize,
    pub i_height: usize,
}

/// Coarse orbit label of a pair `(X, i)`. For regular `X` each block is a
/// single Jordan block and the label determines the orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumLabel {
    pub blocks: Vec<Block>,
    pub regular: bool,
    pub relevant: bool,
}

/// Relevance of `(X, i)`: `X` regular and every block component of `i` zero or cyclic.
pub fn is_relevant(x: &RatMatrix, i: &RatVector) -> Result<StratumLabel> {
    let n = x.require_square()?;
    if i.len() != n {
        return Err(Error::DimensionMismatch(
            "i length differs from X size".into(),
        ));
    }
    let dec = spectral_decomposition(x)?;
    let mut blocks = Vec::new();
    let mut regular = true;
    for (k, z) in dec.eigenvalues.iter().enumerate() {
        let shifted = x.sub(&RatMatrix::diag(&vec![z.clone(); n]));
        if n - shifted.rank() != 1 {
            regular = false;
        }
        let mut v = dec.projectors[k].mul_vec(i);
        let mut height = 0;
        while !v.is_zero() {
            v = shifted.mul_vec(&v);
            height += 1;
        }
        blocks.push(Block {
            eigenvalue: z.clone(),
            size: dec.multiplicities[k],
            i_height: height,
        });
    }
    let relevant = regular
        && blocks
            .iter()
            .all(|b| b.i_height == 0 || b.i_height == b.size);
    Ok(StratumLabel {
        blocks,
        regular,
        relevant,
    })
}

/// Linear family of solutions `(Y, j)` of `[X,Y] + ij = 0` with
/// `Tr(P Y) = 0` for every spectral projector `P` of `X`. Entries are linear
/// forms in `param_dim` parameters `t1..`.
#[derive(Clone, Debug)]
pub struct ConormalSpace {
    pub x: RatMatrix,
    pub i: RatVector,
    pub param_dim: usize,
    pub y_gen: Vec<Vec<MPoly>>,
    pub j_gen: Vec<MPoly>,
    basis: Vec<RatVector>,
}

impl ConormalSpace {
    pub fn n(&self) -> usize {
        self.i.len()
    }

    /// The member at parameter values `t`.
    pub fn member(&self, t: &[Rational]) -> Result<(RatMatrix, RatVector)> {
        if t.len() != self.param_dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} parameters, got {}",
                self.param_dim,
                t.len()
            )));
        }
        let n = self.n();
        let mut flat = RatVector::zeros(n * n + n);
        for (b, c) in self.basis.iter().zip(t) {
            flat = flat.add(&b.scale(c));
        }
        let y = RatMatrix::from_rows(
            (0..n)
                .map(|r| flat.0[r * n..(r + 1) * n].to_vec())
                .collect(),
        )?;
        Ok((y, RatVector(flat.0[n * n..].to_vec())))
    }

    /// Basis of the solution space, each vector listing `Y` row-major then `j`.
    pub fn basis(&self) -> &[RatVector] {
        &self.basis
    }
}

pub fn conormal_space(x: &RatMatrix, i: &RatVector) -> Result<ConormalSpace> {
    let n = x.require_square()?;
    if i.len() != n {
        return Err(Error::DimensionMismatch(
            "i length differs from X size".into(),
        ));
    }
    let dec = spectral_decomposition(x)?;
    let unknowns = n * n + n;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // [X,Y]_{rs} + i_r j_s = 0
    for r in 0..n {
        for s in 0..n {
            let mut row = vec![Rational::zero(); unknowns];
            for t in 0..n {
                row[t * n + s] += &x[(r, t)];
                row[r * n + t] -= &x[(t, s)];
            }
            row[n * n + s] += &i[r];
            rows.push(row);
        }
    }
    for p in &dec.projectors {
        let mut row = vec![Rational::zero(); unknowns];
        for a in 0..n {
            for b in 0..n {
                row[a * n + b] = p[(b, a)].clone();
            }
        }
        rows.push(row);
    }
    let basis = RatMatrix::from_rows(rows)?.kernel();
    let d = basis.len();
    let vars = var_names("t", d);
    let linear = |idx: usize| -> MPoly {
        let mut f = MPoly::zero(Arc::clone(&vars));
        for (l, b) in basis.iter().enumerate() {
            if !b[idx].is_zero() {
                f = f.add(&MPoly::var(Arc::clone(&vars), l).scale(&b[idx]));
            }
        }
        f
    };
    let y_gen = (0..n)
        .map(|r| (0..n).map(|s| linear(r * n + s)).collect())
        .collect();
    let j_gen = (0..n).map(|s| linear(n * n + s)).collect();
    Ok(ConormalSpace {
        x: x.clone(),
        i: i.clone(),
        param_dim: d,
        y_gen,
        j_gen,
        basis,
    })
}

fn poly_matmul(a: &[Vec<MPoly>], b: &[Vec<MPoly>]) -> Vec<Vec<MPoly>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|s| {
                    let mut acc = MPoly::zero(Arc::clone(a[r][s].vars()));
                    for (t, brow) in b.iter().enumerate() {
                        if !a[r][t].is_zero() && !brow[s].is_zero() {
                            acc = acc.add(&a[r][t].mul(&brow[s]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Whether every member `Y(t)` is nilpotent: `Tr Y(t)^m` vanishes identically for `m = 1..=n`.
pub fn all_y_nilpotent(space: &ConormalSpace) -> bool {
    let n = space.n();
    if n == 0 || space.param_dim == 0 {
        return true;
    }
    let mut power = space.y_gen.clone();
    for m in 1..=n {
        if m > 1 {
            power = poly_matmul(&power, &space.y_gen);
        }
        let mut tr = MPoly::zero(Arc::clone(space.y_gen[0][0].vars()));
        for (r, row) in power.iter().enumerate() {
            tr = tr.add(&row[r]);
        }
        if !tr.is_zero() {
            return false;
        }
    }
    true
}
