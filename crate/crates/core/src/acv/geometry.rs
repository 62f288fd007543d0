use num_traits::{One, Zero};

use super::normal_form::{normal_form, NormalFormParams};
use super::quadruple::Quadruple;
use crate::error::Result;
use crate::matrix::{RatMatrix, RatVector};
use crate::rational::Rational;

fn flatten(dx: &RatMatrix, dy: &RatMatrix, di: &RatVector, dj: &RatVector) -> RatVector {
    let mut v = dx.entries().to_vec();
    v.extend_from_slice(dy.entries());
    v.extend(di.iter().cloned());
    v.extend(dj.iter().cloned());
    RatVector(v)
}

/// Infinitesimal action of `A` in `gl_n` at `q`: `([A,X], [A,Y], A i, -j A)`.
fn infinitesimal(q: &Quadruple, a: &RatMatrix) -> RatVector {
    flatten(
        &RatMatrix::commutator(a, &q.x),
        &RatMatrix::commutator(a, &q.y),
        &a.mul_vec(&q.i),
        &RatMatrix::vec_mul(&q.j, a).scale(&-Rational::one()),
    )
}

fn unit_matrix(n: usize, a: usize, b: usize) -> RatMatrix {
    let mut e = RatMatrix::zeros(n, n);
    e[(a, b)] = Rational::one();
    e
}

/// `dim {A : [A,X] = 0, [A,Y] = 0, A i = 0, j A = 0}`
pub fn stabilizer_dim(q: &Quadruple) -> Result<usize> {
    q.validate()?;
    let n = q.n;
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            cols.push(infinitesimal(q, &unit_matrix(n, a, b)));
        }
    }
    if cols.is_empty() {
        return Ok(0);
    }
    Ok(n * n - RatMatrix::from_columns(&cols)?.rank())
}

/// Rank at `g = 1` of the differential of `(g, x, y) -> g . normal_form(y, x, k', k'')`.
pub fn orbit_jacobian_rank(p: &NormalFormParams) -> Result<usize> {
    let q = normal_form(p)?;
    let n = q.n;
    let (kp, kpp) = (p.k_prime, p.k_double_prime);
    let zero_m = RatMatrix::zeros(n, n);
    let zero_v = RatVector::zeros(n);
    let mut cols = Vec::with_capacity(n * n + 2 * n);
    for a in 0..n {
        for b in 0..n {
            cols.push(infinitesimal(&q, &unit_matrix(n, a, b)));
        }
    }
    for r in 0..n {
        cols.push(flatten(&unit_matrix(n, r, r), &zero_m, &zero_v, &zero_v));
    }
    // X_{rs} = 1/(y_r - y_s) for r >= k'', s < k' depends on y.
    for t in 0..n {
        let mut dx = RatMatrix::zeros(n, n);
        for r in kpp..n {
            for s in 0..kp {
                let d = &p.y[r] - &p.y[s];
                let sq = (&d * &d).recip();
                if t == r {
                    dx[(r, s)] = -sq;
                } else if t == s {
                    dx[(r, s)] = sq;
                }
            }
        }
        cols.push(flatten(&dx, &unit_matrix(n, t, t), &zero_v, &zero_v));
    }
    if cols.iter().all(|c| c.iter().all(Zero::is_zero)) {
        return Ok(0);
    }
    Ok(RatMatrix::from_columns(&cols)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn free_action_and_full_rank() {
        for n in 1..=3usize {
            for k in 0..=n {
                let y: Vec<_> = (0..n).map(|r| int(r as i64 * 2 - 1)).collect();
                let x: Vec<_> = (0..n).map(|r| rat(r as i64 + 3, 2)).collect();
                let p = NormalFormParams::component(y, x, k).unwrap();
                let q = normal_form(&p).unwrap();
                assert_eq!(stabilizer_dim(&q).unwrap(), 0, "n={n} k={k}");
                assert_eq!(
                    orbit_jacobian_rank(&p).unwrap(),
                    n * n + 2 * n,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn zero_point_has_full_stabilizer() {
        assert_eq!(stabilizer_dim(&Quadruple::zero(2)).unwrap(), 4);
    }
}
