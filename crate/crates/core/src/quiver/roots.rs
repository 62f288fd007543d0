use serde::{Deserialize, Serialize};

use super::forms::{symmetric, DimVector, Quiver, Weight};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Real,
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub vector: DimVector,
    pub kind: RootKind,
}

fn support_connected(q: &Quiver, a: &DimVector) -> bool {
    let supp = a.support();
    let Some(&start) = supp.first() else {
        return false;
    };
    let mut seen = vec![false; q.vertices];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &[t, h] in &q.edges {
            for (from, to) in [(t, h), (h, t)] {
                if from == u && a.0[to] > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
    }
    supp.iter().all(|&v| seen[v])
}

/// Whether `a` is a positive root, and of which kind. Reflects at loop-free
/// vertices `i` with `(α, ε_i) > 0` until reaching a loop-free simple root
/// (real) or the fundamental region: connected support and `(α, ε_i) <= 0`
/// at every loop-free vertex (imaginary).
pub fn classify_root(q: &Quiver, a: &DimVector) -> Result<Option<RootKind>> {
    let mut alpha = a.clone();
    let n = q.vertices;
    let loop_free: Vec<usize> = (0..n).filter(|&v| q.loops_at(v) == 0).collect();
    loop {
        if alpha.is_zero() {
            return Ok(None);
        }
        if alpha.total() == 1 {
            let v = alpha.support()[0];
            return Ok(Some(if q.loops_at(v) == 0 {
                RootKind::Real
            } else {
                RootKind::Imaginary
            }));
        }
        if !support_connected(q, &alpha) {
            return Ok(None);
        }
        let mut reflected = false;
        for &v in &loop_free {
            let pairing = symmetric(q, &alpha, &DimVector::unit(n, v))?;
            if pairing > 0 {
                let new = alpha.0[v] as i64 - pairing;
                if new < 0 {
                    return Ok(None);
                }
                alpha.0[v] = new as u32;
                reflected = true;
                break;
            }
        }
        if !reflected {
            return Ok(Some(RootKind::Imaginary));
        }
    }
}

fn boxed(bound: &DimVector) -> Vec<DimVector> {
    let mut out = vec![DimVector(Vec::new())];
    for &b in &bound.0 {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |c| {
                    let mut w = v.0.clone();
                    w.push(c);
                    DimVector(w)
                })
            })
            .collect();
    }
    out
}

/// Positive roots `α <= bound`, ordered by total size then lexicographically.
pub fn positive_roots(q: &Quiver, bound: &DimVector) -> Result<Vec<Root>> {
    let mut out = Vec::new();
    for v in boxed(bound) {
        if v.is_zero() {
            continue;
        }
        if let Some(kind) = classify_root(q, &v)? {
            out.push(Root { vector: v, kind });
        }
    }
    out.sort_by(|a, b| (a.vector.total(), &a.vector).cmp(&(b.vector.total(), &b.vector)));
    Ok(out)
}

/// Positive roots `α <= bound` with `λ·α = 0`.
pub fn r_lambda(q: &Quiver, lambda: &Weight, bound: &DimVector) -> Result<Vec<Root>> {
    Ok(positive_roots(q, bound)?
        .into_iter()
        .filter(|r| num_traits::Zero::is_zero(&lambda.dot(&r.vector)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn dv(xs: &[u32]) -> DimVector {
        DimVector(xs.to_vec())
    }

    fn vectors(rs: &[Root]) -> Vec<DimVector> {
        rs.iter().map(|r| r.vector.clone()).collect()
    }

    #[test]
    fn a2_roots() {
        let q = Quiver::new(2, vec![[0, 1]]).unwrap();
        let rs = positive_roots(&q, &dv(&[1, 1])).unwrap();
        assert_eq!(vectors(&rs), vec![dv(&[0, 1]), dv(&[1, 0]), dv(&[1, 1])]);
        assert!(rs.iter().all(|r| r.kind == RootKind::Real));
        let rs = positive_roots(&q, &dv(&[2, 2])).unwrap();
        assert_eq!(rs.len(), 3);
    }

    #[test]
    fn framed_jordan_roots() {
        let q = Quiver::new(2, vec![[0, 0], [1, 0]]).unwrap();
        let rs = positive_roots(&q, &dv(&[2, 1])).unwrap();
        let vs = vectors(&rs);
        for want in [[1, 0], [2, 0], [0, 1], [1, 1], [2, 1]] {
            assert!(vs.contains(&dv(&want)), "missing {want:?}");
        }
        assert_eq!(
            classify_root(&q, &dv(&[0, 1])).unwrap(),
            Some(RootKind::Real)
        );
        assert_eq!(
            classify_root(&q, &dv(&[1, 1])).unwrap(),
            Some(RootKind::Imaginary)
        );
        assert_eq!(
            classify_root(&q, &dv(&[2, 1])).unwrap(),
            Some(RootKind::Imaginary)
        );
        assert_eq!(classify_root(&q, &dv(&[0, 2])).unwrap(), None);
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::new(1, vec![]).unwrap();
        assert_eq!(
            vectors(&positive_roots(&q, &dv(&[3])).unwrap()),
            vec![dv(&[1])]
        );
    }

    #[test]
    fn affine_a1_roots() {
        let q = Quiver::new(2, vec![[0, 1], [1, 0]]).unwrap();
        assert_eq!(
            classify_root(&q, &dv(&[1, 1])).unwrap(),
            Some(RootKind::Imaginary)
        );
        assert_eq!(
            classify_root(&q, &dv(&[2, 1])).unwrap(),
            Some(RootKind::Real)
        );
        assert_eq!(classify_root(&q, &dv(&[3, 1])).unwrap(), None);
    }

    #[test]
    fn weight_filter() {
        let q = Quiver::new(2, vec![[0, 1]]).unwrap();
        let bound = dv(&[1, 1]);
        assert_eq!(r_lambda(&q, &Weight::zero(2), &bound).unwrap().len(), 3);
        let generic = Weight(vec![int(1), int(3)]);
        assert!(r_lambda(&q, &generic, &bound).unwrap().is_empty());
        let w = Weight(vec![int(1), int(-1)]);
        assert_eq!(
            vectors(&r_lambda(&q, &w, &bound).unwrap()),
            vec![dv(&[1, 1])]
        );
    }
}
