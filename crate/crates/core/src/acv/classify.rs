use serde::{Deserialize, Serialize};

use super::quadruple::{co_cyclic_subspace, cyclic_subspace, Quadruple};
use crate::error::{Error, Result};
use crate::spectrum::has_distinct_eigenvalues;

/// Component label of a point with regular semisimple `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericClass {
    /// Lies on `M'_k` with `k = dim jC[X,Y]`.
    Component { k: usize },
    /// `dim C[X,Y]i + dim jC[X,Y] < n`; `cyclic` and `cocyclic` are those dimensions.
    Degenerate { cyclic: usize, cocyclic: usize },
}

pub fn classify_generic(q: &Quadruple) -> Result<GenericClass> {
    q.validate()?;
    if !q.on_variety() {
        return Err(Error::NotOnVariety);
    }
    if !has_distinct_eigenvalues(&q.y)? {
        return Err(Error::NonGeneric);
    }
    let a = cyclic_subspace(&q.x, &q.y, &q.i).len();
    let b = co_cyclic_subspace(&q.j, &q.x, &q.y).len();
    match (a + b).cmp(&q.n) {
        std::cmp::Ordering::Equal => Ok(GenericClass::Component { k: b }),
        std::cmp::Ordering::Less => Ok(GenericClass::Degenerate {
            cyclic: a,
            cocyclic: b,
        }),
        std::cmp::Ordering::Greater => Err(Error::InternalInconsistency(format!(
            "cyclic ({a}) plus co-cyclic ({b}) dimensions exceed n = {} on the variety",
            q.n
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acv::{epsilon, normal_form, NormalFormParams};
    use crate::matrix::{RatMatrix, RatVector};
    use crate::rational::int;

    fn ints(xs: &[i64]) -> Vec<crate::rational::Rational> {
        xs.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn normal_forms_classify_to_their_k() {
        for k in 0..=3 {
            let p = NormalFormParams::component(ints(&[3, -1, 0]), ints(&[2, 2, 7]), k).unwrap();
            let q = normal_form(&p).unwrap();
            assert_eq!(classify_generic(&q).unwrap(), GenericClass::Component { k });
        }
    }

    #[test]
    fn degenerate_locus() {
        let p = NormalFormParams::new(ints(&[0, 1]), ints(&[4, 5]), 0, 1).unwrap();
        let q = normal_form(&p).unwrap();
        assert_eq!(
            classify_generic(&q).unwrap(),
            GenericClass::Degenerate {
                cyclic: 1,
                cocyclic: 0
            }
        );
    }

    #[test]
    fn epsilon_is_component_zero() {
        let q = epsilon(&RatVector(ints(&[1, 1, 1])), &RatVector(ints(&[0, 1, 2]))).unwrap();
        assert_eq!(
            classify_generic(&q).unwrap(),
            GenericClass::Component { k: 0 }
        );
    }

    #[test]
    fn refuses_repeated_spectrum() {
        let q = epsilon(&RatVector(ints(&[1, 2])), &RatVector(ints(&[5, 5]))).unwrap();
        assert_eq!(classify_generic(&q), Err(Error::NonGeneric));
        let mut off = q.clone();
        off.x = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        off.y = RatMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(classify_generic(&off), Err(Error::NotOnVariety));
    }
}
