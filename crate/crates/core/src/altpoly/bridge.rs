use serde::{Deserialize, Serialize};

use super::echelon::PolyEchelon;
use super::labels::{alternant, bidegree, WedgeLabel};
use super::products::ak_basis;
use crate::acv::{epsilon, psi};
use crate::error::{Error, Result};
use crate::matrix::RatVector;
use crate::poly::MPoly;
use crate::rational::Rational;

/// Outcome of comparing `ψ` on `ε(x, y)` with alternants evaluated at `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    pub n: usize,
    pub labels: Vec<WedgeLabel>,
    #[serde(with = "crate::serial::rational_vec")]
    pub psi_values: Vec<Rational>,
    #[serde(with = "crate::serial::rational_vec")]
    pub alternant_values: Vec<Rational>,
    pub pointwise_equal: bool,
    /// The product of the alternants lies in the span of `A^k` at its bidegree.
    pub product_in_span: bool,
}

impl BridgeReport {
    pub fn holds(&self) -> bool {
        self.pointwise_equal && self.product_in_span
    }
}

/// For each label, `ψ` at `ε(x, y)` with `f_t = x^{p_t} y^{q_t}` against the
/// alternant at `(x, y)`; the product over all `k` labels is checked for
/// membership in `A^k`.
pub fn restriction_bridge(
    labels: &[WedgeLabel],
    x: &RatVector,
    y: &RatVector,
) -> Result<BridgeReport> {
    let n = x.len();
    if labels.is_empty() {
        return Err(Error::InvalidInput("need at least one label".into()));
    }
    if labels.iter().any(|l| l.n() != n) || y.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "labels and point must have size {n}"
        )));
    }
    let point: Vec<Rational> = x.iter().chain(y.iter()).cloned().collect();
    let q = epsilon(x, y)?;
    let mut psi_values = Vec::new();
    let mut alternant_values = Vec::new();
    let mut product: Option<MPoly> = None;
    for l in labels {
        psi_values.push(psi(&l.monomials(), &q)?);
        let a = alternant(l);
        alternant_values.push(a.eval(&point));
        product = Some(match product {
            None => a,
            Some(p) => p.mul(&a),
        });
    }
    let product = product.expect("nonempty labels");
    let d = bidegree(&product).unwrap_or((0, 0));
    let basis = ak_basis(n, labels.len(), d)?;
    let mut span = PolyEchelon::new();
    for f in basis.piece(d) {
        span.insert(f);
    }
    Ok(BridgeReport {
        n,
        labels: labels.to_vec(),
        pointwise_equal: psi_values == alternant_values,
        product_in_span: span.contains(&product),
        psi_values,
        alternant_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn iv(v: &[i64]) -> RatVector {
        RatVector(v.iter().map(|&a| int(a)).collect())
    }

    #[test]
    fn two_variable_bridges() {
        let (x, y) = (iv(&[3, -1]), iv(&[2, 7]));
        let r =
            restriction_bridge(&[WedgeLabel::new(vec![(0, 0), (1, 0)]).unwrap()], &x, &y).unwrap();
        assert!(r.holds());
        assert_eq!(r.psi_values, vec![int(4)]);
        let r =
            restriction_bridge(&[WedgeLabel::new(vec![(0, 0), (0, 1)]).unwrap()], &x, &y).unwrap();
        assert_eq!(r.psi_values, vec![int(-5)]);
        let two = [
            WedgeLabel::new(vec![(0, 0), (1, 0)]).unwrap(),
            WedgeLabel::new(vec![(1, 0), (0, 1)]).unwrap(),
        ];
        assert!(restriction_bridge(&two, &x, &y).unwrap().holds());
    }
}
