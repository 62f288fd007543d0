use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::echelon::PolyEchelon;
use super::labels::{elementary_y, Bidegree};
use super::products::{ak_basis, bidegrees_upto};
use crate::error::Result;
use crate::matrix::RatMatrix;
use crate::poly::{MPoly, Monomial};
use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub index: usize,
    pub bidegree: Bidegree,
}

/// `coef * generator * Π e_r(y)^{e_exponents[r-1]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub generator: usize,
    pub e_exponents: Vec<u32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FreenessStatus {
    CertifiedUpToBound,
    Failed {
        bidegree: Bidegree,
        reason: String,
        relation: Vec<RelationTerm>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessReport {
    pub n: usize,
    pub k: usize,
    pub bound: Bidegree,
    pub generators: Vec<Generator>,
    pub verified_up_to: Option<Bidegree>,
    pub status: FreenessStatus,
}

impl FreenessReport {
    pub fn is_certified(&self) -> bool {
        self.status == FreenessStatus::CertifiedUpToBound
    }
}

/// Exponent vectors `μ` with `Σ r μ_r = m`, `r = 1..=n`.
fn weighted_compositions(n: usize, m: u32) -> Vec<Vec<u32>> {
    fn go(r: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r > n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left / r as u32 {
            cur.push(k);
            go(r + 1, n, left - k * r as u32, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, m, &mut Vec::new(), &mut out);
    out
}

fn coordinates(polys: &[MPoly]) -> Result<RatMatrix> {
    let mut cols: BTreeMap<Monomial, usize> = BTreeMap::new();
    for f in polys {
        for (m, _) in f.terms() {
            let next = cols.len();
            cols.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rational::from_integer(0.into()); polys.len()]; cols.len()];
    for (j, f) in polys.iter().enumerate() {
        for (m, c) in f.terms() {
            rows[cols[m]][j] = c.clone();
        }
    }
    RatMatrix::from_rows(rows)
}

/// Lifts a basis of `E/mE` (`E = A^k`, `m` generated by `e_1(y)..e_n(y)`) to
/// generators and checks, bidegree by bidegree up to `bound`, that the products
/// `generator * e-monomial` form a basis of `E`.
pub fn freeness_certificate(n: usize, k: usize, bound: Bidegree) -> Result<FreenessReport> {
    let e = ak_basis(n, k, bound)?;
    let elem: Vec<MPoly> = (1..=n).map(|r| elementary_y(n, r)).collect();
    let mut generators: Vec<Generator> = Vec::new();
    let mut gen_polys: Vec<MPoly> = Vec::new();
    let mut verified = None;
    for d in bidegrees_upto(bound) {
        let piece = e.piece(d);
        let mut span = PolyEchelon::new();
        for r in 1..=n.min(d.1 as usize) {
            for f in e.piece((d.0, d.1 - r as u32)) {
                span.insert(&f.mul(&elem[r - 1]));
            }
        }
        for f in piece {
            if span.insert(f) {
                generators.push(Generator {
                    index: generators.len(),
                    bidegree: d,
                });
                gen_polys.push(f.clone());
            }
        }
        let mut products = Vec::new();
        let mut labels = Vec::new();
        for (g, poly) in generators.iter().zip(&gen_polys) {
            if g.bidegree.0 != d.0 || g.bidegree.1 > d.1 {
                continue;
            }
            for mu in weighted_compositions(n, d.1 - g.bidegree.1) {
                let mut p = poly.clone();
                for (r, &m) in mu.iter().enumerate() {
                    for _ in 0..m {
                        p = p.mul(&elem[r]);
                    }
                }
                products.push(p);
                labels.push((g.index, mu));
            }
        }
        let mut check = PolyEchelon::new();
        let independent = products.iter().all(|p| check.insert(p));
        if !independent || products.len() != piece.len() {
            let relation = if independent {
                Vec::new()
            } else {
                let kernel = coordinates(&products)?.kernel();
                kernel[0]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(j, c)| RelationTerm {
                        generator: labels[j].0,
                        e_exponents: labels[j].1.clone(),
                        coef: format_rational(c),
                    })
                    .collect()
            };
            let reason = if independent {
                format!(
                    "{} products for a piece of dimension {}",
                    products.len(),
                    piece.len()
                )
            } else {
                "products of generators with e-monomials are linearly dependent".to_string()
            };
            return Ok(FreenessReport {
                n,
                k,
                bound,
                generators,
                verified_up_to: verified,
                status: FreenessStatus::Failed {
                    bidegree: d,
                    reason,
                    relation,
                },
            });
        }
        verified = Some(d);
    }
    Ok(FreenessReport {
        n,
        k,
        bound,
        generators,
        verified_up_to: verified,
        status: FreenessStatus::CertifiedUpToBound,
    })
}
