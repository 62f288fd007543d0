use serde::{Deserialize, Serialize};

use super::forms::{tits_p, DimVector, Quiver, Weight};
use super::roots::{classify_root, r_lambda};
use crate::error::{Error, Result};

/// Multiset of positive λ-roots summing to a target; parts sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decomposition {
    pub parts: Vec<DimVector>,
}

impl Decomposition {
    pub fn sum(&self, len: usize) -> DimVector {
        self.parts
            .iter()
            .fold(DimVector::zero(len), |acc, p| acc.add(p))
    }
}

/// Hard caps on the exhaustive search; exceeding one is `BoundExceeded`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_roots: usize,
    pub max_parts: usize,
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_roots: 5_000,
            max_parts: 256,
            max_nodes: 20_000_000,
        }
    }
}

struct Search<'a> {
    roots: &'a [(DimVector, i64)],
    p_alpha: i64,
    limits: Limits,
    nodes: u64,
    stack: Vec<usize>,
    found: Vec<Decomposition>,
}

impl Search<'_> {
    fn decomposition(&self) -> Decomposition {
        Decomposition {
            parts: self
                .stack
                .iter()
                .map(|&k| self.roots[k].0.clone())
                .collect(),
        }
    }

    /// Extends the current multiset with parts of index `<= max_index`.
    fn run(&mut self, remaining: &DimVector, max_index: usize, p_sum: i64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::BoundExceeded(format!(
                "decomposition search visited more than {} nodes",
                self.limits.max_nodes
            )));
        }
        if remaining.is_zero() {
            if self.stack.len() >= 2 && p_sum > self.p_alpha {
                return Err(Error::NotSigmaPrime {
                    witness: self
                        .decomposition()
                        .parts
                        .into_iter()
                        .map(|d| d.0)
                        .collect(),
                    p_sum,
                    p_alpha: self.p_alpha,
                });
            }
            if p_sum == self.p_alpha {
                self.found.push(self.decomposition());
            }
            return Ok(());
        }
        if self.stack.len() >= self.limits.max_parts {
            return Err(Error::BoundExceeded(format!(
                "decomposition needs more than {} parts",
                self.limits.max_parts
            )));
        }
        for k in (0..=max_index).rev() {
            let (root, p) = &self.roots[k];
            if let Some(rest) = remaining.checked_sub(root) {
                self.stack.push(k);
                self.run(&rest, k, p_sum + p)?;
                self.stack.pop();
            }
        }
        Ok(())
    }
}

/// All decompositions of `α` into positive λ-roots with `Σ p(β) = p(α)`,
/// after checking that none exceeds `p(α)`. Sorted by part count, then parts.
pub fn sigma_prime_decomps(
    q: &Quiver,
    lambda: &Weight,
    alpha: &DimVector,
    limits: Limits,
) -> Result<Vec<Decomposition>> {
    if lambda.0.len() != q.vertices {
        return Err(Error::DimensionMismatch(
            "weight length differs from vertex count".into(),
        ));
    }
    if classify_root(q, alpha)?.is_none() || !num_traits::Zero::is_zero(&lambda.dot(alpha)) {
        return Err(Error::InvalidInput(format!(
            "{:?} is not a positive root orthogonal to λ",
            alpha.0
        )));
    }
    let roots = r_lambda(q, lambda, alpha)?;
    if roots.len() > limits.max_roots {
        return Err(Error::BoundExceeded(format!(
            "{} candidate roots exceed the cap of {}",
            roots.len(),
            limits.max_roots
        )));
    }
    let with_p = roots
        .into_iter()
        .map(|r| {
            let p = tits_p(q, &r.vector)?;
            Ok((r.vector, p))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut search = Search {
        roots: &with_p,
        p_alpha: tits_p(q, alpha)?,
        limits,
        nodes: 0,
        stack: Vec::new(),
        found: Vec::new(),
    };
    search.run(alpha, with_p.len() - 1, 0)?;
    let mut found = search.found;
    for d in &mut found {
        d.parts.sort_by(|a, b| b.cmp(a));
    }
    found.sort_by(|a, b| (a.parts.len(), &a.parts).cmp(&(b.parts.len(), &b.parts)));
    Ok(found)
}

/// Number of irreducible components, one per element of `Σ'_λ(α)`.
pub fn component_count(
    q: &Quiver,
    lambda: &Weight,
    alpha: &DimVector,
    limits: Limits,
) -> Result<usize> {
    Ok(sigma_prime_decomps(q, lambda, alpha, limits)?.len())
}

/// `α ∈ Σ_λ`: every proper decomposition has `Σ p(β) < p(α)`.
pub fn is_sigma_lambda(
    q: &Quiver,
    lambda: &Weight,
    alpha: &DimVector,
    limits: Limits,
) -> Result<bool> {
    match sigma_prime_decomps(q, lambda, alpha, limits) {
        Ok(ds) => Ok(ds.len() == 1),
        Err(Error::NotSigmaPrime { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}
