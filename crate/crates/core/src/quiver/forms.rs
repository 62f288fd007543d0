use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Directed multigraph; parallel edges and loops allowed. Edges are `[tail, head]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Quiver {
    pub fn new(vertices: usize, edges: Vec<[usize; 2]>) -> Result<Self> {
        let q = Quiver { vertices, edges };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        match self
            .edges
            .iter()
            .find(|[t, h]| *t >= self.vertices || *h >= self.vertices)
        {
            Some(e) => Err(Error::InvalidInput(format!(
                "edge {e:?} out of range for {} vertices",
                self.vertices
            ))),
            None => Ok(()),
        }
    }

    /// One vertex, one loop.
    pub fn jordan() -> Self {
        Quiver {
            vertices: 1,
            edges: vec![[0, 0]],
        }
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|[t, h]| *t == v && *h == v)
            .count()
    }

    /// Number of edges joining `u` and `v` in either direction (`u != v`).
    pub fn edges_between(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|[t, h]| (*t == u && *h == v) || (*t == v && *h == u))
            .count()
    }

    fn check(&self, a: &DimVector) -> Result<()> {
        if a.len() == self.vertices {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "dimension vector of length {} for {} vertices",
                a.len(),
                self.vertices
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    /// `|α|² = Σ α_i²`
    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|&c| (c as i64) * (c as i64)).sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other`, when componentwise nonnegative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.0[k] > 0).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "crate::serial::rational_vec")] pub Vec<Rational>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![Rational::from_integer(0.into()); len])
    }

    pub fn dot(&self, a: &DimVector) -> Rational {
        self.0
            .iter()
            .zip(&a.0)
            .map(|(l, &c)| l * Rational::from_integer(c.into()))
            .sum()
    }
}

/// `⟨α,β⟩ = Σ α_i β_i - Σ_a α_{t(a)} β_{h(a)}`
pub fn ringel(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64> {
    q.check(a)?;
    q.check(b)?;
    let diag: i64 =
        a.0.iter()
            .zip(&b.0)
            .map(|(&x, &y)| x as i64 * y as i64)
            .sum();
    let arrows: i64 = q
        .edges
        .iter()
        .map(|[t, h]| a.0[*t] as i64 * b.0[*h] as i64)
        .sum();
    Ok(diag - arrows)
}

/// `(α,β) = ⟨α,β⟩ + ⟨β,α⟩`
pub fn symmetric(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64> {
    Ok(ringel(q, a, b)? + ringel(q, b, a)?)
}

/// `p(α) = 1 - ⟨α,α⟩`
pub fn tits_p(q: &Quiver, a: &DimVector) -> Result<i64> {
    Ok(1 - ringel(q, a, a)?)
}

/// `|α|² - 1 + 2 p(α)`
pub fn expected_dim(q: &Quiver, a: &DimVector) -> Result<i64> {
    Ok(a.norm_sq() - 1 + 2 * tits_p(q, a)?)
}
