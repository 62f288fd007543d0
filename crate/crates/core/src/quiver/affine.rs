use serde::{Deserialize, Serialize};

use super::forms::{ringel, DimVector, Quiver, Weight};
use crate::error::{Error, Result};

/// Affine quiver with its minimal positive imaginary root `δ` and an
/// extending vertex `o` (`δ_o = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineQuiver {
    pub quiver: Quiver,
    pub delta: DimVector,
    pub extending_vertex: usize,
}

impl AffineQuiver {
    /// Checks `q(δ) = 0` and `δ_o = 1`.
    pub fn new(quiver: Quiver, delta: DimVector, extending_vertex: usize) -> Result<Self> {
        quiver.validate()?;
        if delta.is_zero() || ringel(&quiver, &delta, &delta)? != 0 {
            return Err(Error::InvalidInput(format!("q({:?}) is not zero", delta.0)));
        }
        if delta.0.get(extending_vertex) != Some(&1) {
            return Err(Error::InvalidInput(
                "extending vertex must have δ coordinate 1".into(),
            ));
        }
        Ok(AffineQuiver {
            quiver,
            delta,
            extending_vertex,
        })
    }

    /// `Ã_0`: the Jordan quiver, `δ = (1)`.
    pub fn jordan() -> Self {
        Self::new(Quiver::jordan(), DimVector(vec![1]), 0).expect("tabulated δ")
    }

    /// `Ã_k`: oriented cycle on `k + 1` vertices, `δ = (1, .., 1)`.
    pub fn cyclic(k: usize) -> Self {
        if k == 0 {
            return Self::jordan();
        }
        let m = k + 1;
        let edges = (0..m).map(|v| [v, (v + 1) % m]).collect();
        Self::new(Quiver { vertices: m, edges }, DimVector(vec![1; m]), 0).expect("tabulated δ")
    }

    /// `D̃_4`: four leaves pointing into vertex 4, `δ = (1,1,1,1,2)`.
    pub fn d4() -> Self {
        let edges = (0..4).map(|v| [v, 4]).collect();
        Self::new(
            Quiver { vertices: 5, edges },
            DimVector(vec![1, 1, 1, 1, 2]),
            0,
        )
        .expect("tabulated δ")
    }

    /// Adjoins a vertex `s` (last index) with one arrow `s -> o`; `α = nδ + ε_s`.
    pub fn frame(&self, n: u32) -> FramedAffine {
        let s = self.quiver.vertices;
        let mut edges = self.quiver.edges.clone();
        edges.push([s, self.extending_vertex]);
        let mut delta = self.delta.0.clone();
        delta.push(0);
        let delta = DimVector(delta);
        let mut alpha = delta.scale(n);
        alpha.0[s] = 1;
        FramedAffine {
            quiver: Quiver {
                vertices: s + 1,
                edges,
            },
            alpha,
            delta,
            framing_vertex: s,
            n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedAffine {
    pub quiver: Quiver,
    pub alpha: DimVector,
    /// `δ` extended by 0 at the framing vertex.
    pub delta: DimVector,
    pub framing_vertex: usize,
    pub n: u32,
}

impl FramedAffine {
    /// Weights allowed for the framed construction: `λ_s = 0` and `λ·δ = 0`.
    pub fn accepts_weight(&self, lambda: &Weight) -> bool {
        lambda.0.len() == self.quiver.vertices
            && num_traits::Zero::is_zero(&lambda.0[self.framing_vertex])
            && num_traits::Zero::is_zero(&lambda.dot(&self.delta))
    }

    /// `n²|δ|² + 2n`
    pub fn closed_form_dim(&self) -> i64 {
        let n = self.n as i64;
        n * n * self.delta.norm_sq() + 2 * n
    }
}
