//! Quivers with loops: Ringel and Tits forms, positive roots, the
//! decompositions counted by `Σ'_λ(α)`, and framed affine quivers.

mod affine;
mod decomp;
mod forms;
mod roots;

pub use affine::{AffineQuiver, FramedAffine};
pub use decomp::{component_count, is_sigma_lambda, sigma_prime_decomps, Decomposition, Limits};
pub use forms::{expected_dim, ringel, symmetric, tits_p, DimVector, Quiver, Weight};
pub use roots::{classify_root, positive_roots, r_lambda, Root, RootKind};
