//! The rational Cherednik algebra of `gl_n` with parameter `c` kept formal:
//! PBW-ordered elements `x^a w y^b`, their products, the polynomial
//! representation, the spherical symmetrizer and the Fourier automorphism.
//!
//! Group elements act on generators by `w x_k w^-1 = x_{w(k)}` and
//! `w y_k w^-1 = y_{w(k)}`; the group product is composition `(σ τ)(k) = σ(τ(k))`.

mod algebra;
mod pbw;
mod polyrep;
mod relations;

pub use algebra::{HElem, HTermWire, PbwKey};
pub use pbw::{pbw_count, pbw_expected};
pub use polyrep::{act_poly, act_y, dunkl, is_symmetric, spherical_act, symmetrize};
pub use relations::{relation_failures, Relation, RelationFailure};
