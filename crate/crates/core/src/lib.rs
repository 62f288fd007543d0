//! Exact rational tooling for the almost-commuting variety, quiver root
//! combinatorics, the rational Cherednik algebra of `S_n`, and alternating
//! polynomials in two sets of variables.

pub mod acv;
pub mod altpoly;
pub mod cherednik;
pub mod error;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod quiver;
pub mod random;
pub mod rational;
pub mod serial;
pub mod span;
pub mod spectrum;
pub mod upoly;

pub use error::{Error, Result};
pub use matrix::{RatMatrix, RatVector};
pub use perm::Permutation;
pub use poly::{Coeff, MPoly, Monomial, PolyC};
pub use rational::Rational;
pub use upoly::{CPoly, UniPoly};
