//! Alternating polynomials in the diagonal variables `x_1..x_n, y_1..y_n`:
//! monomial alternants, bigraded bases of the product spaces `A^k`, bounded
//! freeness certificates over symmetric `y`-polynomials, and the restriction
//! bridge to the semi-invariant sections on the variety.

mod bridge;
mod echelon;
mod freeness;
mod labels;
mod products;

pub use bridge::{restriction_bridge, BridgeReport};
pub use echelon::PolyEchelon;
pub use freeness::{freeness_certificate, FreenessReport, FreenessStatus, Generator, RelationTerm};
pub use labels::{
    a_basis, alternant, bidegree, bivariate_vars, elementary_y, is_alternating, Bidegree,
    WedgeLabel,
};
pub use products::{ak_basis, hilbert_series, GradedBasis, HilbertEntry, MAX_TOTAL_DEGREE};
