//! Points of the almost-commuting variety `{(X, Y, i, j) : [X,Y] + ij = 0}`,
//! its generic normal forms and component labels, nilpotent-locus and
//! relevant-stratum tests, simultaneous triangularization, and the
//! semi-invariant sections used by the alternating-polynomial bridge.

mod classify;
mod geometry;
mod normal_form;
mod quadruple;
mod sections;
mod strata;
mod triangular;

pub use classify::{classify_generic, GenericClass};
pub use geometry::{orbit_jacobian_rank, stabilizer_dim};
pub use normal_form::{normal_form, NormalFormParams};
pub use quadruple::{
    co_cyclic_subspace, cyclic_subspace, epsilon, is_nil_point, moment_map, pairing_vanishes,
    Quadruple,
};
pub use sections::{
    eval_lift, invariant_trace, invariant_trace_commutator, phi, psi, Letter, Word,
};
pub use strata::{
    all_y_nilpotent, centralizer_dim, conormal_space, is_regular, is_relevant, jordan_block,
    jordan_block_solve, Block, ConormalSpace, StratumLabel,
};
pub use triangular::{simultaneous_triangularize, spec_map_f, Triangularization};
