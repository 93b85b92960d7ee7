//! Null ideals `N_(p^l)(A)`: canonical `(p^j)`-minimal polynomials, the
//! ladder of them over `j`, index sets, generating sets for prime-power and
//! composite moduli, and the p-ordering fast path for diagonal matrices.

mod generators;
mod ladder;
mod minpoly;
mod pordering;

pub use generators::{
    combined_null_ideal_generators, composite_null_ideal_generators, null_ideal_generators,
    null_ideal_generators_with, Generator, GeneratorSet, Modulus, NullIdealPresentation,
};
pub use ladder::{
    build_ladder, decompose_null_polynomial, default_stabilization_cap, index_set, p_degree,
    pj_minimal_polynomial, stabilization_exponent, stabilization_exponent_with_cap, stabilize,
    IndexSet, MinimalPolyLadder,
};
pub use minpoly::{minimal_polynomial, null_membership};
pub use pordering::{diagonal_pj_minimal_polynomial, p_ordering, POrderingResult};
