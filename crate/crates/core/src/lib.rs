//! Null ideals of square integer matrices over `Z/p^l Z`.
//!
//! The crate computes canonical `(p^j)`-minimal polynomials of a matrix
//! `A in M_n(Z)`, the index sets that select a generating set of the null
//! ideal `N_(p^l)(A)`, the cyclic decomposition of `(Z/p^l)[A]`, and a finite
//! presentation of the ring of integer-valued polynomials on `A`. Every
//! computation is exact. The [`oracle`] module carries brute-force checks
//! that are independent of the fast paths and are used by the test suites.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod intval;
pub mod matz;
pub mod moddecomp;
pub mod nullideal;
pub mod oracle;
pub mod ringcore;

pub use error::{Error, Result};

pub use intval::{
    critical_primes, image_ring_generators, intval_membership, intval_presentation,
    is_polynomially_closed, CriticalPrime, FractionalGenerator, ImageGenerator, ImageRing,
    IntValPresentation, RationalPolynomial,
};
pub use matz::{power_stack, smith_normal_form, solve_mod, IntMatrix, Matrix, SmithForm};
pub use moddecomp::{
    decompose, invariant_factors, is_free, nleq_module_generators, reduced_index_set,
    ModuleDecomposition, ModuleGenerator, ReducedIndexSet,
};
pub use nullideal::{
    build_ladder, composite_null_ideal_generators, decompose_null_polynomial,
    diagonal_pj_minimal_polynomial, index_set, minimal_polynomial, null_ideal_generators,
    null_membership, p_degree, p_ordering, pj_minimal_polynomial, stabilization_exponent,
    Generator, GeneratorSet, IndexSet, MinimalPolyLadder, NullIdealPresentation, POrderingResult,
};
pub use oracle::EnumerationBudget;
pub use ringcore::{
    p_adic_valuation, primality, IntPolynomial, Integer, Primality, PrimePower, Rational, Valuation,
};
