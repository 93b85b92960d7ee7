//! Exact integer matrix algebra: products, polynomial evaluation, the
//! power stack, Smith normal form and linear congruence solving.

mod matrix;
mod rational;
mod snf;
mod solve;

pub(crate) use matrix::stack_of;
pub use matrix::{power_stack, powers, IntMatrix, Matrix};
pub use rational::{rank_rational, solve_rational};
pub use snf::{smith_normal_form, SmithForm};
pub use solve::{relation_lattice_basis, solve_int, solve_mod};
