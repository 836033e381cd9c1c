//! Exact integer and rational linear algebra.

mod fourier_motzkin;
mod hnf;
mod matrix;
mod solve;

pub use fourier_motzkin::{feasible, Feasibility, LinearSystem, Relation};
pub use hnf::{hnf, lattice_index, rank, Hnf, Lattice};
pub(crate) use matrix::to_i64;
pub use matrix::{int_rat, rat, IntMatrix, RatVector};
pub use solve::{det, hyperplane_normal, inverse, solve, solve_unique};
