//! Exact linear algebra over the rationals: dense matrices, canonical
//! subspaces, kernels, solving and subspace comparisons.

mod matrix;
pub mod rational;
mod subspace;

pub use matrix::{Echelon, RationalMatrix};
pub use rational::Rational;
pub use subspace::{image_in, intersect, kernel_basis, rank, solve, subspace_equal, surjects_onto, Subspace};
