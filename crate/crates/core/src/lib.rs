//! Exact rational engine for truncated simplicial vector spaces.
//!
//! The crate computes horn spaces and horn projections, checks ordinary and
//! generalized Kan conditions, fills generalized horns with a closed-form
//! alternating sum of degeneracy/face words, builds both normalized chain
//! complexes together with the explicit isomorphism between them, and
//! linearizes piecewise-affine simplicial objects at their basepoint.
//!
//! Everything is exact: entries are arbitrary-precision rationals and every
//! subspace is held in reduced column echelon form, so equality checks are
//! syntactic.

pub mod affine;
pub mod cli;
pub mod error;
pub mod formats;
pub mod kan;
pub mod linalg;
pub mod normalization;
pub mod simplicial;

pub use error::{Error, Result};
