//! Truncated simplicial and semisimplicial vector spaces, chain complexes,
//! morphisms, and the generators used to produce test objects.

mod chain;
mod dold_kan;
mod morphism;
pub mod random;
mod svs;

pub use chain::{ChainComplex, ChainMap};
pub(crate) use dold_kan::{codegeneracy, coface};
pub use dold_kan::{dold_kan_dim, dold_kan_inverse, dold_kan_morphism, surjections};
pub use morphism::{validate_morphism, SimplicialMorphism};
pub use random::{random_chain_complex, random_chain_map, ComplexRecipe, SplitMix64};
pub use svs::{
    forget_degeneracies, validate_simplicial_identities, FaceMaps, SemiSVS, TruncatedSVS, ValidationReport, Violation,
};
