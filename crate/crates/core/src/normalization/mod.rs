//! Normalized chain complexes of simplicial vector spaces.
//!
//! Two subcomplexes of `V_n` carry the same homotopy type:
//!
//! * `N`: `∩_{j<n} ker d_j` with differential `(-1)^n d_n`;
//! * `Ñ` ([`NormalizationVariant::Tilde`]): `∩_{1<=j<=n} ker d_j` with
//!   differential `d_0`.
//!
//! Differentials are matrices in the canonical (reduced column echelon)
//! bases of the levels, so coordinates of a vector are its entries at the
//! pivot rows.

mod gamma;
mod tangent;

use serde::{Deserialize, Serialize};

pub use gamma::{
    chain_identity_holds, chain_isomorphism, check_naturality, gamma, gamma_inverse_holds, normalized_map,
    ChainIsomorphism, GammaKind,
};
pub use tangent::{tangent_complex, tangent_map, BundleReport, LevelRanks, PointedFamily, TangentComplex};

use crate::error::{Error, Result};
use crate::kan::stacked_faces;
use crate::linalg::rational::int;
use crate::linalg::{intersect, kernel_basis, RationalMatrix, Subspace};
use crate::simplicial::{ChainComplex, FaceMaps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormalizationVariant {
    #[serde(rename = "N")]
    N,
    #[serde(rename = "tilde")]
    Tilde,
}

impl NormalizationVariant {
    pub fn name(self) -> &'static str {
        match self {
            Self::N => "N",
            Self::Tilde => "tilde",
        }
    }

    /// The faces whose kernels cut out level `n`.
    fn killed_faces(self, n: usize) -> std::ops::Range<usize> {
        match self {
            Self::N => 0..n,
            Self::Tilde => 1..n + 1,
        }
    }
}

impl std::str::FromStr for NormalizationVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(Self::N),
            "tilde" | "Tilde" => Ok(Self::Tilde),
            other => Err(Error::Invalid(format!("unknown normalization variant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedComplex {
    pub variant: NormalizationVariant,
    pub levels: Vec<Subspace>,
    pub complex: ChainComplex,
}

impl NormalizedComplex {
    pub fn dims(&self) -> &[usize] {
        self.complex.dims()
    }
}

/// Level `n` as an intersection of single-face kernels.
fn normalized_level<X: FaceMaps + ?Sized>(x: &X, n: usize, v: NormalizationVariant) -> Result<Subspace> {
    let mut level = Subspace::full(x.dim(n));
    for j in v.killed_faces(n) {
        level = intersect(&level, &kernel_basis(x.face(n, j)))?;
    }
    Ok(level)
}

/// The differential at level `n` before restriction: `(-1)^n d_n` or `d_0`.
fn raw_differential<X: FaceMaps + ?Sized>(x: &X, n: usize, v: NormalizationVariant) -> RationalMatrix {
    match v {
        NormalizationVariant::N if n % 2 == 1 => x.face(n, n).scale(&int(-1)),
        NormalizationVariant::N => x.face(n, n).clone(),
        NormalizationVariant::Tilde => x.face(n, 0).clone(),
    }
}

/// Fails with a postcondition error if a differential leaves the next level
/// or squares to a nonzero map, which only happens when face identities fail.
pub fn normalize<X: FaceMaps + ?Sized>(x: &X, v: NormalizationVariant) -> Result<NormalizedComplex> {
    let levels = (0..=x.level()).map(|n| normalized_level(x, n, v)).collect::<Result<Vec<_>>>()?;
    let differentials = (1..=x.level())
        .map(|n| {
            let image = &raw_differential(x, n, v) * levels[n].basis();
            levels[n - 1].coordinate_matrix(&image)
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = levels.iter().map(Subspace::dim).collect();
    let complex = ChainComplex::new(dims, differentials)
        .map_err(|e| Error::Postcondition(format!("normalized differentials: {e}")))?;
    Ok(NormalizedComplex { variant: v, levels, complex })
}

/// `N^n_{i,m} = ∩_{j ∈ [m] \ {i}} ker d_j` for `m > 0`, and `V_n` for `m = 0`.
pub fn n_subspace<X: FaceMaps + ?Sized>(x: &X, n: usize, i: usize, m: usize) -> Result<Subspace> {
    if i > m || m > n || n > x.level() {
        return Err(Error::OutOfRange(format!(
            "need 0 <= i <= m <= n <= {}, got i = {i}, m = {m}, n = {n}",
            x.level()
        )));
    }
    if m == 0 {
        return Ok(Subspace::full(x.dim(n)));
    }
    let faces: Vec<usize> = (0..=m).filter(|&j| j != i).collect();
    Ok(kernel_basis(&stacked_faces(x, n, &faces)))
}

/// `dim ker ∂_n - rank ∂_{n+1}`, with `∂_{top+1} = 0`. When `c` is the
/// normalization of an object truncated at `top`, the top entry only bounds
/// the true homology from above.
pub fn homology_dims(c: &ChainComplex) -> Vec<usize> {
    (0..=c.top())
        .map(|n| {
            let kernel = if n == 0 { c.dim(0) } else { c.dim(n) - c.differential(n).rank() };
            let boundaries = if n < c.top() { c.differential(n + 1).rank() } else { 0 };
            kernel - boundaries
        })
        .collect()
}

/// Whether `ker p^n_n = N_n` and `ker p^n_0 = Ñ_n`, with the kernels of the
/// stacked projections compared against the normalized levels.
pub fn kernel_projection_identity<X: FaceMaps + ?Sized>(x: &X, n: usize) -> Result<(bool, bool)> {
    crate::kan::check_level(x, n)?;
    let last: Vec<usize> = (0..n).collect();
    let first: Vec<usize> = (1..=n).collect();
    let ker_last = kernel_basis(&stacked_faces(x, n, &last));
    let ker_first = kernel_basis(&stacked_faces(x, n, &first));
    let n_level = normalized_level(x, n, NormalizationVariant::N)?;
    let tilde_level = normalized_level(x, n, NormalizationVariant::Tilde)?;
    Ok((crate::linalg::subspace_equal(&ker_last, &n_level)?, crate::linalg::subspace_equal(&ker_first, &tilde_level)?))
}
