use super::{n_subspace, normalize, NormalizationVariant, NormalizedComplex};
use crate::error::{Error, Result};
use crate::linalg::rational::int;
use crate::linalg::{image_in, RationalMatrix};
use crate::simplicial::{ChainMap, FaceMaps, SimplicialMorphism, TruncatedSVS};

/// Which of the two projection families to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    /// `γ^n_{0,m} = (id - s_0 d_1) ∘ ... ∘ (id - s_{m-1} d_m)`, onto `N^n_{0,m}`.
    Lower(usize),
    /// `γ^n_{m,m} = (id - s_{m-1} d_{m-1}) ∘ ... ∘ (id - s_0 d_0)`, onto `N^n_{m,m}`.
    Upper(usize),
}

impl GammaKind {
    pub fn m(self) -> usize {
        match self {
            Self::Lower(m) | Self::Upper(m) => m,
        }
    }
}

/// `id - s_k d_f` on `V_n`.
fn elementary(x: &TruncatedSVS, n: usize, k: usize, f: usize) -> RationalMatrix {
    &RationalMatrix::identity(x.dim(n)) - &(x.degeneracy(n - 1, k) * x.face(n, f))
}

/// The literal composite, checked to land in `N^n_{0,m}` or `N^n_{m,m}`.
pub fn gamma(x: &TruncatedSVS, n: usize, which: GammaKind) -> Result<RationalMatrix> {
    let m = which.m();
    if m > n || n > x.level() {
        return Err(Error::OutOfRange(format!("need 0 <= m <= n <= {}, got m = {m}, n = {n}", x.level())));
    }
    let mut g = RationalMatrix::identity(x.dim(n));
    // the leftmost factor is applied last
    for k in 0..m {
        let factor = match which {
            GammaKind::Lower(_) => elementary(x, n, k, k + 1),
            GammaKind::Upper(_) => elementary(x, n, k, k),
        };
        g = match which {
            GammaKind::Lower(_) => &g * &factor,
            GammaKind::Upper(_) => &factor * &g,
        };
    }
    let target = match which {
        GammaKind::Lower(_) => n_subspace(x, n, 0, m)?,
        GammaKind::Upper(_) => n_subspace(x, n, m, m)?,
    };
    if !image_in(&g, &target)? {
        return Err(Error::Postcondition(format!("γ^{n} with m = {m} leaves its target subspace")));
    }
    Ok(g)
}

/// `Ñ(x) ≅ N(x)`: `forward_n = γ^n_{n,n}` and `inverse_n = γ^n_{0,n}`, both in
/// canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainIsomorphism {
    pub tilde: NormalizedComplex,
    pub normalized: NormalizedComplex,
    pub forward: ChainMap,
    pub inverse: ChainMap,
}

/// Builds both maps and checks that they are chain maps and mutually
/// inverse.
pub fn chain_isomorphism(x: &TruncatedSVS) -> Result<ChainIsomorphism> {
    let tilde = normalize(x, NormalizationVariant::Tilde)?;
    let normalized = normalize(x, NormalizationVariant::N)?;
    let mut forward = Vec::new();
    let mut inverse = Vec::new();
    for n in 0..=x.level() {
        let up = gamma(x, n, GammaKind::Upper(n))?;
        let down = gamma(x, n, GammaKind::Lower(n))?;
        forward.push(normalized.levels[n].coordinate_matrix(&(&up * tilde.levels[n].basis()))?);
        inverse.push(tilde.levels[n].coordinate_matrix(&(&down * normalized.levels[n].basis()))?);
    }
    let forward = ChainMap::new(tilde.complex.clone(), normalized.complex.clone(), forward)?;
    let inverse = ChainMap::new(normalized.complex.clone(), tilde.complex.clone(), inverse)?;
    if !forward.then(&inverse)?.is_identity() || !inverse.then(&forward)?.is_identity() {
        return Err(Error::Postcondition("γ maps are not mutually inverse".into()));
    }
    Ok(ChainIsomorphism { tilde, normalized, forward, inverse })
}

/// `γ^n_{m,m}` restricted to `N^n_{0,m}` and `γ^n_{0,m}` restricted to
/// `N^n_{m,m}` are mutually inverse, compared in canonical coordinates.
pub fn gamma_inverse_holds(x: &TruncatedSVS, n: usize, m: usize) -> Result<bool> {
    let lower = n_subspace(x, n, 0, m)?;
    let upper = n_subspace(x, n, m, m)?;
    if lower.dim() != upper.dim() {
        return Ok(false);
    }
    let up = upper.coordinate_matrix(&(&gamma(x, n, GammaKind::Upper(m))? * lower.basis()))?;
    let down = lower.coordinate_matrix(&(&gamma(x, n, GammaKind::Lower(m))? * upper.basis()))?;
    Ok((&down * &up).is_identity() && (&up * &down).is_identity())
}

/// `(-1)^n d_n γ^n_{n,n} v = d_0 v` for every basis vector `v` of
/// `N^n_{0,n}`.
pub fn chain_identity_holds(x: &TruncatedSVS, n: usize) -> Result<bool> {
    crate::kan::check_level(x, n)?;
    let domain = n_subspace(x, n, 0, n)?;
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let lhs = &(&x.face(n, n).scale(&sign) * &gamma(x, n, GammaKind::Upper(n))?) * domain.basis();
    let rhs = x.face(n, 0) * domain.basis();
    Ok(lhs == rhs)
}

/// The chain map `N(f)` or `Ñ(f)`: each `f_n` restricted to the normalized
/// levels, in canonical coordinates.
pub fn normalized_map(f: &SimplicialMorphism, v: NormalizationVariant) -> Result<ChainMap> {
    let source = normalize(f.source(), v)?;
    let target = normalize(f.target(), v)?;
    let comps = (0..=f.source().level())
        .map(|n| {
            target.levels[n]
                .coordinate_matrix(&(f.component(n) * source.levels[n].basis()))
                .map_err(|_| Error::Postcondition(format!("f_{n} leaves the normalized level")))
        })
        .collect::<Result<Vec<_>>>()?;
    ChainMap::new(source.complex, target.complex, comps)
}

/// `forward_target ∘ Ñ(f) = N(f) ∘ forward_source` at every level.
pub fn check_naturality(f: &SimplicialMorphism) -> Result<bool> {
    let iso_source = chain_isomorphism(f.source())?;
    let iso_target = chain_isomorphism(f.target())?;
    let tilde_f = normalized_map(f, NormalizationVariant::Tilde)?;
    let n_f = normalized_map(f, NormalizationVariant::N)?;
    let left = tilde_f.then(&iso_target.forward)?;
    let right = iso_source.forward.then(&n_f)?;
    Ok(left == right)
}
