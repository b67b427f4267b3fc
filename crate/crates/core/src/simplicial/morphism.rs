use super::svs::{FaceMaps, TruncatedSVS, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// A levelwise linear map between two simplicial vector spaces of the same
/// truncation level. `component(n)` is `f_n : source_n -> target_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMorphism {
    source: TruncatedSVS,
    target: TruncatedSVS,
    components: Vec<RationalMatrix>,
}

impl SimplicialMorphism {
    /// Checks levels and shapes only; use [`validate_morphism`] for the
    /// commuting squares.
    pub fn new(source: TruncatedSVS, target: TruncatedSVS, components: Vec<RationalMatrix>) -> Result<Self> {
        if source.level() != target.level() {
            return Err(Error::Dimension(format!(
                "source level {} differs from target level {}",
                source.level(),
                target.level()
            )));
        }
        if components.len() != source.level() + 1 {
            return Err(Error::Dimension(format!(
                "expected {} components, got {}",
                source.level() + 1,
                components.len()
            )));
        }
        for (n, f) in components.iter().enumerate() {
            if f.shape() != (target.dim(n), source.dim(n)) {
                return Err(Error::Dimension(format!(
                    "component f_{n} has shape {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.dim(n),
                    source.dim(n)
                )));
            }
        }
        Ok(Self { source, target, components })
    }

    pub fn identity(x: &TruncatedSVS) -> Self {
        let comps = x.dims().iter().map(|&d| RationalMatrix::identity(d)).collect();
        Self::new(x.clone(), x.clone(), comps).expect("identity is well-shaped")
    }

    pub fn zero(source: &TruncatedSVS, target: &TruncatedSVS) -> Result<Self> {
        let comps = (0..=source.level())
            .map(|n| RationalMatrix::zeros(target.dims().get(n).copied().unwrap_or(0), source.dim(n)))
            .collect();
        Self::new(source.clone(), target.clone(), comps)
    }

    pub fn source(&self) -> &TruncatedSVS {
        &self.source
    }

    pub fn target(&self) -> &TruncatedSVS {
        &self.target
    }

    pub fn component(&self, n: usize) -> &RationalMatrix {
        &self.components[n]
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    /// `other ∘ self` (levelwise product).
    pub fn then(&self, other: &SimplicialMorphism) -> Result<SimplicialMorphism> {
        if self.target != other.source {
            return Err(Error::Invalid("morphisms are not composable".into()));
        }
        let comps = self.components.iter().zip(&other.components).map(|(f, g)| g * f).collect();
        Self::new(self.source.clone(), other.target.clone(), comps)
    }

    pub fn with_component(&self, n: usize, m: RationalMatrix) -> Result<Self> {
        let mut comps = self.components.clone();
        *comps.get_mut(n).ok_or_else(|| Error::OutOfRange(format!("no component at level {n}")))? = m;
        Self::new(self.source.clone(), self.target.clone(), comps)
    }
}

/// Checks `f_{n-1} d_i = d_i f_n` and `f_{n+1} s_i = s_i f_n` within truncation.
pub fn validate_morphism(f: &SimplicialMorphism) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (x, y) = (&f.source, &f.target);
    for n in 1..=x.level() {
        for i in 0..=n {
            if f.component(n - 1) * x.face(n, i) != y.face(n, i) * f.component(n) {
                report.push("f d_i = d_i f", n, i, 0);
            }
        }
    }
    for n in 0..x.level() {
        for i in 0..=n {
            if f.component(n + 1) * x.degeneracy(n, i) != y.degeneracy(n, i) * f.component(n) {
                report.push("f s_i = s_i f", n, i, 0);
            }
        }
    }
    report
}
