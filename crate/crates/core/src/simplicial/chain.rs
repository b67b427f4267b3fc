use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// A nonnegatively graded chain complex of finite-dimensional rational vector
/// spaces, known in degrees `0..=top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    // differentials[n - 1] = boundary map from degree n to degree n - 1
    differentials: Vec<RationalMatrix>,
}

impl ChainComplex {
    /// `differentials[n - 1]` is the `dims[n-1] x dims[n]` matrix of the
    /// differential out of degree `n`. Fails unless consecutive differentials
    /// compose to zero.
    pub fn new(dims: Vec<usize>, differentials: Vec<RationalMatrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Invalid("a chain complex needs at least degree 0".into()));
        }
        if differentials.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} degrees need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            let n = k + 1;
            if d.shape() != (dims[n - 1], dims[n]) {
                return Err(Error::Dimension(format!(
                    "differential out of degree {n} has shape {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[n - 1],
                    dims[n]
                )));
            }
        }
        for n in 2..dims.len() {
            if !(&differentials[n - 2] * &differentials[n - 1]).is_zero() {
                return Err(Error::Postcondition(format!(
                    "differentials out of degrees {n} and {} do not compose to zero",
                    n - 1
                )));
            }
        }
        Ok(Self { dims, differentials })
    }

    /// Zero differentials everywhere.
    pub fn with_zero_differentials(dims: Vec<usize>) -> Self {
        let diffs = (1..dims.len()).map(|n| RationalMatrix::zeros(dims[n - 1], dims[n])).collect();
        Self::new(dims, diffs).expect("zero differentials always square to zero")
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension in degree `n`, zero above `top`.
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// Differential out of degree `n >= 1`.
    pub fn differential(&self, n: usize) -> &RationalMatrix {
        &self.differentials[n - 1]
    }

    pub fn differentials(&self) -> &[RationalMatrix] {
        &self.differentials
    }
}

/// A degreewise linear map between two chain complexes with the same top
/// degree. `component(n)` maps degree `n` of the source to degree `n` of the
/// target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<RationalMatrix>,
}

impl ChainMap {
    /// Fails on shape mismatch or when a square `target_d f_n = f_{n-1} source_d`
    /// does not commute.
    pub fn new(source: ChainComplex, target: ChainComplex, components: Vec<RationalMatrix>) -> Result<Self> {
        if source.top() != target.top() || components.len() != source.top() + 1 {
            return Err(Error::Dimension(format!(
                "chain map between complexes of top degree {} and {} with {} components",
                source.top(),
                target.top(),
                components.len()
            )));
        }
        for (n, f) in components.iter().enumerate() {
            if f.shape() != (target.dim(n), source.dim(n)) {
                return Err(Error::Dimension(format!(
                    "chain map component {n} has shape {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.dim(n),
                    source.dim(n)
                )));
            }
        }
        for n in 1..=source.top() {
            if target.differential(n) * &components[n] != &components[n - 1] * source.differential(n) {
                return Err(Error::Postcondition(format!("chain map square at degree {n} does not commute")));
            }
        }
        Ok(Self { source, target, components })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let comps = c.dims().iter().map(|&d| RationalMatrix::identity(d)).collect();
        Self::new(c.clone(), c.clone(), comps).expect("identity chain map")
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component(&self, n: usize) -> &RationalMatrix {
        &self.components[n]
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.target != other.source {
            return Err(Error::Invalid("chain maps are not composable".into()));
        }
        let comps = self.components.iter().zip(&other.components).map(|(f, g)| g * f).collect();
        Self::new(self.source.clone(), other.target.clone(), comps)
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(RationalMatrix::is_identity)
    }
}
