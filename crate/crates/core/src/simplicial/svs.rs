use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// Read access to the face maps of a (semi)simplicial vector space known up to
/// a truncation level.
///
/// `face(n, i)` is `d_i^n : V_n -> V_{n-1}` for `1 <= n <= level`, `0 <= i <= n`,
/// stored as a `dims[n-1] x dims[n]` matrix.
pub trait FaceMaps {
    fn level(&self) -> usize;
    fn dims(&self) -> &[usize];
    fn face(&self, n: usize, i: usize) -> &RationalMatrix;

    fn dim(&self, n: usize) -> usize {
        self.dims()[n]
    }
}

/// A semisimplicial vector space truncated at `level`: dimensions and face
/// matrices only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiSVS {
    dims: Vec<usize>,
    // faces[n][i] = d_i^n; faces[0] is empty
    faces: Vec<Vec<RationalMatrix>>,
}

/// A simplicial vector space truncated at `level`: faces up to level `level`
/// and degeneracies landing in levels `<= level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSVS {
    semi: SemiSVS,
    // degeneracies[n][i] = s_i^n : V_n -> V_{n+1}, for n < level
    degeneracies: Vec<Vec<RationalMatrix>>,
}

/// One failed instance of a simplicial identity (or morphism square).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    /// Level of the source of the composite maps that disagree.
    pub level: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, identity: &str, level: usize, i: usize, j: usize) {
        self.violations.push(Violation { identity: identity.to_string(), level, i, j });
    }
}

fn check_shape(what: &str, m: &RationalMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::Dimension(format!("{what} has shape {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

impl SemiSVS {
    /// `faces[n - 1][i]` is `d_i^n` for `n = 1..=level`, so `faces.len()` must
    /// equal `dims.len() - 1`.
    pub fn new(dims: Vec<usize>, faces: Vec<Vec<RationalMatrix>>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Invalid("a simplicial object needs at least level 0".into()));
        }
        if faces.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} levels need {} rows of face maps, got {}",
                dims.len(),
                dims.len() - 1,
                faces.len()
            )));
        }
        for (k, row) in faces.iter().enumerate() {
            let n = k + 1;
            if row.len() != n + 1 {
                return Err(Error::Dimension(format!("level {n} needs {} face maps, got {}", n + 1, row.len())));
            }
            for (i, m) in row.iter().enumerate() {
                check_shape(&format!("face d_{i}^{n}"), m, dims[n - 1], dims[n])?;
            }
        }
        let mut all = Vec::with_capacity(dims.len());
        all.push(Vec::new());
        all.extend(faces);
        Ok(Self { dims, faces: all })
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` wherever both sides are defined.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        face_face_identities(self, &mut report);
        report
    }

    pub fn with_face(&self, n: usize, i: usize, m: RationalMatrix) -> Result<Self> {
        self.check_face_index(n, i)?;
        check_shape("replacement face", &m, self.dims[n - 1], self.dims[n])?;
        let mut out = self.clone();
        out.faces[n][i] = m;
        Ok(out)
    }

    fn check_face_index(&self, n: usize, i: usize) -> Result<()> {
        if n == 0 || n > self.level() || i > n {
            return Err(Error::OutOfRange(format!("face d_{i}^{n} outside truncation level {}", self.level())));
        }
        Ok(())
    }
}

impl FaceMaps for SemiSVS {
    fn level(&self) -> usize {
        self.dims.len() - 1
    }

    fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn face(&self, n: usize, i: usize) -> &RationalMatrix {
        &self.faces[n][i]
    }
}

impl FaceMaps for TruncatedSVS {
    fn level(&self) -> usize {
        self.semi.level()
    }

    fn dims(&self) -> &[usize] {
        self.semi.dims()
    }

    fn face(&self, n: usize, i: usize) -> &RationalMatrix {
        self.semi.face(n, i)
    }
}

impl AsRef<SemiSVS> for TruncatedSVS {
    fn as_ref(&self) -> &SemiSVS {
        &self.semi
    }
}

impl TruncatedSVS {
    /// `degeneracies[n][i]` is `s_i^n` for `n = 0..level`.
    pub fn new(
        dims: Vec<usize>,
        faces: Vec<Vec<RationalMatrix>>,
        degeneracies: Vec<Vec<RationalMatrix>>,
    ) -> Result<Self> {
        let semi = SemiSVS::new(dims, faces)?;
        let level = semi.level();
        if degeneracies.len() != level {
            return Err(Error::Dimension(format!(
                "level {level} needs {level} rows of degeneracies, got {}",
                degeneracies.len()
            )));
        }
        for (n, row) in degeneracies.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Dimension(format!("level {n} needs {} degeneracies, got {}", n + 1, row.len())));
            }
            for (i, m) in row.iter().enumerate() {
                check_shape(&format!("degeneracy s_{i}^{n}"), m, semi.dims[n + 1], semi.dims[n])?;
            }
        }
        Ok(Self { semi, degeneracies })
    }

    /// Every level is `Q^k` and every structure map is the identity.
    pub fn constant(k: usize, level: usize) -> Self {
        let id = RationalMatrix::identity(k);
        let faces = (1..=level).map(|n| vec![id.clone(); n + 1]).collect();
        let degens = (0..level).map(|n| vec![id.clone(); n + 1]).collect();
        Self::new(vec![k; level + 1], faces, degens).expect("constant object is well-shaped")
    }

    pub fn zero(level: usize) -> Self {
        Self::constant(0, level)
    }

    /// `s_i^n : V_n -> V_{n+1}` for `n < level`, `i <= n`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &RationalMatrix {
        &self.degeneracies[n][i]
    }

    pub fn semi(&self) -> &SemiSVS {
        &self.semi
    }

    pub fn forget_degeneracies(&self) -> SemiSVS {
        self.semi.clone()
    }

    pub fn with_face(&self, n: usize, i: usize, m: RationalMatrix) -> Result<Self> {
        Ok(Self { semi: self.semi.with_face(n, i, m)?, degeneracies: self.degeneracies.clone() })
    }

    /// Checks every simplicial identity whose source and target levels lie in
    /// `0..=level`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        face_face_identities(&self.semi, &mut report);
        let level = self.level();
        // s_i s_j = s_{j+1} s_i, i <= j; s_j^{n-1} then s_i^n, n + 1 <= level
        for n in 1..level {
            for j in 0..n {
                for i in 0..=j {
                    let lhs = self.degeneracy(n, i) * self.degeneracy(n - 1, j);
                    let rhs = self.degeneracy(n, j + 1) * self.degeneracy(n - 1, i);
                    if lhs != rhs {
                        report.push("s_i s_j = s_{j+1} s_i", n - 1, i, j);
                    }
                }
            }
        }
        // d_i^n s_j^{n-1}
        for n in 1..=level {
            for j in 0..n {
                for i in 0..=n {
                    let lhs = self.face(n, i) * self.degeneracy(n - 1, j);
                    let (ok, identity) = if i < j {
                        let rhs = self.degeneracy(n - 2, j - 1) * self.face(n - 1, i);
                        (lhs == rhs, "d_i s_j = s_{j-1} d_i")
                    } else if i == j || i == j + 1 {
                        (lhs.is_identity(), "d_i s_j = id")
                    } else {
                        let rhs = self.degeneracy(n - 2, j) * self.face(n - 1, i - 1);
                        (lhs == rhs, "d_i s_j = s_j d_{i-1}")
                    };
                    if !ok {
                        report.push(identity, n - 1, i, j);
                    }
                }
            }
        }
        report
    }
}

fn face_face_identities(x: &SemiSVS, report: &mut ValidationReport) {
    // d_i^n d_j^{n+1} = d_{j-1}^n d_i^{n+1}, i < j
    for n in 1..x.level() {
        for j in 1..=n + 1 {
            for i in 0..j {
                let lhs = x.face(n, i) * x.face(n + 1, j);
                let rhs = x.face(n, j - 1) * x.face(n + 1, i);
                if lhs != rhs {
                    report.push("d_i d_j = d_{j-1} d_i", n + 1, i, j);
                }
            }
        }
    }
}

pub fn validate_simplicial_identities(x: &TruncatedSVS) -> ValidationReport {
    x.validate()
}

pub fn forget_degeneracies(x: &TruncatedSVS) -> SemiSVS {
    x.forget_degeneracies()
}
