use num_traits::Zero;

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient_dim`, stored as a matrix whose columns
/// form a basis.
///
/// When `canonical` is set the basis is in reduced column echelon form: the
/// transpose is in reduced row echelon form. Two canonical subspaces are equal
/// exactly when their bases are equal entry for entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
    canonical: bool,
    // pivot row of each basis column; only meaningful when canonical
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: RationalMatrix::zeros(ambient_dim, 0), canonical: true, pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RationalMatrix::identity(ambient_dim),
            canonical: true,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical subspace spanned by the columns of `spanning` (which may be
    /// linearly dependent).
    pub fn span(spanning: &RationalMatrix) -> Self {
        let ambient_dim = spanning.rows();
        let echelon = spanning.transpose().rref();
        let k = echelon.pivots.len();
        let basis = echelon.matrix.row_block(0, k).transpose();
        Self { ambient_dim, basis, canonical: true, pivots: echelon.pivots }
    }

    /// Wraps a basis without canonicalizing it. The columns must be linearly
    /// independent.
    pub fn from_independent_columns(basis: RationalMatrix) -> Result<Self> {
        if basis.rank() != basis.cols() {
            return Err(Error::Invalid("subspace basis columns are linearly dependent".into()));
        }
        Ok(Self { ambient_dim: basis.rows(), basis, canonical: false, pivots: Vec::new() })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn canonicalize(&self) -> Self {
        if self.canonical {
            self.clone()
        } else {
            Self::span(&self.basis)
        }
    }

    /// Coordinates of `v` with respect to the stored basis, or `None` when
    /// `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "vector of length {} in a subspace of Q^{}",
                v.len(),
                self.ambient_dim
            )));
        }
        let coords = if self.canonical {
            self.pivots.iter().map(|&p| v[p].clone()).collect()
        } else {
            match solve(&self.basis, v)? {
                Some(c) => c,
                None => return Ok(None),
            }
        };
        let back = self.basis.mul_vec(&coords)?;
        Ok((back.as_slice() == v).then_some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Coordinates of every column of `m`, as the columns of the result.
    /// Fails with a postcondition error when a column lies outside.
    pub fn coordinate_matrix(&self, m: &RationalMatrix) -> Result<RationalMatrix> {
        let mut cols = Vec::with_capacity(m.cols());
        for (j, col) in m.columns().into_iter().enumerate() {
            match self.coordinates(&col)? {
                Some(c) => cols.push(c),
                None => return Err(Error::Postcondition(format!("column {j} does not lie in the target subspace"))),
            }
        }
        RationalMatrix::from_columns(self.dim(), &cols)
    }
}

fn check_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::Dimension(format!("subspaces live in Q^{} and Q^{}", a.ambient_dim, b.ambient_dim)));
    }
    Ok(())
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// Canonical basis of the null space of `m`.
pub fn kernel_basis(m: &RationalMatrix) -> Subspace {
    let cols = m.cols();
    let echelon = m.rref();
    let mut is_pivot = vec![false; cols];
    for &p in &echelon.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    if free.is_empty() {
        return Subspace::zero(cols);
    }
    let mut basis = RationalMatrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, Rational::from_integer(1.into()));
        for (r, &p) in echelon.pivots.iter().enumerate() {
            let v = echelon.matrix.get(r, f);
            if !v.is_zero() {
                basis.set(p, k, -v.clone());
            }
        }
    }
    Subspace::span(&basis)
}

/// Echelon particular solution of `m x = b` (free variables set to zero), or
/// `None` if the system is inconsistent.
pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows() {
        return Err(Error::Dimension(format!("right-hand side has length {}, matrix has {} rows", b.len(), m.rows())));
    }
    let rhs = RationalMatrix::column_vector(b.to_vec());
    let augmented = RationalMatrix::hstack(m.rows(), &[m, &rhs])?;
    let echelon = augmented.rref();
    if echelon.pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols()];
    for (r, &p) in echelon.pivots.iter().enumerate() {
        x[p] = echelon.matrix.get(r, m.cols()).clone();
    }
    Ok(Some(x))
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    if a.dim() == 0 || b.dim() == 0 {
        return Ok(Subspace::zero(a.ambient_dim));
    }
    // (alpha, beta) with A alpha = B beta
    let neg_b = -b.basis();
    let joint = RationalMatrix::hstack(a.ambient_dim, &[a.basis(), &neg_b])?;
    let ker = kernel_basis(&joint);
    let alphas = ker.basis().row_block(0, a.dim());
    Ok(Subspace::span(&(a.basis() * &alphas)))
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    check_ambient(a, b)?;
    Ok(a.canonicalize().basis == b.canonicalize().basis)
}

/// Is the column space of `m` contained in `target`?
pub fn image_in(m: &RationalMatrix, target: &Subspace) -> Result<bool> {
    if m.rows() != target.ambient_dim {
        return Err(Error::Dimension(format!(
            "map into Q^{} checked against a subspace of Q^{}",
            m.rows(),
            target.ambient_dim
        )));
    }
    if target.canonical {
        for col in m.columns() {
            if !target.contains(&col)? {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let joined = RationalMatrix::hstack(m.rows(), &[target.basis(), m])?;
    Ok(joined.rank() == target.dim())
}

/// Is the column space of `m` exactly `target`?
pub fn surjects_onto(m: &RationalMatrix, target: &Subspace) -> Result<bool> {
    Ok(image_in(m, target)? && m.rank() == target.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::vector;

    fn span_i64(rows: &[&[i64]]) -> Subspace {
        Subspace::span(&RationalMatrix::from_i64(rows))
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::identity(3)).dim(), 0);
        let z = kernel_basis(&RationalMatrix::zeros(2, 3));
        assert!(subspace_equal(&z, &Subspace::full(3)).unwrap());
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.basis(), &RationalMatrix::from_i64(&[&[1], &[-1]]));
    }

    #[test]
    fn solve_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(solve(&id, &vector(&[4, 5])).unwrap(), Some(vector(&[4, 5])));
        assert_eq!(solve(&RationalMatrix::zeros(2, 2), &vector(&[1, 0])).unwrap(), None);
        let row = RationalMatrix::from_i64(&[&[1, 1]]);
        assert_eq!(solve(&row, &vector(&[3])).unwrap(), Some(vector(&[3, 0])));
        assert!(solve(&row, &vector(&[1, 2])).is_err());
    }

    #[test]
    fn intersection_examples() {
        let s = span_i64(&[&[1, 0], &[2, 1], &[0, 3]]);
        assert!(subspace_equal(&intersect(&s, &Subspace::full(3)).unwrap(), &s).unwrap());
        assert_eq!(intersect(&s, &Subspace::zero(3)).unwrap().dim(), 0);
        let e12 = span_i64(&[&[1, 0], &[0, 1], &[0, 0]]);
        let e23 = span_i64(&[&[0, 0], &[1, 0], &[0, 1]]);
        let meet = intersect(&e12, &e23).unwrap();
        assert!(subspace_equal(&meet, &span_i64(&[&[0], &[1], &[0]])).unwrap());
        assert!(intersect(&e12, &Subspace::full(2)).is_err());
    }

    #[test]
    fn equality_examples() {
        let s = span_i64(&[&[1], &[1]]);
        assert!(subspace_equal(&s, &s).unwrap());
        assert!(!subspace_equal(&Subspace::zero(2), &Subspace::full(2)).unwrap());
        assert!(subspace_equal(&s, &span_i64(&[&[2], &[2]])).unwrap());
        let raw = Subspace::from_independent_columns(RationalMatrix::from_i64(&[&[3], &[3]])).unwrap();
        assert!(!raw.is_canonical());
        assert!(subspace_equal(&raw, &s).unwrap());
        assert!(Subspace::from_independent_columns(RationalMatrix::from_i64(&[&[1, 2], &[1, 2]])).is_err());
    }

    #[test]
    fn image_examples() {
        let m = RationalMatrix::from_i64(&[&[1, 7], &[2, 0]]);
        assert!(image_in(&m, &Subspace::full(2)).unwrap());
        assert!(surjects_onto(&RationalMatrix::zeros(2, 3), &Subspace::zero(2)).unwrap());
        let diag = span_i64(&[&[1], &[1]]);
        assert!(surjects_onto(&RationalMatrix::from_i64(&[&[1], &[1]]), &diag).unwrap());
        assert!(!image_in(&m, &diag).unwrap());
        assert!(image_in(&m, &Subspace::full(3)).is_err());
    }

    #[test]
    fn coordinates_in_canonical_basis() {
        let s = span_i64(&[&[1, 0], &[1, 1], &[0, 1]]);
        let c = s.coordinates(&vector(&[2, 5, 3])).unwrap().unwrap();
        assert_eq!(s.basis().mul_vec(&c).unwrap(), vector(&[2, 5, 3]));
        assert_eq!(s.coordinates(&vector(&[1, 0, 0])).unwrap(), None);
    }
}
