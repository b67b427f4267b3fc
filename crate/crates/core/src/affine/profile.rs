use std::collections::BTreeSet;

use serde::Serialize;

use super::AffineSimplicialObject;
use crate::error::{Error, Result};
use crate::kan::{generalized_kan_report, kan_report, HornIndex, KanReport};
use crate::linalg::{kernel_basis, solve, Rational, RationalMatrix};
use crate::simplicial::TruncatedSVS;

/// One choice of component for every kept face, with the dimension of the
/// matching horn tuples (`None` when there are none).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornPiece {
    pub assignment: Vec<usize>,
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornProfile {
    pub n: usize,
    pub removed: Vec<usize>,
    pub kept: Vec<usize>,
    /// Lexicographic in the assignment.
    pub pieces: Vec<HornPiece>,
    pub dims_present: BTreeSet<usize>,
    /// At most one dimension occurs among the nonempty pieces.
    pub manifold_flag: bool,
}

impl HornProfile {
    /// Dimensions of the nonempty pieces, sorted.
    pub fn dimension_multiset(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self.pieces.iter().filter_map(|p| p.dim).collect();
        dims.sort_unstable();
        dims
    }
}

fn piece_dim(a: &AffineSimplicialObject, n: usize, kept: &[usize], assignment: &[usize]) -> Option<usize> {
    let dims: Vec<usize> = assignment.iter().map(|&c| a.components(n - 1)[c]).collect();
    let offsets: Vec<usize> = dims.iter().scan(0, |acc, d| Some(std::mem::replace(acc, *acc + d))).collect();
    let vars: usize = dims.iter().sum();
    if n == 1 {
        return Some(vars);
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for b in 0..kept.len() {
        for a_ in 0..b {
            let (j1, j2) = (kept[a_], kept[b]);
            // d_{j1}(x^{j2}) = d_{j2-1}(x^{j1})
            let f = &a.face(n - 1, j1)[assignment[b]];
            let g = &a.face(n - 1, j2 - 1)[assignment[a_]];
            if f.to != g.to {
                return None;
            }
            for r in 0..f.matrix.rows() {
                let mut row = vec![Rational::default(); vars];
                for c in 0..dims[b] {
                    row[offsets[b] + c] += f.matrix.get(r, c);
                }
                for c in 0..dims[a_] {
                    row[offsets[a_] + c] -= g.matrix.get(r, c);
                }
                rows.push(row);
                rhs.push(&g.shift[r] - &f.shift[r]);
            }
        }
    }
    let system = RationalMatrix::from_rows(vars, rows).expect("rows have the variable count");
    solve(&system, &rhs).expect("shapes agree")?;
    Some(kernel_basis(&system).dim())
}

/// Solves the compatibility equations separately for every assignment of
/// components to the kept faces.
pub fn horn_profile(a: &AffineSimplicialObject, h: &HornIndex) -> Result<HornProfile> {
    let n = h.n();
    if n > a.level() {
        return Err(Error::OutOfRange(format!("level {n} is outside 1..={}", a.level())));
    }
    let kept = h.kept();
    let count = a.components(n - 1).len();
    let mut pieces = Vec::new();
    let mut assignment = vec![0; kept.len()];
    loop {
        pieces.push(HornPiece { assignment: assignment.clone(), dim: piece_dim(a, n, &kept, &assignment) });
        // odometer, last position fastest
        let Some(pos) = (0..kept.len()).rev().find(|&p| assignment[p] + 1 < count) else { break };
        assignment[pos] += 1;
        for later in &mut assignment[pos + 1..] {
            *later = 0;
        }
    }
    let dims_present: BTreeSet<usize> = pieces.iter().filter_map(|p| p.dim).collect();
    Ok(HornProfile {
        n,
        removed: h.removed().to_vec(),
        kept,
        pieces,
        manifold_flag: dims_present.len() <= 1,
        dims_present,
    })
}

/// The linear parts of all structure maps along the components that contain
/// the degenerate images of the basepoint.
pub fn tangent_at_base(a: &AffineSimplicialObject) -> Result<TruncatedSVS> {
    let level = a.level();
    let chain: Vec<usize> = (0..=level).map(|n| a.base_image(n).component).collect();
    let dims = (0..=level).map(|n| a.components(n)[chain[n]]).collect();
    let mut faces = Vec::new();
    for n in 1..=level {
        let mut row = Vec::new();
        for i in 0..=n {
            let m = &a.face(n, i)[chain[n]];
            if m.to != chain[n - 1] {
                return Err(Error::Invalid(format!("d_{i}^{n} moves the basepoint off its component chain")));
            }
            row.push(m.matrix.clone());
        }
        faces.push(row);
    }
    let mut degens = Vec::new();
    for n in 0..level {
        let mut row = Vec::new();
        for i in 0..=n {
            let m = &a.degeneracy(n, i)[chain[n]];
            if m.to != chain[n + 1] {
                return Err(Error::Invalid(format!("s_{i}^{n} moves the basepoint off its component chain")));
            }
            row.push(m.matrix.clone());
        }
        degens.push(row);
    }
    TruncatedSVS::new(dims, faces, degens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalKanReport {
    pub kan: KanReport,
    pub generalized: KanReport,
}

impl LocalKanReport {
    pub fn all_hold(&self) -> bool {
        self.kan.all_hold() && self.generalized.all_hold()
    }
}

/// Ordinary and shaped Kan conditions for the linearization at the base.
pub fn local_kan_check(a: &AffineSimplicialObject) -> Result<LocalKanReport> {
    let t = tangent_at_base(a)?;
    Ok(LocalKanReport { kan: kan_report(&t)?, generalized: generalized_kan_report(&t)? })
}
