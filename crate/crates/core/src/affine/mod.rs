//! Piecewise-affine simplicial objects: every level is a finite disjoint
//! union of rational affine spaces and every structure map sends each
//! component affinely into a single target component.

mod example;
mod profile;

pub use example::build_example_5_1;
pub use profile::{horn_profile, local_kan_check, tangent_at_base, HornPiece, HornProfile, LocalKanReport};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::simplicial::{FaceMaps, TruncatedSVS, ValidationReport};

/// One component's image: `x ↦ matrix · x + shift` in component `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub to: usize,
    pub matrix: RationalMatrix,
    pub shift: Vec<Rational>,
}

impl AffineMap {
    pub fn linear(to: usize, matrix: RationalMatrix) -> Self {
        let shift = vec![Rational::zero(); matrix.rows()];
        Self { to, matrix, shift }
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        let mut y = self.matrix.mul_vec(x).expect("shape checked on construction");
        for (a, b) in y.iter_mut().zip(&self.shift) {
            *a += b;
        }
        y
    }

    /// `self` after `first`.
    fn after(&self, first: &AffineMap) -> AffineMap {
        AffineMap { to: self.to, matrix: &self.matrix * &first.matrix, shift: self.apply(&first.shift) }
    }

    fn is_identity_on(&self, component: usize) -> bool {
        self.to == component && self.matrix.is_identity() && self.shift.iter().all(Zero::is_zero)
    }
}

/// A structure map given componentwise: entry `c` is the image of component `c`.
pub type Routing = Vec<AffineMap>;

fn compose(first: &Routing, second: &Routing) -> Routing {
    first.iter().map(|f| second[f.to].after(f)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basepoint {
    pub component: usize,
    pub coords: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSimplicialObject {
    // components[n][c] = dimension of component c at level n
    components: Vec<Vec<usize>>,
    // faces[n][i] = d_i^n, faces[0] empty
    faces: Vec<Vec<Routing>>,
    // degeneracies[n][i] = s_i^n for n < level
    degeneracies: Vec<Vec<Routing>>,
    basepoint: Basepoint,
}

fn check_routing(what: &str, r: &Routing, source: &[usize], target: &[usize]) -> Result<()> {
    if r.len() != source.len() {
        return Err(Error::Dimension(format!(
            "{what} routes {} components, the source level has {}",
            r.len(),
            source.len()
        )));
    }
    for (c, m) in r.iter().enumerate() {
        let Some(&to_dim) = target.get(m.to) else {
            return Err(Error::OutOfRange(format!("{what} sends component {c} to missing component {}", m.to)));
        };
        if m.matrix.shape() != (to_dim, source[c]) || m.shift.len() != to_dim {
            return Err(Error::Dimension(format!(
                "{what} on component {c} has the wrong shape for {} -> {to_dim}",
                source[c]
            )));
        }
    }
    Ok(())
}

impl AffineSimplicialObject {
    /// `faces[n-1][i]` is `d_i^n` for `n = 1..=level`; `degeneracies[n][i]` is
    /// `s_i^n` for `n = 0..level`.
    pub fn new(
        components: Vec<Vec<usize>>,
        faces: Vec<Vec<Routing>>,
        degeneracies: Vec<Vec<Routing>>,
        basepoint: Basepoint,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("an affine object needs at least level 0".into()));
        }
        let level = components.len() - 1;
        if faces.len() != level || degeneracies.len() != level {
            return Err(Error::Dimension(format!("level {level} needs {level} rows of faces and degeneracies")));
        }
        for (k, row) in faces.iter().enumerate() {
            let n = k + 1;
            if row.len() != n + 1 {
                return Err(Error::Dimension(format!("level {n} needs {} faces", n + 1)));
            }
            for (i, r) in row.iter().enumerate() {
                check_routing(&format!("d_{i}^{n}"), r, &components[n], &components[n - 1])?;
            }
        }
        for (n, row) in degeneracies.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Dimension(format!("level {n} needs {} degeneracies", n + 1)));
            }
            for (i, r) in row.iter().enumerate() {
                check_routing(&format!("s_{i}^{n}"), r, &components[n], &components[n + 1])?;
            }
        }
        match components[0].get(basepoint.component) {
            Some(&d) if d == basepoint.coords.len() => {}
            _ => return Err(Error::Invalid("basepoint does not fit a level-0 component".into())),
        }
        let mut faces = faces;
        faces.insert(0, Vec::new());
        Ok(Self { components, faces, degeneracies, basepoint })
    }

    /// One component per level, no translations, basepoint at the origin.
    pub fn from_svs(x: &TruncatedSVS) -> Self {
        let components = x.dims().iter().map(|&d| vec![d]).collect();
        let faces = (1..=x.level())
            .map(|n| (0..=n).map(|i| vec![AffineMap::linear(0, x.face(n, i).clone())]).collect())
            .collect();
        let degens = (0..x.level())
            .map(|n| (0..=n).map(|i| vec![AffineMap::linear(0, x.degeneracy(n, i).clone())]).collect())
            .collect();
        let basepoint = Basepoint { component: 0, coords: vec![Rational::zero(); x.dim(0)] };
        Self::new(components, faces, degens, basepoint).expect("linear object is well-shaped")
    }

    pub fn level(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self, n: usize) -> &[usize] {
        &self.components[n]
    }

    pub fn all_components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn face(&self, n: usize, i: usize) -> &Routing {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &Routing {
        &self.degeneracies[n][i]
    }

    pub fn basepoint(&self) -> &Basepoint {
        &self.basepoint
    }

    pub fn with_face(&self, n: usize, i: usize, routing: Routing) -> Result<Self> {
        let mut faces: Vec<Vec<Routing>> = self.faces[1..].to_vec();
        *faces
            .get_mut(n.wrapping_sub(1))
            .and_then(|row| row.get_mut(i))
            .ok_or_else(|| Error::OutOfRange(format!("no face d_{i}^{n}")))? = routing;
        Self::new(self.components.clone(), faces, self.degeneracies.clone(), self.basepoint.clone())
    }

    /// The point `s_0 ... s_0 (basepoint)` at level `n`.
    pub fn base_image(&self, n: usize) -> Basepoint {
        let mut p = self.basepoint.clone();
        for k in 0..n {
            let s = &self.degeneracies[k][0][p.component];
            p = Basepoint { component: s.to, coords: s.apply(&p.coords) };
        }
        p
    }

    /// Checks every simplicial identity componentwise, both the routing and
    /// the affine parts, and that every structure map sends the degenerate
    /// basepoint images to one another.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let level = self.level();
        for n in 1..level {
            for j in 1..=n + 1 {
                for i in 0..j {
                    if compose(self.face(n + 1, j), self.face(n, i))
                        != compose(self.face(n + 1, i), self.face(n, j - 1))
                    {
                        report.push("d_i d_j = d_{j-1} d_i", n + 1, i, j);
                    }
                }
            }
        }
        for n in 1..level {
            for j in 0..n {
                for i in 0..=j {
                    let lhs = compose(self.degeneracy(n - 1, j), self.degeneracy(n, i));
                    let rhs = compose(self.degeneracy(n - 1, i), self.degeneracy(n, j + 1));
                    if lhs != rhs {
                        report.push("s_i s_j = s_{j+1} s_i", n - 1, i, j);
                    }
                }
            }
        }
        for n in 1..=level {
            for j in 0..n {
                for i in 0..=n {
                    let lhs = compose(self.degeneracy(n - 1, j), self.face(n, i));
                    let (ok, identity) = if i < j {
                        let rhs = compose(self.face(n - 1, i), self.degeneracy(n - 2, j - 1));
                        (lhs == rhs, "d_i s_j = s_{j-1} d_i")
                    } else if i == j || i == j + 1 {
                        (lhs.iter().enumerate().all(|(c, m)| m.is_identity_on(c)), "d_i s_j = id")
                    } else {
                        let rhs = compose(self.face(n - 1, i - 1), self.degeneracy(n - 2, j));
                        (lhs == rhs, "d_i s_j = s_j d_{i-1}")
                    };
                    if !ok {
                        report.push(identity, n - 1, i, j);
                    }
                }
            }
        }
        let base: Vec<Basepoint> = (0..=level).map(|n| self.base_image(n)).collect();
        let moves = |m: &AffineMap, from: &Basepoint, to: &Basepoint| {
            m.to == to.component && m.apply(&from.coords) == to.coords
        };
        for n in 1..=level {
            for i in 0..=n {
                if !moves(&self.face(n, i)[base[n].component], &base[n], &base[n - 1]) {
                    report.push("d_i fixes the basepoint", n, i, i);
                }
            }
        }
        for n in 0..level {
            for i in 0..=n {
                if !moves(&self.degeneracy(n, i)[base[n].component], &base[n], &base[n + 1]) {
                    report.push("s_i fixes the basepoint", n, i, i);
                }
            }
        }
        report
    }
}

pub fn validate_affine(a: &AffineSimplicialObject) -> ValidationReport {
    a.validate()
}
