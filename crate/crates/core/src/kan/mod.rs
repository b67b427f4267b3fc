//! Horn spaces, Kan conditions and horn fillers.

mod filler;
mod horn;
mod recursive;

use serde::Serialize;

pub use filler::{fill_generalized_horn, fill_horn_linear, generalized_filler_matrix};
pub use horn::{horn_projection, horn_space_direct, HornElement, HornIndex, HornSpace};
pub use recursive::horn_space_recursive;

pub(crate) use horn::{check_level, stacked_faces};

use crate::error::{Error, Result};
use crate::linalg::{image_in, surjects_onto};
use crate::simplicial::FaceMaps;

/// `p^n_I` lands in the horn space and covers it.
pub fn check_generalized_kan<X: FaceMaps + ?Sized>(x: &X, h: &HornIndex) -> Result<bool> {
    let horn = horn_space_direct(x, h)?;
    let p = stacked_faces(x, h.n(), &horn.kept);
    // a projection leaving the horn space has no well-defined codomain
    if !image_in(&p, &horn.space)? {
        return Ok(false);
    }
    surjects_onto(&p, &horn.space)
}

/// The ordinary Kan condition for `Λ^n_i`.
pub fn check_kan<X: FaceMaps + ?Sized>(x: &X, n: usize, i: usize) -> Result<bool> {
    check_level(x, n)?;
    if i > n {
        return Err(Error::OutOfRange(format!("horn vertex {i} is not in [{n}]")));
    }
    check_generalized_kan(x, &HornIndex::ordinary(n, i)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornCheck {
    pub n: usize,
    pub removed: Vec<usize>,
    pub holds: bool,
}

/// Results of every check run over one object, in lexicographic order of
/// `(n, removed)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KanReport {
    pub checks: Vec<HornCheck>,
}

impl KanReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HornCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn report<X: FaceMaps + ?Sized>(x: &X, mut indices: Vec<HornIndex>) -> Result<KanReport> {
    indices.sort();
    indices.dedup();
    let checks = indices
        .into_iter()
        .map(|h| Ok(HornCheck { n: h.n(), removed: h.removed().to_vec(), holds: check_generalized_kan(x, &h)? }))
        .collect::<Result<_>>()?;
    Ok(KanReport { checks })
}

/// Every ordinary horn `Λ^n_i` with `1 <= n <= level`.
pub fn kan_report<X: FaceMaps + ?Sized>(x: &X) -> Result<KanReport> {
    let indices =
        (1..=x.level()).flat_map(|n| (0..=n).map(move |i| HornIndex::ordinary(n, i).expect("in range"))).collect();
    report(x, indices)
}

/// Every shaped horn `{j} ∪ {m+1, ..., n}` with `1 <= n <= level`. This
/// includes the ordinary horns (`m = n`).
pub fn generalized_kan_report<X: FaceMaps + ?Sized>(x: &X) -> Result<KanReport> {
    let indices = (1..=x.level()).flat_map(HornIndex::all_shaped).collect();
    report(x, indices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RationalMatrix;
    use crate::simplicial::{SemiSVS, TruncatedSVS};

    #[test]
    fn constant_and_zero_objects_are_kan() {
        for x in [TruncatedSVS::constant(2, 3), TruncatedSVS::zero(3)] {
            assert!(kan_report(&x).unwrap().all_hold());
            assert!(generalized_kan_report(&x).unwrap().all_hold());
        }
    }

    #[test]
    fn zeroed_face_breaks_kan() {
        let x = TruncatedSVS::constant(1, 1).forget_degeneracies();
        let broken: SemiSVS = x.with_face(1, 0, RationalMatrix::zeros(1, 1)).unwrap();
        assert!(!check_kan(&broken, 1, 1).unwrap());
        assert!(check_kan(&broken, 1, 0).unwrap());
    }

    #[test]
    fn range_errors() {
        let x = TruncatedSVS::constant(1, 2);
        assert!(check_kan(&x, 3, 0).is_err());
        assert!(check_kan(&x, 2, 3).is_err());
        assert!(check_kan(&x, 0, 0).is_err());
    }

    #[test]
    fn report_order_is_lexicographic() {
        let r = generalized_kan_report(&TruncatedSVS::constant(1, 2)).unwrap();
        let keys: Vec<_> = r.checks.iter().map(|c| (c.n, c.removed.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), 2 + 5);
    }
}
