use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{image_in, kernel_basis, Rational, RationalMatrix, Subspace};
use crate::simplicial::FaceMaps;

/// The `(n, I)`-horn: the faces of `Δ^n` whose indices are not in `removed`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HornIndex {
    n: usize,
    removed: Vec<usize>,
}

impl HornIndex {
    /// `removed` may be unsorted and contain repeats; it must leave at least
    /// one face of `Δ^n`.
    pub fn new(n: usize, removed: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("horns start at n = 1".into()));
        }
        let mut removed: Vec<usize> = removed.into_iter().collect();
        removed.sort_unstable();
        removed.dedup();
        if let Some(&bad) = removed.iter().find(|&&r| r > n) {
            return Err(Error::OutOfRange(format!("removed index {bad} is not in [{n}]")));
        }
        if removed.len() == n + 1 {
            return Err(Error::Invalid(format!("horn ({n}, [{n}]) keeps no faces")));
        }
        Ok(Self { n, removed })
    }

    /// The ordinary horn `Λ^n_i`.
    pub fn ordinary(n: usize, i: usize) -> Result<Self> {
        Self::new(n, [i])
    }

    /// `I = {j} ∪ {m+1, ..., n}` with `0 <= j <= m <= n` and `m >= 1`; the kept
    /// faces are `[m] \ {j}`. `m = n` is the ordinary horn `Λ^n_j`.
    pub fn shaped(n: usize, j: usize, m: usize) -> Result<Self> {
        if m == 0 || j > m || m > n {
            return Err(Error::OutOfRange(format!("need 0 <= j <= m <= n and m >= 1, got j = {j}, m = {m}, n = {n}")));
        }
        Self::new(n, std::iter::once(j).chain(m + 1..=n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn removed(&self) -> &[usize] {
        &self.removed
    }

    /// `[n] \ I` in ascending order; this is also the block order of the
    /// horn space's ambient direct sum.
    pub fn kept(&self) -> Vec<usize> {
        (0..=self.n).filter(|k| self.removed.binary_search(k).is_err()).collect()
    }

    /// `(j, m)` when `I = {j} ∪ {m+1, ..., n}`.
    pub fn shape(&self) -> Option<(usize, usize)> {
        let kept = self.kept();
        let top = *kept.last()?;
        let missing: Vec<usize> = (0..=top).filter(|k| kept.binary_search(k).is_err()).collect();
        match missing.as_slice() {
            [] if top < self.n => Some((top + 1, top + 1)),
            [j] => Some((*j, top)),
            _ => None,
        }
    }

    pub fn is_shaped(&self) -> bool {
        self.shape().is_some()
    }

    /// Every shaped index at level `n`, ordered by `(m, j)`.
    pub fn all_shaped(n: usize) -> Vec<HornIndex> {
        (1..=n)
            .flat_map(|m| (0..=m).map(move |j| (j, m)))
            .map(|(j, m)| Self::shaped(n, j, m).expect("in range"))
            .collect()
    }
}

/// The horn space `Λ^n_I(V)`: tuples `(x^k)_{k ∉ I}` of `(n-1)`-simplices with
/// `d_{j1} x^{j2} = d_{j2-1} x^{j1}` for `j1 < j2`, as a subspace of
/// `V_{n-1}^{⊕ kept}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornSpace {
    pub index: HornIndex,
    pub kept: Vec<usize>,
    /// Dimension of one block, `dim V_{n-1}`.
    pub block_dim: usize,
    pub space: Subspace,
}

impl HornSpace {
    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// An element of a horn space, one `(n-1)`-simplex per kept face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornElement {
    pub index: HornIndex,
    pub components: BTreeMap<usize, Vec<Rational>>,
}

impl HornElement {
    pub fn new(index: HornIndex, components: BTreeMap<usize, Vec<Rational>>) -> Result<Self> {
        let kept = index.kept();
        if components.keys().copied().collect::<Vec<_>>() != kept {
            return Err(Error::Invalid(format!("horn element must have components exactly for faces {kept:?}")));
        }
        let mut lens = components.values().map(Vec::len);
        let first = lens.next().unwrap_or(0);
        if lens.any(|l| l != first) {
            return Err(Error::Dimension("horn element components differ in length".into()));
        }
        Ok(Self { index, components })
    }

    /// Splits a concatenated vector (blocks in ascending kept order).
    pub fn from_concatenated(index: HornIndex, block_dim: usize, v: &[Rational]) -> Result<Self> {
        let kept = index.kept();
        if v.len() != kept.len() * block_dim {
            return Err(Error::Dimension(format!(
                "vector of length {} does not split into {} blocks of {block_dim}",
                v.len(),
                kept.len()
            )));
        }
        let components =
            kept.iter().enumerate().map(|(b, &k)| (k, v[b * block_dim..(b + 1) * block_dim].to_vec())).collect();
        Ok(Self { index, components })
    }

    pub fn concatenated(&self) -> Vec<Rational> {
        self.components.values().flatten().cloned().collect()
    }

    pub fn block_dim(&self) -> usize {
        self.components.values().next().map_or(0, Vec::len)
    }
}

pub(crate) fn check_level<X: FaceMaps + ?Sized>(x: &X, n: usize) -> Result<()> {
    if n == 0 || n > x.level() {
        return Err(Error::OutOfRange(format!("level {n} is outside 1..={}", x.level())));
    }
    Ok(())
}

/// Kernel of the stacked compatibility equations.
pub fn horn_space_direct<X: FaceMaps + ?Sized>(x: &X, h: &HornIndex) -> Result<HornSpace> {
    let n = h.n();
    check_level(x, n)?;
    let kept = h.kept();
    let block = x.dim(n - 1);
    let ambient = kept.len() * block;
    let space = if n == 1 {
        Subspace::full(ambient)
    } else {
        let low = x.dim(n - 2);
        let pairs: Vec<(usize, usize)> =
            (0..kept.len()).flat_map(|a| (a + 1..kept.len()).map(move |b| (a, b))).collect();
        let mut eqs = RationalMatrix::zeros(pairs.len() * low, ambient);
        for (row, &(a, b)) in pairs.iter().enumerate() {
            let (j1, j2) = (kept[a], kept[b]);
            // d_{j1}(x^{j2}) - d_{j2-1}(x^{j1}) = 0
            eqs.set_block(row * low, b * block, x.face(n - 1, j1));
            eqs.set_block(row * low, a * block, &-x.face(n - 1, j2 - 1));
        }
        kernel_basis(&eqs)
    };
    Ok(HornSpace { index: h.clone(), kept, block_dim: block, space })
}

/// `∏_{k ∉ I} d_k` stacked in ascending order, without checking its codomain.
pub(crate) fn stacked_faces<X: FaceMaps + ?Sized>(x: &X, n: usize, faces: &[usize]) -> RationalMatrix {
    let blocks: Vec<&RationalMatrix> = faces.iter().map(|&k| x.face(n, k)).collect();
    RationalMatrix::vstack(x.dim(n), &blocks).expect("faces at one level share a source")
}

/// The horn projection `p^n_I : V_n -> V_{n-1}^{⊕ kept}`. Fails with a
/// postcondition error if its image leaves the horn space, which can only
/// happen when face identities are violated.
pub fn horn_projection<X: FaceMaps + ?Sized>(x: &X, h: &HornIndex) -> Result<RationalMatrix> {
    let horn = horn_space_direct(x, h)?;
    let p = stacked_faces(x, h.n(), &horn.kept);
    if !image_in(&p, &horn.space)? {
        return Err(Error::Postcondition(format!(
            "projection for horn ({}, {:?}) leaves the horn space",
            h.n(),
            h.removed()
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kept_and_shape() {
        let h = HornIndex::new(3, [3, 1]).unwrap();
        assert_eq!(h.removed(), &[1, 3]);
        assert_eq!(h.kept(), vec![0, 2]);
        assert_eq!(h.shape(), Some((1, 2)));
        assert_eq!(HornIndex::ordinary(3, 1).unwrap().shape(), Some((1, 3)));
        assert_eq!(HornIndex::ordinary(3, 3).unwrap().shape(), Some((3, 3)));
        assert_eq!(HornIndex::new(3, [0, 2]).unwrap().shape(), None);
        assert_eq!(HornIndex::new(4, [1, 2]).unwrap().shape(), None);
        assert_eq!(HornIndex::new(3, []).unwrap().shape(), None);
    }

    #[test]
    fn shaped_constructor_matches_shape() {
        for n in 1..6 {
            for h in HornIndex::all_shaped(n) {
                let (j, m) = h.shape().unwrap();
                assert_eq!(HornIndex::shaped(n, j, m).unwrap(), h);
            }
        }
        assert_eq!(HornIndex::all_shaped(2).len(), 2 + 3);
    }

    #[test]
    fn invalid_indices() {
        assert!(HornIndex::new(0, []).is_err());
        assert!(HornIndex::new(2, [3]).is_err());
        assert!(HornIndex::new(1, [0, 1]).is_err());
        assert!(HornIndex::shaped(3, 0, 0).is_err());
        assert!(HornIndex::shaped(3, 2, 1).is_err());
    }
}
