//! A simplicial object that is not Kan even though all of its pieces are
//! lines.
//!
//! Level `n` has one line for every pair `(η, k)` with `η : [n] -> [k]` an
//! order-preserving surjection: the degenerate image under `η` of the
//! nondegenerate `k`-simplices `R_(k)` (with `R_(0) = X_0`). Every face of
//! `R_(k)`, `k >= 1`, is the constant map onto `0 ∈ R_(k-1)`; everything else
//! is the identity between lines. Components are ordered like the summands of
//! the Dold–Kan inverse.

use std::collections::BTreeMap;

use super::{AffineMap, AffineSimplicialObject, Basepoint, Routing};
use crate::linalg::rational::vector;
use crate::linalg::RationalMatrix;
use crate::simplicial::{codegeneracy, coface, surjections};

fn layout(n: usize) -> BTreeMap<(usize, Vec<usize>), usize> {
    (0..=n)
        .flat_map(|k| surjections(n, k).into_iter().map(move |eta| (k, eta)))
        .enumerate()
        .map(|(c, key)| (key, c))
        .collect()
}

/// The routing of `θ^*` for `θ : [m] -> [n]` given by its values.
fn structure_map(theta: &[usize], n: usize) -> Routing {
    let m = theta.len() - 1;
    let (src, dst) = (layout(n), layout(m));
    let mut by_index: Vec<_> = src.into_iter().map(|(key, c)| (c, key)).collect();
    by_index.sort();
    by_index
        .into_iter()
        .map(|(_, (k, eta))| {
            let composite: Vec<usize> = theta.iter().map(|&t| eta[t]).collect();
            let missing: Vec<usize> = (0..=k).filter(|v| !composite.contains(v)).collect();
            match missing.as_slice() {
                [] => AffineMap::linear(dst[&(k, composite)], RationalMatrix::identity(1)),
                [t] => {
                    let reduced = composite.iter().map(|&v| if v > *t { v - 1 } else { v }).collect();
                    AffineMap::linear(dst[&(k - 1, reduced)], RationalMatrix::zeros(1, 1))
                }
                _ => unreachable!("a single coface misses at most one vertex"),
            }
        })
        .collect()
}

pub fn build_example_5_1(level: usize) -> AffineSimplicialObject {
    let components = (0..=level).map(|n| vec![1; 1 << n]).collect();
    let faces = (1..=level).map(|n| (0..=n).map(|i| structure_map(&coface(n, i), n)).collect()).collect();
    let degens = (0..level).map(|n| (0..=n).map(|i| structure_map(&codegeneracy(n, i), n)).collect()).collect();
    let basepoint = Basepoint { component: 0, coords: vector(&[0]) };
    AffineSimplicialObject::new(components, faces, degens, basepoint).expect("well-shaped by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn level_one_slice() {
        let a = build_example_5_1(2);
        assert_eq!(a.components(1), &[1, 1]);
        // s_0 onto the degenerate copy R_(0)
        assert_eq!(a.degeneracy(0, 0)[0], AffineMap::linear(0, RationalMatrix::identity(1)));
        for i in 0..=1 {
            assert_eq!(a.face(1, i)[0], AffineMap::linear(0, RationalMatrix::identity(1)));
            let on_r1 = &a.face(1, i)[1];
            assert_eq!(on_r1.to, 0);
            assert_eq!(on_r1.apply(&[int(5)]), vec![int(0)]);
        }
    }

    #[test]
    fn faces_of_the_new_copy_hit_zero_in_the_previous_one() {
        let a = build_example_5_1(3);
        // R_(2) is the last component at level 2, R_(1) the last at level 1
        for i in 0..=2 {
            assert_eq!(a.face(2, i)[3].to, 1);
            assert!(a.face(2, i)[3].matrix.is_zero());
        }
    }

    #[test]
    fn example_is_valid() {
        for level in 2..=4 {
            assert!(build_example_5_1(level).validate().is_valid(), "level {level}");
        }
    }
}
