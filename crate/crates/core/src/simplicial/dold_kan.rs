//! The Dold–Kan inverse: a simplicial vector space built from a chain complex.
//!
//! Level `n` is the direct sum of copies of `C_k`, one for every
//! order-preserving surjection `[n] -> [k]`. Summands are ordered by `k`
//! ascending and then lexicographically on the surjection written as its
//! value sequence `(η(0), ..., η(n))`.
//!
//! A structure map `θ^*` sends the summand `(η, C_k)` through the epi-mono
//! factorization `η ∘ θ = μ ∘ η'`: identity onto `(η', C_k)` when `μ` is an
//! identity, `(-1)^k ∂_k` onto `(η', C_{k-1})` when `μ` is the last coface
//! `δ_k`, and zero otherwise. The sign makes the top face restricted to the
//! normalized complex equal `(-1)^n ∂_n`, so normalizing with differential
//! `(-1)^n d_n` gives back `∂` itself.

use super::chain::{ChainComplex, ChainMap};
use super::morphism::SimplicialMorphism;
use super::svs::TruncatedSVS;
use crate::error::Result;
use crate::linalg::rational::int;
use crate::linalg::RationalMatrix;

/// All order-preserving surjections `[n] -> [k]` as value sequences, in
/// lexicographic order.
pub fn surjections(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(seq: &mut Vec<usize>, n: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        let last = *seq.last().expect("sequence starts at 0");
        if seq.len() == n + 1 {
            if last == k {
                out.push(seq.clone());
            }
            return;
        }
        let remaining = n + 1 - seq.len();
        for step in 0..=1 {
            let next = last + step;
            // must still be able to reach k
            if next <= k && k - next < remaining {
                seq.push(next);
                extend(seq, n, k, out);
                seq.pop();
            }
        }
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    extend(&mut vec![0], n, k, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Summand layout of one level.
#[derive(Clone, Debug)]
struct Level {
    // (k, η, offset)
    summands: Vec<(usize, Vec<usize>, usize)>,
    dim: usize,
}

impl Level {
    fn new(c: &ChainComplex, n: usize) -> Self {
        let mut summands = Vec::new();
        let mut offset = 0;
        for k in 0..=n.min(c.top()) {
            for eta in surjections(n, k) {
                summands.push((k, eta, offset));
                offset += c.dim(k);
            }
        }
        Self { summands, dim: offset }
    }

    fn offset_of(&self, k: usize, eta: &[usize]) -> usize {
        self.summands
            .iter()
            .find(|(kk, e, _)| *kk == k && e.as_slice() == eta)
            .map(|(_, _, o)| *o)
            .expect("summand present in level layout")
    }
}

/// Matrix of `θ^* : V_n -> V_m` for `θ : [m] -> [n]` given by its values.
fn structure_map(c: &ChainComplex, levels: &[Level], theta: &[usize], n: usize) -> RationalMatrix {
    let m = theta.len() - 1;
    let (src, dst) = (&levels[n], &levels[m]);
    let mut out = RationalMatrix::zeros(dst.dim, src.dim);
    for (k, eta, offset) in &src.summands {
        let k = *k;
        let composite: Vec<usize> = theta.iter().map(|&t| eta[t]).collect();
        let mut hit = vec![false; k + 1];
        for &v in &composite {
            hit[v] = true;
        }
        let missing: Vec<usize> = (0..=k).filter(|&v| !hit[v]).collect();
        match missing.as_slice() {
            [] => {
                let target = dst.offset_of(k, &composite);
                out.set_block(target, *offset, &RationalMatrix::identity(c.dim(k)));
            }
            [t] if *t == k => {
                let target = dst.offset_of(k - 1, &composite);
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                out.set_block(target, *offset, &c.differential(k).scale(&sign));
            }
            _ => {}
        }
    }
    out
}

pub(crate) fn coface(n: usize, i: usize) -> Vec<usize> {
    // δ_i : [n-1] -> [n], skipping i
    (0..n).map(|t| if t < i { t } else { t + 1 }).collect()
}

pub(crate) fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    // σ_i : [n+1] -> [n], hitting i twice
    (0..=n + 1).map(|t| if t <= i { t } else { t - 1 }).collect()
}

/// Dold–Kan inverse of `c`, truncated at `level`. Degrees of `c` above
/// `level` are ignored; levels above `c.top()` only see degrees `<= top`.
pub fn dold_kan_inverse(c: &ChainComplex, level: usize) -> TruncatedSVS {
    let levels: Vec<Level> = (0..=level).map(|n| Level::new(c, n)).collect();
    let dims = levels.iter().map(|l| l.dim).collect();
    let faces = (1..=level).map(|n| (0..=n).map(|i| structure_map(c, &levels, &coface(n, i), n)).collect()).collect();
    let degens =
        (0..level).map(|n| (0..=n).map(|i| structure_map(c, &levels, &codegeneracy(n, i), n)).collect()).collect();
    TruncatedSVS::new(dims, faces, degens).expect("Dold–Kan levels are consistently shaped")
}

/// `Σ_k binom(n, k) · c_k`, the dimension of level `n` of the Dold–Kan inverse.
pub fn dold_kan_dim(c: &ChainComplex, n: usize) -> usize {
    (0..=n.min(c.top())).map(|k| binomial(n, k) * c.dim(k)).sum()
}

/// The simplicial morphism induced by a chain map: `φ_k` on every summand
/// `(η, C_k)`.
pub fn dold_kan_morphism(phi: &ChainMap, level: usize) -> Result<SimplicialMorphism> {
    let (c, d) = (phi.source(), phi.target());
    let src = dold_kan_inverse(c, level);
    let dst = dold_kan_inverse(d, level);
    let comps = (0..=level)
        .map(|n| {
            let (ls, ld) = (Level::new(c, n), Level::new(d, n));
            let mut m = RationalMatrix::zeros(ld.dim, ls.dim);
            for ((k, _, so), (_, _, to)) in ls.summands.iter().zip(&ld.summands) {
                m.set_block(*to, *so, phi.component(*k));
            }
            m
        })
        .collect();
    SimplicialMorphism::new(src, dst, comps)
}
