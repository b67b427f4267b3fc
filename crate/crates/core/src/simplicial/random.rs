//! Seeded generators for chain complexes with known homology.
//!
//! A complex is the direct sum of elementary pieces, spheres `S(n)` (one
//! generator in degree `n`, no differential) and disks `D(n)` (generators in
//! degrees `n` and `n - 1` joined by the identity). Each degree is then
//! rewritten in a random unimodular basis.
//!
//! The random source is splitmix64, so the output is reproducible in any
//! language:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! return z ^ (z >> 31)
//! ```
//!
//! A small integer in `[-3, 3]` is `(next % 7) - 3`. For every degree
//! `0..=top` in turn, the basis change is `L * U` with `L` unit lower and `U`
//! unit upper triangular; the strictly-lower entries of `L` are drawn in
//! row-major order, then the strictly-upper entries of `U`. A degree of
//! dimension 0 or 1 consumes no draws. Within a degree the elementary basis
//! lists sphere generators, then disk tops `D(n)`, then disk bottoms `D(n+1)`.

use std::fmt;
use std::str::FromStr;

use super::chain::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::rational::int;
use crate::linalg::{kernel_basis, Rational, RationalMatrix};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `[-3, 3]`.
    pub fn small_int(&mut self) -> i64 {
        (self.next_u64() % 7) as i64 - 3
    }

    /// Integer in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn small_vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| int(self.small_int())).collect()
    }
}

/// How many spheres and disks to put in each degree.
///
/// Text form: comma-separated tokens `S<n>` / `D<n>`, repeated as needed,
/// e.g. `S0,D1,S2` or `S1,S1,D2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexRecipe {
    /// `spheres[n]` copies of `S(n)`.
    pub spheres: Vec<usize>,
    /// `disks[n]` copies of `D(n)`; `disks[0]` must be zero.
    pub disks: Vec<usize>,
}

impl ComplexRecipe {
    pub fn sphere(mut self, n: usize) -> Self {
        grow(&mut self.spheres, n);
        self.spheres[n] += 1;
        self
    }

    pub fn disk(mut self, n: usize) -> Self {
        assert!(n >= 1, "disks start in degree 1");
        grow(&mut self.disks, n);
        self.disks[n] += 1;
        self
    }

    fn count(v: &[usize], n: usize) -> usize {
        v.get(n).copied().unwrap_or(0)
    }

    pub fn top(&self) -> usize {
        let s = self.spheres.iter().rposition(|&c| c > 0).unwrap_or(0);
        let d = self.disks.iter().rposition(|&c| c > 0).unwrap_or(0);
        s.max(d)
    }

    /// Dimension of degree `n` of the assembled complex.
    pub fn dim(&self, n: usize) -> usize {
        Self::count(&self.spheres, n) + Self::count(&self.disks, n) + Self::count(&self.disks, n + 1)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|n| self.dim(n)).collect()
    }

    /// Homology dimensions: one per sphere.
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|n| Self::count(&self.spheres, n)).collect()
    }

    /// The direct sum in its elementary basis, before any basis change.
    pub fn elementary_complex(&self) -> ChainComplex {
        let top = self.top();
        let dims = self.dims();
        let diffs = (1..=top)
            .map(|n| {
                let mut d = RationalMatrix::zeros(dims[n - 1], dims[n]);
                let tops_start = Self::count(&self.spheres, n);
                let bottoms_start = Self::count(&self.spheres, n - 1) + Self::count(&self.disks, n - 1);
                for t in 0..Self::count(&self.disks, n) {
                    d.set(bottoms_start + t, tops_start + t, int(1));
                }
                d
            })
            .collect();
        ChainComplex::new(dims, diffs).expect("elementary pieces square to zero")
    }
}

fn grow(v: &mut Vec<usize>, n: usize) {
    if v.len() <= n {
        v.resize(n + 1, 0);
    }
}

impl FromStr for ComplexRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut recipe = ComplexRecipe::default();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (kind, degree) = token.split_at(1);
            let n: usize = degree.parse().map_err(|_| Error::Invalid(format!("bad recipe token {token:?}")))?;
            recipe = match kind {
                "S" | "s" => recipe.sphere(n),
                "D" | "d" if n >= 1 => recipe.disk(n),
                _ => return Err(Error::Invalid(format!("bad recipe token {token:?}"))),
            };
        }
        Ok(recipe)
    }
}

impl fmt::Display for ComplexRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        for n in 0..=self.top() {
            tokens.extend(std::iter::repeat_n(format!("S{n}"), Self::count(&self.spheres, n)));
            tokens.extend(std::iter::repeat_n(format!("D{n}"), Self::count(&self.disks, n)));
        }
        write!(f, "{}", tokens.join(","))
    }
}

/// Unimodular `L * U` with entries of both factors drawn from `[-3, 3]`.
fn unimodular(dim: usize, rng: &mut SplitMix64) -> RationalMatrix {
    let mut lower = RationalMatrix::identity(dim);
    for i in 0..dim {
        for j in 0..i {
            lower.set(i, j, int(rng.small_int()));
        }
    }
    let mut upper = RationalMatrix::identity(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            upper.set(i, j, int(rng.small_int()));
        }
    }
    &lower * &upper
}

fn inverse(m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows();
    let aug = RationalMatrix::hstack(n, &[m, &RationalMatrix::identity(n)]).expect("square");
    let e = aug.rref();
    assert_eq!(e.pivots, (0..n).collect::<Vec<_>>(), "unimodular matrix is invertible");
    e.matrix.column_block(n, n)
}

/// Basis changes `P_n` (old coordinates -> new coordinates) for every degree.
fn basis_changes(dims: &[usize], seed: u64) -> Vec<RationalMatrix> {
    let mut rng = SplitMix64::new(seed);
    dims.iter().map(|&d| unimodular(d, &mut rng)).collect()
}

/// The elementary complex of `recipe` rewritten in seeded random bases:
/// `∂'_n = P_{n-1} ∂_n P_n^{-1}`.
pub fn random_chain_complex(recipe: &ComplexRecipe, seed: u64) -> ChainComplex {
    scrambled(recipe, seed).0
}

fn scrambled(recipe: &ComplexRecipe, seed: u64) -> (ChainComplex, Vec<RationalMatrix>) {
    let base = recipe.elementary_complex();
    let changes = basis_changes(base.dims(), seed);
    let diffs = (1..=base.top()).map(|n| &(&changes[n - 1] * base.differential(n)) * &inverse(&changes[n])).collect();
    let c = ChainComplex::new(base.dims().to_vec(), diffs).expect("conjugation preserves d^2 = 0");
    (c, changes)
}

/// A random chain map `source -> target`: a small-integer combination of a
/// basis of the space of all chain maps (computed as a kernel).
pub fn random_chain_map(source: &ChainComplex, target: &ChainComplex, rng: &mut SplitMix64) -> Result<ChainMap> {
    if source.top() != target.top() {
        return Err(Error::Dimension("chain map needs equal top degrees".into()));
    }
    let top = source.top();
    // unknowns: entries of every component, row-major, degree by degree
    let offsets: Vec<usize> = (0..=top)
        .scan(0, |acc, n| {
            let o = *acc;
            *acc += target.dim(n) * source.dim(n);
            Some(o)
        })
        .collect();
    let unknowns = offsets.last().map_or(0, |o| o + target.dim(top) * source.dim(top));
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for n in 1..=top {
        let (sd, td) = (source.differential(n), target.differential(n));
        // (td f_n - f_{n-1} sd)[r][c] = 0 for r < target.dim(n-1), c < source.dim(n)
        for r in 0..target.dim(n - 1) {
            for c in 0..source.dim(n) {
                let mut eq = vec![Rational::from_integer(0.into()); unknowns];
                for k in 0..target.dim(n) {
                    eq[offsets[n] + k * source.dim(n) + c] += td.get(r, k);
                }
                for k in 0..source.dim(n - 1) {
                    eq[offsets[n - 1] + r * source.dim(n - 1) + k] -= sd.get(k, c);
                }
                rows.push(eq);
            }
        }
    }
    let system = RationalMatrix::from_rows(unknowns, rows)?;
    let space = kernel_basis(&system);
    let coeffs = rng.small_vector(space.dim());
    let flat = space.basis().mul_vec(&coeffs)?;
    let comps = (0..=top)
        .map(|n| {
            let (r, c) = (target.dim(n), source.dim(n));
            RationalMatrix::new(r, c, flat[offsets[n]..offsets[n] + r * c].to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    ChainMap::new(source.clone(), target.clone(), comps)
}

/// A recipe whose Dold–Kan inverse stays within `max_dim` at every level up
/// to `level`. Draws degrees `0..=level`.
pub fn random_recipe(rng: &mut SplitMix64, level: usize, max_dim: usize) -> ComplexRecipe {
    loop {
        let mut recipe = ComplexRecipe::default();
        let pieces = 1 + rng.below(4) as usize;
        for _ in 0..pieces {
            let n = rng.below(level as u64 + 1) as usize;
            recipe = if n >= 1 && rng.below(2) == 0 { recipe.disk(n) } else { recipe.sphere(n) };
        }
        let c = recipe.elementary_complex();
        if super::dold_kan::dold_kan_dim(&c, level) <= max_dim {
            return recipe;
        }
    }
}
