//! Horn spaces of the shaped family `I = {j} ∪ {m+1, ..., n}` assembled one
//! face at a time as iterated fiber products.
//!
//! With `n` the level of the simplex and kept faces `[m] \ {j}`:
//!
//! * `m = 1`: one kept face, the horn space is all of `V_{n-1}`.
//! * otherwise the largest kept face `t` (`m` if `j < m`, else `m - 1`) is
//!   adjoined to the horn with the remaining faces `K`, which is the shaped
//!   horn `(j, m - 1)` if `j < m` or `(m - 1, m - 1)` if `j = m`. The new
//!   block must satisfy `d_{t-1}(x^k) = d_k(x^t)` for `k ∈ K`, i.e. the
//!   tuple `(d_{t-1} x^k)_k` equals `p^{n-1}_K(x^t)` in the level-`(n-1)`
//!   horn space with the same kept set `K`.
//!
//! Before each step the lower projection `p^{n-1}_K` is required to surject
//! onto the (recursively built) lower horn space; the construction aborts
//! otherwise.

use std::collections::HashMap;

use super::horn::{check_level, stacked_faces, HornIndex, HornSpace};
use crate::error::{Error, Result};
use crate::linalg::{image_in, kernel_basis, surjects_onto, RationalMatrix, Subspace};
use crate::simplicial::FaceMaps;

type Memo = HashMap<(usize, usize, usize), Subspace>;

pub fn horn_space_recursive<X: FaceMaps + ?Sized>(x: &X, h: &HornIndex) -> Result<HornSpace> {
    let n = h.n();
    check_level(x, n)?;
    let (j, m) = h.shape().ok_or_else(|| {
        Error::Unsupported(format!("recursive construction needs I = {{j, m+1, ..., n}}, got {:?}", h.removed()))
    })?;
    let mut memo = Memo::new();
    let space = build(x, n, j, m, &mut memo)?;
    Ok(HornSpace { index: h.clone(), kept: h.kept(), block_dim: x.dim(n - 1), space })
}

fn build<X: FaceMaps + ?Sized>(x: &X, n: usize, j: usize, m: usize, memo: &mut Memo) -> Result<Subspace> {
    if let Some(s) = memo.get(&(n, j, m)) {
        return Ok(s.clone());
    }
    let block = x.dim(n - 1);
    if m == 1 {
        return Ok(Subspace::full(block));
    }
    let (t, prev) = if j < m { (m, (j, m - 1)) } else { (m - 1, (m - 1, m - 1)) };
    let kept_prev: Vec<usize> = (0..=prev.1).filter(|&k| k != prev.0).collect();
    let previous = build(x, n, prev.0, prev.1, memo)?;

    let lower_horn = build(x, n - 1, prev.0, prev.1, memo)?;
    let lower_proj = stacked_faces(x, n - 1, &kept_prev);
    if !surjects_onto(&lower_proj, &lower_horn)? {
        return Err(Error::Recursion(format!(
            "p^{}_{{{}, {}..}} does not surject onto its horn space",
            n - 1,
            prev.0,
            prev.1 + 1
        )));
    }

    // (d_{t-1} x^k)_{k ∈ K} on the previous horn, in its basis coordinates
    let low = x.dim(n - 2);
    let mut diag = RationalMatrix::zeros(kept_prev.len() * low, kept_prev.len() * block);
    for b in 0..kept_prev.len() {
        diag.set_block(b * low, b * block, x.face(n - 1, t - 1));
    }
    let restricted = &diag * previous.basis();
    if !image_in(&restricted, &lower_horn)? {
        return Err(Error::Recursion(format!(
            "d_{} does not map the level-{n} horn into the level-{} horn",
            t - 1,
            n - 1
        )));
    }

    // fiber product: (a, y) with restricted a = lower_proj y
    let neg_proj = -&lower_proj;
    let system = RationalMatrix::hstack(restricted.rows(), &[&restricted, &neg_proj])?;
    let solutions = kernel_basis(&system);
    let prev_dim = previous.dim();
    let mut embed = RationalMatrix::zeros(previous.ambient_dim() + block, prev_dim + block);
    embed.set_block(0, 0, previous.basis());
    embed.set_block(previous.ambient_dim(), prev_dim, &RationalMatrix::identity(block));
    let space = Subspace::span(&(&embed * solutions.basis()));
    memo.insert((n, j, m), space.clone());
    Ok(space)
}
