use super::horn::{check_level, horn_projection, horn_space_direct, HornElement, HornIndex};
use crate::error::{Error, Result};
use crate::linalg::rational::int;
use crate::linalg::{solve, Rational, RationalMatrix};
use crate::simplicial::{FaceMaps, TruncatedSVS};

/// The closed-form filler for the horn `I = {j} ∪ {m+1, ..., n}` as a matrix
/// from the horn's ambient sum `V_{n-1}^{⊕ ([m] \ {j})}` to `V_n`:
///
/// ```text
/// v = Σ_{l=0}^{m-1} (-1)^l Σ_{j_0 < ... < j_l in [m] \ {j}}
///         s_{j_l} d_{j_l} ... s_{j_1} d_{j_1} s_{j_0} (v^{j_0})
/// ```
///
/// Each word is applied right to left, starting with `s_{j_0}`.
pub fn generalized_filler_matrix(x: &TruncatedSVS, n: usize, j: usize, m: usize) -> Result<RationalMatrix> {
    check_level(x, n)?;
    if m == 0 || j > m || m >= n {
        return Err(Error::OutOfRange(format!(
            "closed-form filler needs 0 <= j <= m < n and m >= 1, got j = {j}, m = {m}, n = {n}"
        )));
    }
    let kept: Vec<usize> = (0..=m).filter(|&k| k != j).collect();
    let block = x.dim(n - 1);
    let mut filler = RationalMatrix::zeros(x.dim(n), kept.len() * block);
    for mask in 1u32..(1 << kept.len()) {
        let word: Vec<usize> = (0..kept.len()).filter(|b| mask & (1 << b) != 0).collect();
        let first = word[0];
        let mut term = x.degeneracy(n - 1, kept[first]).clone();
        for &b in &word[1..] {
            let t = kept[b];
            term = &(x.degeneracy(n - 1, t) * x.face(n, t)) * &term;
        }
        let sign = if (word.len() - 1).is_multiple_of(2) { int(1) } else { int(-1) };
        let mut acc = filler.column_block(first * block, block);
        acc = &acc + &term.scale(&sign);
        filler.set_block(0, first * block, &acc);
    }
    Ok(filler)
}

/// Fills a horn element of the shaped horn `(n, {j, m+1, ..., n})` with
/// `m < n` using the closed-form alternating sum, and checks the result's
/// faces.
pub fn fill_generalized_horn(x: &TruncatedSVS, n: usize, m: usize, j: usize, e: &HornElement) -> Result<Vec<Rational>> {
    let index = HornIndex::shaped(n, j, m)?;
    if e.index != index {
        return Err(Error::Invalid(format!(
            "element belongs to horn ({}, {:?}), expected ({n}, {:?})",
            e.index.n(),
            e.index.removed(),
            index.removed()
        )));
    }
    let filler = generalized_filler_matrix(x, n, j, m)?;
    let horn = horn_space_direct(x, &index)?;
    let v = e.concatenated();
    if v.len() != horn.ambient_dim() {
        return Err(Error::Dimension(format!(
            "element has {} coordinates, horn ambient has {}",
            v.len(),
            horn.ambient_dim()
        )));
    }
    if !horn.space.contains(&v)? {
        return Err(Error::NotInHornSpace(format!("({n}, {:?})", index.removed())));
    }
    let filled = filler.mul_vec(&v)?;
    for (&i, expected) in &e.components {
        if &x.face(n, i).mul_vec(&filled)? != expected {
            return Err(Error::Postcondition(format!("d_{i} of the filler differs from the horn component")));
        }
    }
    Ok(filled)
}

/// Any simplex whose kept faces reproduce `e`, via the echelon solution of
/// `p^n_I v = e`.
pub fn fill_horn_linear<X: FaceMaps + ?Sized>(x: &X, e: &HornElement) -> Result<Vec<Rational>> {
    let horn = horn_space_direct(x, &e.index)?;
    let target = e.concatenated();
    if target.len() != horn.ambient_dim() {
        return Err(Error::Dimension(format!(
            "element has {} coordinates, horn ambient has {}",
            target.len(),
            horn.ambient_dim()
        )));
    }
    if !horn.space.contains(&target)? {
        return Err(Error::NotInHornSpace(format!("({}, {:?})", e.index.n(), e.index.removed())));
    }
    let p = horn_projection(x, &e.index)?;
    solve(&p, &target)?.ok_or_else(|| {
        Error::NoFiller(format!(
            "horn ({}, {:?}) projection does not reach this element",
            e.index.n(),
            e.index.removed()
        ))
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use num_traits::Zero;

    use super::*;
    use crate::linalg::rational::vector;
    use crate::simplicial::{dold_kan_inverse, ChainComplex};

    fn is_zero_vector(v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    fn sample() -> TruncatedSVS {
        let c = ChainComplex::new(
            vec![1, 2, 1],
            vec![RationalMatrix::from_i64(&[&[1, -1]]), RationalMatrix::from_i64(&[&[1], &[1]])],
        )
        .unwrap();
        dold_kan_inverse(&c, 3)
    }

    #[test]
    fn single_kept_face_is_one_degeneracy() {
        let x = sample();
        let f = generalized_filler_matrix(&x, 2, 0, 1).unwrap();
        assert_eq!(&f, x.degeneracy(1, 1));
        let g = generalized_filler_matrix(&x, 2, 1, 1).unwrap();
        assert_eq!(&g, x.degeneracy(1, 0));
    }

    #[test]
    fn zero_element_gives_zero_filler() {
        let x = sample();
        let h = HornIndex::shaped(3, 1, 2).unwrap();
        let zero = HornElement::from_concatenated(h, x.dim(2), &vec![int(0); 2 * x.dim(2)]).unwrap();
        let v = fill_generalized_horn(&x, 3, 2, 1, &zero).unwrap();
        assert!(is_zero_vector(&v));
        assert!(is_zero_vector(&fill_horn_linear(&x, &zero).unwrap()));
    }

    #[test]
    fn rejects_elements_outside_the_horn() {
        let x = TruncatedSVS::constant(1, 2);
        let h = HornIndex::ordinary(2, 2).unwrap();
        let comps: BTreeMap<usize, Vec<Rational>> = [(0, vector(&[1])), (1, vector(&[2]))].into();
        let e = HornElement::new(h, comps).unwrap();
        assert!(matches!(fill_horn_linear(&x, &e), Err(Error::NotInHornSpace(_))));
        let shaped = HornIndex::shaped(2, 2, 1).unwrap_err();
        assert!(matches!(shaped, Error::OutOfRange(_)));
    }

    #[test]
    fn ordinary_horns_are_out_of_closed_form_range() {
        let x = sample();
        assert!(generalized_filler_matrix(&x, 2, 0, 2).is_err());
        assert!(generalized_filler_matrix(&x, 2, 0, 0).is_err());
    }

    #[test]
    fn constant_object_diagonal_horn() {
        let x = TruncatedSVS::constant(2, 2);
        let h = HornIndex::ordinary(2, 1).unwrap();
        let v = vector(&[3, -4]);
        let e = HornElement::new(h, [(0, v.clone()), (2, v.clone())].into()).unwrap();
        let w = fill_horn_linear(&x, &e).unwrap();
        for i in 0..=2 {
            assert_eq!(x.face(2, i).mul_vec(&w).unwrap(), v);
        }
    }
}
