//! Kernels, canonical subspaces and intersections over the rationals.

use svkan::linalg::rational::{format_rational, ratio, vector};
use svkan::linalg::{intersect, kernel_basis, solve, subspace_equal, RationalMatrix, Subspace};

fn show(label: &str, m: &RationalMatrix) {
    println!("{label}:");
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        println!("  [{}]", cells.join(", "));
    }
}

fn main() -> svkan::Result<()> {
    let a = RationalMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
    println!("rank = {}", a.rank());

    let k = kernel_basis(&a);
    show("kernel basis (reduced column echelon)", k.basis());
    assert!((&a * k.basis()).is_zero());

    // two different spanning sets give the same canonical basis
    let cols = k.basis().columns();
    let sum: Vec<_> = cols[0].iter().zip(&cols[1]).map(|(x, y)| x + y).collect();
    let scaled: Vec<_> = cols[1].iter().map(|x| x * ratio(3, 2)).collect();
    let other = RationalMatrix::from_columns(4, &[sum, scaled])?;
    assert_eq!(Subspace::span(&other), k);
    println!("canonical form is independent of the spanning set");

    let plane = Subspace::span(&RationalMatrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]));
    let meet = intersect(&plane, &k)?;
    println!("dim(kernel ∩ plane) = {}", meet.dim());
    assert!(subspace_equal(&meet, &intersect(&k, &plane)?)?);

    let b = a.mul_vec(&vector(&[1, 1, 1, 1]))?;
    let x = solve(&a, &b)?.expect("b is in the image");
    println!("a particular solution: {:?}", x.iter().map(format_rational).collect::<Vec<_>>());
    Ok(())
}
