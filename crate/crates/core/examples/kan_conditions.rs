//! Ordinary and shaped Kan conditions, and a broken object that fails one.

use svkan::kan::{check_kan, generalized_kan_report, kan_report};
use svkan::linalg::RationalMatrix;
use svkan::simplicial::{dold_kan_inverse, random_chain_complex, FaceMaps};

fn main() -> svkan::Result<()> {
    let c = random_chain_complex(&"S0,D1,S2".parse()?, 7);
    let x = dold_kan_inverse(&c, 4);

    let ordinary = kan_report(&x)?;
    println!("{} ordinary horns, all fill: {}", ordinary.checks.len(), ordinary.all_hold());
    let shaped = generalized_kan_report(&x)?;
    println!("{} shaped horns, all fill: {}", shaped.checks.len(), shaped.all_hold());

    // zeroing d_0 at level 1 kills surjectivity of the horn keeping only face 0
    let semi = x.forget_degeneracies();
    let broken = semi.with_face(1, 0, RationalMatrix::zeros(x.dim(0), x.dim(1)))?;
    for i in 0..=1 {
        println!("broken object, horn (1, {i}): {}", check_kan(&broken, 1, i)?);
    }
    Ok(())
}
