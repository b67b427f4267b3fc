//! The two normalized complexes and the γ maps between them.

use svkan::normalization::{
    chain_identity_holds, chain_isomorphism, gamma_inverse_holds, homology_dims, kernel_projection_identity,
};
use svkan::simplicial::{dold_kan_inverse, random_chain_complex, FaceMaps};

fn main() -> svkan::Result<()> {
    let x = dold_kan_inverse(&random_chain_complex(&"S0,D1,S1,D2".parse()?, 3), 4);

    let iso = chain_isomorphism(&x)?;
    println!("N dims {:?}, Ñ dims {:?}", iso.normalized.dims(), iso.tilde.dims());
    println!("homology {:?} and {:?}", homology_dims(&iso.normalized.complex), homology_dims(&iso.tilde.complex));

    for n in 1..=x.level() {
        let inverses = (0..=n).all(|m| gamma_inverse_holds(&x, n, m).unwrap_or(false));
        let (last, first) = kernel_projection_identity(&x, n)?;
        println!(
            "n = {n}: γ pairs inverse {inverses}, chain identity {}, kernels {last}/{first}",
            chain_identity_holds(&x, n)?
        );
    }
    Ok(())
}
