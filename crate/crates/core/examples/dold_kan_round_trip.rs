//! Build a simplicial vector space from a chain complex and normalize it back.

use svkan::normalization::{homology_dims, normalize, NormalizationVariant};
use svkan::simplicial::{dold_kan_inverse, random_chain_complex, ComplexRecipe, FaceMaps};

fn main() -> svkan::Result<()> {
    let recipe: ComplexRecipe = "S0,D1,S1,D2,S2".parse()?;
    let c = random_chain_complex(&recipe, 42);
    println!("chain complex {recipe}: dims {:?}, homology {:?}", c.dims(), homology_dims(&c));

    let x = dold_kan_inverse(&c, 4);
    println!("simplicial levels 0..=4: dims {:?}", x.dims());
    assert!(x.validate().is_valid());

    let n = normalize(&x, NormalizationVariant::N)?;
    println!("normalized dims {:?}", n.dims());
    for d in 1..=c.top() {
        assert_eq!(n.complex.differential(d), c.differential(d));
    }
    println!("normalization reproduces every differential exactly");
    Ok(())
}
