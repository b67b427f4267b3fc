//! A piecewise-affine object whose horn spaces are unions of pieces of
//! different dimensions, while its linearization at the base point is Kan.

use svkan::affine::{build_example_5_1, horn_profile, local_kan_check};
use svkan::kan::HornIndex;

fn main() -> svkan::Result<()> {
    let a = build_example_5_1(3);
    println!("components per level: {:?}", a.all_components().iter().map(Vec::len).collect::<Vec<_>>());
    assert!(a.validate().is_valid());

    for n in 1..=3 {
        for i in 0..=n {
            let p = horn_profile(&a, &HornIndex::ordinary(n, i)?)?;
            println!("horn ({n}, {i}): piece dims {:?}, manifold {}", p.dimension_multiset(), p.manifold_flag);
        }
    }
    let local = local_kan_check(&a)?;
    println!("linearization at the base satisfies every Kan condition: {}", local.all_hold());
    Ok(())
}
