//! Horn spaces built face by face as fiber products agree with the ones cut
//! out by the compatibility equations.

use svkan::kan::{horn_space_direct, horn_space_recursive, HornIndex};
use svkan::simplicial::{dold_kan_inverse, random_chain_complex};

fn main() -> svkan::Result<()> {
    let x = dold_kan_inverse(&random_chain_complex(&"S0,D1,S1,D3".parse()?, 5), 5);
    for n in 2..=5 {
        for h in HornIndex::all_shaped(n) {
            let direct = horn_space_direct(&x, &h)?;
            let recursive = horn_space_recursive(&x, &h)?;
            assert_eq!(direct, recursive);
            println!("n = {n}, removed {:?}: dim {} of {}", h.removed(), direct.dim(), direct.ambient_dim());
        }
    }
    Ok(())
}
