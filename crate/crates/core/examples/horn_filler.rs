//! Fill a shaped horn with the closed-form alternating sum and compare with
//! a filler found by solving the linear system.

use svkan::kan::{fill_generalized_horn, fill_horn_linear, horn_projection, HornElement, HornIndex};
use svkan::linalg::rational::format_rational;
use svkan::simplicial::{dold_kan_inverse, random_chain_complex, FaceMaps, SplitMix64};

fn main() -> svkan::Result<()> {
    let x = dold_kan_inverse(&random_chain_complex(&"S0,D1,D2".parse()?, 3), 3);
    let (n, j, m) = (3, 1, 2);
    let h = HornIndex::shaped(n, j, m)?;
    println!("horn (n = {n}, removed = {:?}, kept = {:?})", h.removed(), h.kept());

    // a horn element: the kept faces of some simplex
    let simplex = SplitMix64::new(9).small_vector(x.dim(n));
    let faces = horn_projection(&x, &h)?.mul_vec(&simplex)?;
    let e = HornElement::from_concatenated(h, x.dim(n - 1), &faces)?;

    let closed = fill_generalized_horn(&x, n, m, j, &e)?;
    let solved = fill_horn_linear(&x, &e)?;
    for (&i, component) in &e.components {
        assert_eq!(&x.face(n, i).mul_vec(&closed)?, component);
        assert_eq!(&x.face(n, i).mul_vec(&solved)?, component);
    }
    let text = |v: &[svkan::linalg::Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(" ");
    println!("closed form:  {}", text(&closed));
    println!("linear solve: {}", text(&solved));
    println!("both reproduce every kept face");
    Ok(())
}
