//! A one-point family whose tangent complex is `0 <- R^g <- R`, for the
//! dimensions of su(2) and su(3).

use svkan::normalization::{tangent_complex, NormalizationVariant, PointedFamily};
use svkan::simplicial::{dold_kan_inverse, ChainComplex, FaceMaps};

fn main() -> svkan::Result<()> {
    for g in [3, 8] {
        let fiber = dold_kan_inverse(&ChainComplex::with_zero_differentials(vec![0, g, 1]), 3);
        println!("g = {g}: simplicial dims {:?}", fiber.dims());
        let t = tangent_complex(&PointedFamily::single("e", fiber), NormalizationVariant::N)?;
        let (_, complex) = &t.fibers[0];
        println!("  tangent complex dims {:?}, bundle {}", complex.dims(), t.report.is_bundle());
    }
    Ok(())
}
