// Degrees of minimal generating sets, found degree by degree.

use classinv::exact::{rational::int, Matrix};
use classinv::fft::minimal_generator_degrees;
use classinv::grp::GroupSpec;
use classinv::poly::SpaceSignature;

pub fn run_example() -> classinv::Result<()> {
    let cases = [
        (
            "O(2), one vector",
            GroupSpec::orthogonal(2)?,
            SpaceSignature::vectors_only(2, 1)?,
            6,
        ),
        (
            "O(2), two vectors",
            GroupSpec::orthogonal(2)?,
            SpaceSignature::vectors_only(2, 2)?,
            4,
        ),
        (
            "Sp(2), two vectors",
            GroupSpec::symplectic(2)?,
            SpaceSignature::vectors_only(2, 2)?,
            4,
        ),
        (
            "GL(1), V* + V",
            GroupSpec::general(1)?,
            SpaceSignature::new(1, 1, 1)?,
            4,
        ),
        (
            "{+I, -I} on the plane",
            GroupSpec::finite(vec![Matrix::scalar(2, int(-1))], 4)?,
            SpaceSignature::vectors_only(2, 1)?,
            4,
        ),
    ];
    for (label, spec, sig, bound) in cases {
        let r = minimal_generator_degrees(&spec, sig, bound, 3)?;
        println!("{label:<22} degrees {:?}", r.degrees);
        for g in &r.generators {
            println!("    {g}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
