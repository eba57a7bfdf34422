// Sampled invariant subspaces: each random group element cuts the kernel
// down until it stops shrinking.

use classinv::fft::invariant_subspace_basis;
use classinv::grp::GroupSpec;
use classinv::poly::SpaceSignature;

pub fn run_example() -> classinv::Result<()> {
    let cases = [
        (
            GroupSpec::orthogonal(2)?,
            SpaceSignature::vectors_only(2, 2)?,
            2,
        ),
        (
            GroupSpec::symplectic(2)?,
            SpaceSignature::vectors_only(2, 2)?,
            2,
        ),
        (GroupSpec::general(2)?, SpaceSignature::new(2, 1, 1)?, 2),
        (
            GroupSpec::orthogonal(3)?,
            SpaceSignature::vectors_only(3, 2)?,
            4,
        ),
    ];
    for (spec, sig, d) in cases {
        let sub = invariant_subspace_basis(&spec, sig, d, 7)?;
        println!(
            "{spec} {sig} d={d}: {} of {} (kernel trace {:?})",
            sub.dim_kernel(),
            sub.dim_space,
            sub.trace
        );
        for b in &sub.basis {
            println!("    {b}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
