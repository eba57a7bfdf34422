// Runs the degree-2 and degree-4 certificates for a grid of classical
// groups and prints one line per configuration.

use classinv::fft::fft_verify;
use classinv::grp::GroupSpec;
use classinv::poly::SpaceSignature;

pub fn run_example() -> classinv::Result<()> {
    let mut cases: Vec<(GroupSpec, SpaceSignature)> = Vec::new();
    for n in 1..=3 {
        for k in 1..=3 {
            cases.push((
                GroupSpec::orthogonal(n)?,
                SpaceSignature::vectors_only(n, k)?,
            ));
        }
    }
    for n in [2, 4] {
        for k in [2, 3] {
            cases.push((
                GroupSpec::symplectic(n)?,
                SpaceSignature::vectors_only(n, k)?,
            ));
        }
    }
    for n in [1, 2] {
        for (k, m) in [(1, 1), (2, 1), (2, 2)] {
            cases.push((GroupSpec::general(n)?, SpaceSignature::new(n, k, m)?));
        }
    }
    for (spec, sig) in &cases {
        for d in [2, 4] {
            let r = fft_verify(spec, *sig, d, 7)?;
            println!(
                "{:<8} {:<28} d={d}  span {:>4} = kernel {:>4} of {:>5}  {} ({} samples, {} ms)",
                spec.to_string(),
                sig.to_string(),
                r.dim_span,
                r.dim_kernel,
                r.dim_space,
                if r.certified {
                    "certified"
                } else {
                    "INCONCLUSIVE"
                },
                r.samples_used,
                r.elapsed_ms
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
