// Rewrites invariants in terms of contractions, including a case where the
// contractions satisfy a relation.

use classinv::cli::parse_expression;
use classinv::fft::decompose_in_generators;
use classinv::grp::GroupSpec;
use classinv::poly::SpaceSignature;

pub fn run_example() -> classinv::Result<()> {
    let o2 = GroupSpec::orthogonal(2)?;
    let sig = SpaceSignature::vectors_only(2, 2)?;
    let gram = "(x[1,1]^2 + x[1,2]^2)*(x[2,1]^2 + x[2,2]^2) - (x[1,1]*x[2,1] + x[1,2]*x[2,2])^2";
    let f = parse_expression(gram, sig, o2.family())?;
    let e = decompose_in_generators(&o2, sig, &f)?;
    println!("Gram determinant = {e}");
    assert_eq!(e.expand(sig)?, f);

    // the 3x3 Gram determinant vanishes identically in the plane
    let sig3 = SpaceSignature::vectors_only(2, 3)?;
    let rel = parse_expression(
        "s(1,1)*s(2,2)*s(3,3) + 2*s(1,2)*s(2,3)*s(1,3) - s(1,1)*s(2,3)^2 - s(2,2)*s(1,3)^2 - s(3,3)*s(1,2)^2",
        sig3,
        o2.family(),
    )?;
    println!("3x3 Gram determinant in the plane expands to {rel}");
    assert!(rel.is_zero());

    let sp2 = GroupSpec::symplectic(2)?;
    let f = parse_expression("(x[1,1]*x[2,2] - x[1,2]*x[2,1])^3", sig, sp2.family())?;
    println!("Sp(2): {}", decompose_in_generators(&sp2, sig, &f)?);

    let x = parse_expression("x[1,1]^2", sig, o2.family())?;
    match decompose_in_generators(&o2, sig, &x) {
        Err(e) => println!("x[1,1]^2: {e}"),
        Ok(e) => println!("unexpected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
