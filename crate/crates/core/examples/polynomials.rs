// Sparse polynomials over copies of V and V*: arithmetic, grading and
// linear substitution.

use classinv::exact::{rational::frac, Matrix};
use classinv::poly::{dim_homogeneous, Polynomial, SpaceSignature, VariableId};

pub fn run_example() -> classinv::Result<()> {
    // one covector and two vectors in Q^2
    let sig = SpaceSignature::new(2, 1, 2)?;
    let u = |a| Polynomial::var(sig, VariableId::covector(1, a));
    let x = |c, a| Polynomial::var(sig, VariableId::vector(c, a));

    let pairing = u(1)?.mul(&x(1, 1)?)?.add(&u(2)?.mul(&x(1, 2)?)?)?;
    let f = pairing.pow(2).add(&x(2, 1)?.scale(&frac(-1, 2)))?;
    println!("f = {f}");
    for (d, part) in f.homogeneous_components() {
        println!("  degree {d}: {part}");
    }
    println!(
        "dim P^2 = {}, dim P^4 = {}",
        dim_homogeneous(sig, 2),
        dim_homogeneous(sig, 4)
    );

    // swap the coordinates of every copy
    let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    let g = pairing.substitute_linear(&[swap.clone(), swap.clone(), swap])?;
    println!("pairing with coordinates swapped: {g}");
    assert_eq!(g, pairing);
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
