// Exact rational linear algebra: inverses, ranks and nullspaces with no
// rounding anywhere.

use classinv::exact::{rational::frac, Matrix};

pub fn run_example() -> classinv::Result<()> {
    let a = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
    let inv = a.inverse()?;
    println!("A^-1 =");
    for row in inv.to_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    assert!(a.mul(&inv)?.is_identity());
    println!("det A = {}", a.determinant()?);

    let b = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
    println!("rank B = {}", b.rank());
    for v in b.nullspace_basis() {
        let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel vector [{}]", cells.join(", "));
        assert!(b.mul_vec(&v)?.iter().all(|e| *e == frac(0, 1)));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
