// Exact rational elements of O(n), Sp(n) and GL(n) from seeded Cayley
// samplers, and closure of a finite group.

use classinv::exact::Matrix;
use classinv::grp::{sample_element, FiniteGroup, GroupSpec, Sampler};

fn show(m: &Matrix) {
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>7}")).collect();
        println!("  {}", cells.join(" "));
    }
}

pub fn run_example() -> classinv::Result<()> {
    let o3 = GroupSpec::orthogonal(3)?;
    for seed in [0, 1] {
        let g = sample_element(&o3, seed)?;
        println!("O(3) seed {seed}, det {}:", g.matrix().determinant()?);
        show(g.matrix());
        assert!(o3.contains(g.matrix()));
    }

    let sp4 = GroupSpec::symplectic(4)?;
    let g = sample_element(&sp4, 3)?;
    println!("Sp(4) seed 3:");
    show(g.matrix());
    assert!(sp4.contains(g.matrix()));

    let gl2 = GroupSpec::general(2)?;
    let dets: Vec<String> = Sampler::new(&gl2, 11)
        .take(5)
        .map(|g| {
            g.and_then(|g| g.matrix().determinant())
                .map(|d| d.to_string())
        })
        .collect::<classinv::Result<_>>()?;
    println!("GL(2) determinants: {}", dets.join(" "));

    let swap = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let cycle = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
    let s3 = FiniteGroup::new(vec![swap, cycle], 100)?;
    println!("permutation matrices of S3: order {}", s3.order());
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
