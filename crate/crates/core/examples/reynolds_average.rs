// Averaging over a finite group projects onto its invariants.

use classinv::act::ActionContext;
use classinv::cli::parse_expression;
use classinv::exact::Matrix;
use classinv::grp::GroupSpec;
use classinv::poly::SpaceSignature;

pub fn run_example() -> classinv::Result<()> {
    let swap = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let cycle = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
    let s3 = GroupSpec::finite(vec![swap, cycle], 100)?;
    let sig = SpaceSignature::vectors_only(3, 1)?;
    let ctx = ActionContext::new(s3.clone(), sig)?;

    for text in ["x[1,1]", "x[1,1]^2*x[1,2]", "x[1,1]*x[1,2] - x[1,3]^2"] {
        let f = parse_expression(text, sig, s3.family())?;
        let avg = ctx.reynolds(&f)?;
        println!("{text:<26} -> {avg}");
        assert_eq!(ctx.reynolds(&avg)?, avg);
    }

    let signs = GroupSpec::finite(
        vec![
            Matrix::from_i64(&[&[-1, 0], &[0, 1]]),
            Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        ],
        10,
    )?;
    let sig = SpaceSignature::vectors_only(2, 1)?;
    let f = parse_expression("(x[1,1] + x[1,2] + 1)^3", sig, signs.family())?;
    println!(
        "sign group: {}",
        ActionContext::new(signs, sig)?.reynolds(&f)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
