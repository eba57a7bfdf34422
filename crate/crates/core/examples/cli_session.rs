// The command-line driver called in-process, plus the expression grammar
// it uses.

use classinv::cli::{parse_expression, run};
use classinv::grp::GroupFamily;
use classinv::poly::SpaceSignature;

fn show(line: &str) {
    let out = run(std::iter::once("classinv").chain(line.split_whitespace()));
    println!("$ classinv {line}");
    print!("{}{}", out.stdout, out.stderr);
    println!("(exit {})\n", out.code);
}

pub fn run_example() -> classinv::Result<()> {
    let sig = SpaceSignature::vectors_only(2, 2)?;
    let f = parse_expression("s(1,2) + 3/4 * x[1,1]^2", sig, GroupFamily::Orthogonal)?;
    println!("parsed: {f}");
    assert_eq!(
        parse_expression(&f.to_string(), sig, GroupFamily::Orthogonal)?,
        f
    );
    if let Err(e) = parse_expression("x[0,1]", sig, GroupFamily::Orthogonal) {
        println!("x[0,1]: {e}\n");
    }

    show("fft-verify --group o --n 2 --vectors 2 --degree 2 --seed 7 --format json");
    show("check --group sp --n 2 --vectors 2 --expr w(1,2)");
    show("generators --group gl --n 2 --covectors 2 --vectors 1");
    show("fft-verify --group sp --n 3 --vectors 2 --degree 2");
    Ok(())
}

#[allow(dead_code)]
fn main() -> classinv::Result<()> {
    run_example()
}
