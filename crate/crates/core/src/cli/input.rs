use crate::error::{Error, Result};
use crate::exact::{parse_rational, Matrix};

/// Reads generator matrices: rows of whitespace-separated rationals, one
/// matrix per block, blocks separated by blank lines. Lines starting with
/// `#` are ignored.
pub fn parse_generator_file(text: &str) -> Result<Vec<Matrix>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !blocks.last().expect("nonempty").is_empty() {
                blocks.push(Vec::new());
            }
        } else {
            blocks
                .last_mut()
                .expect("nonempty")
                .push((lineno + 1, line));
        }
    }
    blocks.retain(|b| !b.is_empty());
    if blocks.is_empty() {
        return Err(Error::MalformedInput(
            "generator file has no matrices".into(),
        ));
    }
    let mut out = Vec::new();
    for block in blocks {
        let mut rows = Vec::new();
        for (lineno, line) in &block {
            let row = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::MalformedInput(format!("line {lineno}: {e}")))?;
            rows.push(row);
        }
        let first = block[0].0;
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::MalformedInput(format!(
                "matrix starting at line {first} is not square"
            )));
        }
        out.push(Matrix::from_rows(rows)?);
    }
    Ok(out)
}
