//! Sequence files: one `n a(n)` pair per line starting from `n = 0`, as in
//! OEIS b-files. Blank lines and `#` comments are skipped on input.

use std::io::{self, BufRead, Write};

use num_bigint::BigUint;

pub fn write_terms(mut w: impl Write, terms: &[BigUint]) -> io::Result<()> {
    for (n, a) in terms.iter().enumerate() {
        writeln!(w, "{n} {a}")?;
    }
    Ok(())
}

pub fn read_terms(r: impl BufRead) -> io::Result<Vec<BigUint>> {
    let bad = |msg: String| io::Error::new(io::ErrorKind::InvalidData, msg);
    let mut out = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(n), Some(a), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad(format!("line {}: expected `n a(n)`", lineno + 1)));
        };
        let n: usize = n.parse().map_err(|_| bad(format!("line {}: bad index {n:?}", lineno + 1)))?;
        if n != out.len() {
            return Err(bad(format!("line {}: expected index {}, found {n}", lineno + 1, out.len())));
        }
        out.push(a.parse().map_err(|_| bad(format!("line {}: bad term {a:?}", lineno + 1)))?);
    }
    Ok(out)
}
