//! OEIS b-file format: one `n a(n)` line per term, `n` ascending, no header.

use std::fmt::Display;
use std::io::{self, Write};

pub fn write_bfile<W: Write, T: Display>(mut w: W, offset: usize, values: &[T]) -> io::Result<()> {
    for (i, v) in values.iter().enumerate() {
        writeln!(w, "{} {}", offset + i, v)?;
    }
    Ok(())
}

pub fn format_bfile<T: Display>(offset: usize, values: &[T]) -> String {
    let mut out = Vec::new();
    write_bfile(&mut out, offset, values).expect("writing to a Vec");
    String::from_utf8(out).expect("utf-8")
}

/// Parse `n a(n)` lines, skipping blanks and `#` comments.
pub fn parse_bfile(text: &str) -> Option<Vec<(usize, String)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (n, v) = l.split_once(' ')?;
            Some((n.parse().ok()?, v.trim().to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = format_bfile(0, &[1, 1, 2, 5]);
        assert_eq!(text, "0 1\n1 1\n2 2\n3 5\n");
        let parsed = parse_bfile(&text).unwrap();
        assert_eq!(parsed[3], (3, "5".to_string()));
        assert!(parse_bfile("0 1\nx").is_none());
    }
}
