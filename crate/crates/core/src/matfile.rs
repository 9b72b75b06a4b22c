//! Plain-text matrix files.
//!
//! ```text
//! field fp:10007
//! rows 2
//! cols 3
//! entries
//! 1 2/3 -4
//! 5/2 0 1
//! ```
//!
//! `field` is `rational` or `fp:<p>`; entries are written `n` or `n/d` and
//! are reduced into the field (mod p for prime fields). Blank lines and
//! lines starting with `#` are ignored. Parse failures name the offending
//! row and column (1-based).

use num_bigint::BigInt;

use crate::exactalg::{FieldTag, Matrix, Scalar};
use crate::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let field: FieldTag = expect_kv(lines.next(), "field")?.parse()?;
    let rows: usize = parse_count(expect_kv(lines.next(), "rows")?)?;
    let cols: usize = parse_count(expect_kv(lines.next(), "cols")?)?;
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMatrix);
    }
    let marker = lines.next().ok_or_else(|| missing("entries"))?;
    if marker != "entries" {
        return Err(Error::Io(format!(
            "expected an `entries` line, found {marker:?}"
        )));
    }
    let mut data: Vec<Vec<Scalar>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Io(format!("missing entry row {}", r + 1)))?;
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != cols {
            return Err(Error::Io(format!(
                "entry row {} has {} values, expected {}",
                r + 1,
                cells.len(),
                cols
            )));
        }
        let mut row = Vec::with_capacity(cols);
        for (c, cell) in cells.iter().enumerate() {
            row.push(
                parse_entry(cell, field).map_err(|message| Error::EntryParse {
                    row: r + 1,
                    col: c + 1,
                    message,
                })?,
            );
        }
        data.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Io(format!("unexpected trailing line {extra:?}")));
    }
    Matrix::from_rows(data)
}

fn expect_kv<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    let line = line.ok_or_else(|| missing(key))?;
    line.strip_prefix(key)
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .ok_or_else(|| Error::Io(format!("expected a `{key} <value>` line, found {line:?}")))
}

fn missing(key: &str) -> Error {
    Error::Io(format!("missing `{key}` line"))
}

fn parse_count(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Io(format!("invalid count {s:?}")))
}

fn parse_entry(cell: &str, field: FieldTag) -> std::result::Result<Scalar, String> {
    let (num, den) = match cell.split_once('/') {
        None => (cell, "1"),
        Some((n, d)) => (n, d),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer {num:?} in {cell:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid denominator {den:?} in {cell:?}"))?;
    Scalar::from_ratio(num, den, field).map_err(|e| e.to_string())
}

pub fn format_matrix(m: &Matrix) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "field {}", m.field()).unwrap();
    writeln!(out, "rows {}", m.rows()).unwrap();
    writeln!(out, "cols {}", m.cols()).unwrap();
    writeln!(out, "entries").unwrap();
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn read_matrix(path: &std::path::Path) -> Result<Matrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text)
}
