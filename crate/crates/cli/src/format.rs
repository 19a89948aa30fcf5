//! The matrix file format.
//!
//! ```text
//! 2 2
//! 1/2 0
//! 0   2
//! ```
//!
//! The first line holds the row and column counts, then one line per row.
//! Entries are integers or `p/q` rationals. Blank lines and lines starting
//! with `#` are ignored. A JSON array of rows (entries as numbers or strings)
//! is accepted as well.

use num_traits::Zero;
use serde_json::Value;
use sympsnf::exact::Scalar;
use sympsnf::{IntMatrix, Integer, Matrix, RatMatrix, Rational};

use crate::{CliError, CliResult};

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn parse_integer(s: &str) -> CliResult<Integer> {
    s.parse::<Integer>()
        .map_err(|_| input_err(format!("invalid integer {s:?}")))
}

/// An integer or `p/q` literal, reduced.
pub fn parse_entry(s: &str) -> CliResult<Rational> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s)?)),
        Some((p, q)) => {
            let (p, q) = (parse_integer(p)?, parse_integer(q)?);
            if q.is_zero() {
                return Err(input_err(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Meaningful lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Reads a header line and its rows from `lines`.
pub(crate) fn read_matrix<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> CliResult<RatMatrix> {
    let (line_no, header) = lines.next().ok_or_else(|| input_err("missing matrix header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols] = dims[..] else {
        return Err(input_err(format!(
            "line {line_no}: expected \"rows cols\", found {header:?}"
        )));
    };
    let parse_dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| input_err(format!("line {line_no}: invalid dimension {s:?}")))
    };
    let (rows, cols) = (parse_dim(rows)?, parse_dim(cols)?);
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| input_err(format!("expected {rows} rows, found {r}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols {
            return Err(input_err(format!(
                "line {line_no}: expected {cols} entries, found {}",
                entries.len()
            )));
        }
        for e in entries {
            data.push(parse_entry(e).map_err(|err| input_err(format!("line {line_no}: {err}")))?);
        }
    }
    Ok(RatMatrix::new(rows, cols, data)?)
}

pub(crate) fn entry_from_json(v: &Value) -> CliResult<Rational> {
    match v {
        Value::String(s) => parse_entry(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_entry(&n.to_string()),
        other => Err(input_err(format!("invalid entry {other}"))),
    }
}

pub(crate) fn matrix_from_json(v: &Value) -> CliResult<RatMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| input_err("matrix must be an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| input_err("matrix row must be an array"))?
                .iter()
                .map(entry_from_json)
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(input_err("empty matrix"));
    }
    Ok(RatMatrix::from_rows(rows)?)
}

pub fn parse_matrix(text: &str) -> CliResult<RatMatrix> {
    if text.trim_start().starts_with('[') {
        let v: Value = serde_json::from_str(text).map_err(|e| input_err(format!("invalid JSON: {e}")))?;
        return matrix_from_json(&v);
    }
    let mut lines = content_lines(text);
    let m = read_matrix(&mut lines)?;
    if let Some((line_no, _)) = lines.next() {
        return Err(input_err(format!(
            "line {line_no}: unexpected content after the last row"
        )));
    }
    Ok(m)
}

pub fn parse_integer_matrix(text: &str) -> CliResult<IntMatrix> {
    let m = parse_matrix(text)?;
    m.to_integer()
        .ok_or_else(|| input_err("expected an integer matrix, found a non-integral entry"))
}

/// Canonical text form: reduced fractions with positive denominators.
pub fn write_matrix<T: Scalar>(m: &Matrix<T>) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_to_json<T: Scalar>(m: &Matrix<T>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let m = parse_matrix("2 2\n 2/4  0\n\n# comment\n0 -6/-3\n").unwrap();
        assert_eq!(write_matrix(&m), "2 2\n1/2 0\n0 2\n");
        assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
        assert_eq!(parse_matrix("[[\"1/2\", 0], [0, \"2\"]]").unwrap(), m);
        assert_eq!(parse_matrix(&matrix_to_json(&m).to_string()).unwrap(), m);
        assert_eq!(parse_entry("3/-6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "2 2\n1/0 0\n0 1\n",
            "2 2\n1 0\n0\n",
            "2 2\n1 0\n",
            "2\n1 0\n",
            "2 2\n1 0\n0 x\n",
            "1 1\n1\n2\n",
            "",
            "[[1, 2], [3]]",
            "[[1.5]]",
        ] {
            assert!(matches!(parse_matrix(bad), Err(CliError::Input(_))), "{bad:?}");
        }
        assert!(parse_integer_matrix("1 1\n1/2\n").is_err());
        assert_eq!(parse_integer_matrix("1 1\n4/2\n").unwrap()[(0, 0)], Integer::from(2));
    }
}
