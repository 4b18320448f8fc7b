//! Plain-text matrix and report formats.
//!
//! A matrix is a "K N" header line followed by K lines of N space-separated
//! 0/1 entries, newline-terminated — diffable against printed generator
//! matrices. Reports are one summary line then one line per receiver. Both
//! formats are byte-stable across runs.

use std::fmt::Write as _;

use crate::construct::CodeBook;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::model::{CaseId, Rational};
use crate::verify::{DecodeReport, ReceiverStatus};

/// Renders a matrix in the text format.
pub fn render_matrix(m: &BitMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    for i in 1..=m.rows() {
        let mut line = String::with_capacity(2 * m.cols());
        for j in 1..=m.cols() {
            if j > 1 {
                line.push(' ');
            }
            line.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parses the text format back into a matrix. Strict: exactly K data lines,
/// each with exactly N entries from {0, 1}.
pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let rows: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("header must be \"K N\"".into()))?;
    let cols: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("header must be \"K N\"".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("header must be \"K N\"".into()));
    }
    if rows < 1 {
        return Err(Error::Parse("matrix needs at least one row".into()));
    }
    let mut m = BitMatrix::zeros(rows, cols);
    for i in 1..=rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {rows} rows, found {}", i - 1)))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {cols}",
                entries.len()
            )));
        }
        for (j, e) in entries.iter().enumerate() {
            match *e {
                "0" => {}
                "1" => m.set(i, j + 1, true),
                other => {
                    return Err(Error::Parse(format!(
                        "row {i} entry {} is {other:?}, expected 0 or 1",
                        j + 1
                    )))
                }
            }
        }
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(Error::Parse("trailing content after matrix".into()));
    }
    Ok(m)
}

/// Renders the symbol listing, one "y<j> = x<i1>+x<i2>+..." line per symbol.
pub fn render_symbols(code: &CodeBook) -> String {
    let mut out = String::new();
    for (j, symbol) in code.symbols().iter().enumerate() {
        let terms: Vec<String> = symbol.iter().map(|i| format!("x{i}")).collect();
        let _ = writeln!(out, "y{} = {}", j + 1, terms.join("+"));
    }
    out
}

/// Renders a verification report: a summary line, then one line per receiver.
pub fn render_report(
    case: CaseId,
    k: usize,
    d: usize,
    n: usize,
    capacity: Rational,
    optimal: bool,
    report: &DecodeReport,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "K={k} D={d} case={case} N={n} capacity={}/{} optimal={optimal}",
        capacity.numerator(),
        capacity.denominator()
    );
    for k in 1..=report.k() {
        let (decodable, min_tx, witness) = match report.receiver(k) {
            ReceiverStatus::Undecodable => (false, "-".to_string(), "-".to_string()),
            ReceiverStatus::CapExceeded { .. } => (true, "-".to_string(), "-".to_string()),
            ReceiverStatus::Decoded { min_tx, witness } => (
                true,
                min_tx.to_string(),
                witness
                    .iter()
                    .map(|j| j.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
        };
        let _ = writeln!(
            out,
            "k={k} decodable={decodable} min_tx={min_tx} witness={witness}"
        );
    }
    out
}
