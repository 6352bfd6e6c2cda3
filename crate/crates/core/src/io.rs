//! Headerless comma-separated matrices and the JSON run report.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::matrix_prox::ProxSolution;
use crate::oracle::OracleReport;
use crate::scalar::Scalar;

/// A parsed matrix and where it came from (a path, or `"stdin"`).
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDocument<T> {
    pub matrix: DenseMatrix<T>,
    pub source: String,
}

/// Reads a matrix: one row per line (`\n` or `\r\n`), comma-separated
/// decimal fields, no header. Trailing blank lines are ignored.
///
/// Errors carry 1-based line numbers and 1-based field (column) indices.
pub fn read_csv<T: Scalar, R: BufRead>(reader: R, source: &str) -> Result<MatrixDocument<T>> {
    let mut lines = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(|e| Error::Parse {
            line: lines.len() + 1,
            column: 1,
            message: format!("unreadable input: {e}"),
        })?;
        lines.push(line);
    }
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty input".into(),
        });
    }

    let mut cols = 0;
    let mut data = Vec::new();
    for (i, raw) in lines.iter().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: "blank row".into(),
            });
        }
        let fields: Vec<&str> = line.split(',').collect();
        if i == 0 {
            cols = fields.len();
        } else if fields.len() != cols {
            return Err(Error::Parse {
                line: line_no,
                column: fields.len().min(cols) + 1,
                message: format!("row has {} fields, expected {cols}", fields.len()),
            });
        }
        for (j, field) in fields.iter().enumerate() {
            data.push(parse_field::<T>(field, line_no, j + 1)?);
        }
    }
    let matrix = DenseMatrix::new(lines.len(), cols, data)?;
    Ok(MatrixDocument {
        matrix,
        source: source.to_string(),
    })
}

fn parse_field<T: Scalar>(field: &str, line: usize, column: usize) -> Result<T> {
    let text = field.trim();
    let err = |message: String| Error::Parse {
        line,
        column,
        message,
    };
    if text.is_empty() {
        return Err(err("empty field".into()));
    }
    // only plain decimal literals: no inf/nan spellings
    if !text
        .bytes()
        .all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'))
    {
        return Err(err(format!("not a number: {text:?}")));
    }
    let value: T = text
        .parse()
        .map_err(|_| err(format!("not a number: {text:?}")))?;
    if !value.is_finite() {
        return Err(err(format!("value out of range: {text:?}")));
    }
    Ok(value)
}

/// Shortest decimal string that parses back to exactly `x`. Magnitudes
/// outside `[1e-5, 1e16)` use exponent notation.
pub fn format_scalar<T: Scalar>(x: T) -> String {
    let a = x.abs();
    if a != T::zero() && (a < T::lit(1e-5) || a >= T::lit(1e16)) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Writes one line per row, entries joined by commas, `\n` line endings.
pub fn write_csv<T: Scalar, W: Write>(m: &DenseMatrix<T>, mut sink: W) -> Result<()> {
    let mut out = String::new();
    for i in 0..m.rows() {
        for (j, &x) in m.row(i).iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&format_scalar(x));
        }
        out.push('\n');
    }
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(())
}

/// Writes values one per line.
pub fn write_values<T: Scalar, W: Write>(values: &[T], mut sink: W) -> Result<()> {
    let mut out = String::new();
    for &x in values {
        out.push_str(&format_scalar(x));
        out.push('\n');
    }
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(())
}

/// JSON diagnostics for one CLI run. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub operation: String,
    pub params: BTreeMap<String, f64>,
    pub effective_lambda: f64,
    pub objective: f64,
    pub sigma_in: Vec<f64>,
    pub sigma_out: Vec<f64>,
    pub rank_out: usize,
    pub cardinality_out: usize,
    pub oracle: Option<OracleReport>,
}

impl RunReport {
    pub fn from_solution<T: Scalar>(
        operation: &str,
        params: &[(&str, f64)],
        solution: &ProxSolution<T>,
    ) -> Self {
        RunReport {
            operation: operation.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            effective_lambda: solution.effective_lambda.as_f64(),
            objective: solution.objective.as_f64(),
            sigma_in: solution.sigma_in.iter().map(|x| x.as_f64()).collect(),
            sigma_out: solution.sigma_out.iter().map(|x| x.as_f64()).collect(),
            rank_out: solution.rank_out,
            cardinality_out: solution.cardinality_out,
            oracle: None,
        }
    }
}

/// Pretty-printed JSON object followed by a newline.
pub fn write_report<W: Write>(report: &RunReport, mut sink: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut sink, report).map_err(|e| Error::Io(e.to_string()))?;
    sink.write_all(b"\n")?;
    sink.flush()?;
    Ok(())
}
