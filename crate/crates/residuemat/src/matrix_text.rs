//! Plain-text matrix files.
//!
//! ```text
//! 3 4
//! . 1 2
//! 3 . 1
//! 2 1 .
//! ```
//!
//! The header is `n d`; each of the next `n` lines holds `n` tokens, `.` on
//! the diagonal and a root index in `[0, d)` elsewhere. Blank lines and lines
//! starting with `#` are skipped when reading.

use residuemat_core::matrix::{CycMatrix, MatrixError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixTextError {
    #[error("missing header line `n d`")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn syntax(line: usize, message: impl Into<String>) -> MatrixTextError {
    MatrixTextError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_matrix(text: &str) -> Result<CycMatrix, MatrixTextError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(MatrixTextError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, d] = fields[..] else {
        return Err(syntax(header_line, "header must be `n d`"));
    };
    let n: usize = n
        .parse()
        .map_err(|_| syntax(header_line, format!("bad size `{n}`")))?;
    let d: u32 = d
        .parse()
        .map_err(|_| syntax(header_line, format!("bad order `{d}`")))?;

    let mut entries = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, row) in lines {
        if rows == n {
            return Err(syntax(line, "unexpected extra row"));
        }
        let tokens: Vec<&str> = row.split_whitespace().collect();
        if tokens.len() != n {
            return Err(syntax(
                line,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        for tok in tokens {
            entries.push(match tok {
                "." => None,
                _ => Some(
                    tok.parse::<u32>()
                        .map_err(|_| syntax(line, format!("bad entry `{tok}`")))?,
                ),
            });
        }
        rows += 1;
    }
    if rows != n {
        return Err(MatrixTextError::RowCount {
            expected: n,
            found: rows,
        });
    }
    Ok(CycMatrix::from_entries(n, d, &entries)?)
}

/// Canonical text, one trailing newline.
pub fn format_matrix(m: &CycMatrix) -> String {
    let mut out = format!("{} {}\n", m.n(), m.d());
    for i in 0..m.n() {
        let row: Vec<String> = (0..m.n())
            .map(|j| {
                m.get(i, j)
                    .map_or_else(|| ".".to_string(), |k| k.to_string())
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
