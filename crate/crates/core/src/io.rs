//! Generator matrix text files.
//!
//! One row per line, tokens separated by spaces. Blank lines and lines
//! starting with `#` are ignored. Tokens are `ab` (meaning `a + ub`) over
//! `R`, `0`-`3` over `Z4`, and `0`, `1`, `u`, `1+u` over `F2 + uF2`.

use crate::alphabet::Alphabet;
use crate::code::Matrix;
use crate::error::{CodeError, Result};

pub fn parse_matrix<S: Alphabet>(text: &str) -> Result<Matrix<S>> {
    let mut rows: Vec<Vec<S>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(S::parse_token)
            .collect::<std::result::Result<Vec<S>, String>>()
            .map_err(|msg| CodeError::Parse { line: i + 1, msg })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(CodeError::Parse {
                    line: i + 1,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CodeError::Parse {
            line: 0,
            msg: "no matrix rows".into(),
        });
    }
    Matrix::from_rows(rows)
}

pub fn read_matrix<S: Alphabet>(path: &std::path::Path) -> Result<Matrix<S>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CodeError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

/// Inverse of [`parse_matrix`].
pub fn format_matrix<S: Alphabet>(m: &Matrix<S>) -> String {
    let mut out = String::new();
    for row in m.row_iter() {
        let toks: Vec<String> = row.iter().map(|x| x.token()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}
