//! The line-oriented matroid file format.
//!
//! ```text
//! matroid p8
//! field 3
//! elements 1 2 3 4 5 6 7 8
//! matrix
//! 1 0 0 0 0 1 1 2
//! ...
//! end
//! ```
//!
//! Blank lines and anything after `#` are ignored. Entries must already lie
//! in `[0, p)`; nothing is reduced.

use std::fmt::Write;

use matsplit_core::{Label, LabeledMatrix, PrimeField, VectorMatroid};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidFile {
    pub name: String,
    pub matroid: VectorMatroid,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invalid {rule}")]
    Validation { line: usize, rule: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> FileError {
    FileError::Parse { line, message: message.into() }
}

fn invalid(line: usize, rule: impl Into<String>) -> FileError {
    FileError::Validation { line, rule: rule.into() }
}

pub fn parse_matroid_file(text: &str) -> Result<MatroidFile, FileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut last = 0;
    let mut next = |what: &str| -> Result<(usize, Vec<&str>), FileError> {
        match lines.next() {
            Some((n, l)) => {
                last = n;
                Ok((n, l.split_whitespace().collect()))
            }
            None => Err(parse_err(last + 1, format!("unexpected end of file, expected {what}"))),
        }
    };

    let (n, words) = next("`matroid <name>`")?;
    let name = match words.as_slice() {
        ["matroid", name] => name.to_string(),
        _ => return Err(parse_err(n, "expected `matroid <name>`")),
    };

    let (n, words) = next("`field <p>`")?;
    let p: u32 = match words.as_slice() {
        ["field", p] => p.parse().map_err(|_| parse_err(n, format!("bad field order `{p}`")))?,
        _ => return Err(parse_err(n, "expected `field <p>`")),
    };
    let field = PrimeField::new(p).map_err(|_| invalid(n, format!("field: {p} is not a prime")))?;

    let (n, words) = next("`elements ...`")?;
    if words.first() != Some(&"elements") {
        return Err(parse_err(n, "expected `elements <l1> ... <lc>`"));
    }
    let mut labels: Vec<Label> = Vec::with_capacity(words.len() - 1);
    for w in &words[1..] {
        let l: Label = w.parse().map_err(|_| parse_err(n, format!("bad label `{w}`")))?;
        if l == 0 {
            return Err(invalid(n, "labels: labels must be positive"));
        }
        if let Some(&prev) = labels.last() {
            if l == prev || labels.contains(&l) {
                return Err(invalid(n, format!("labels: duplicate label {l}")));
            }
            if l < prev {
                return Err(invalid(n, "labels: labels must be ascending"));
            }
        }
        labels.push(l);
    }

    let (n, words) = next("`matrix`")?;
    if words.as_slice() != ["matrix"] {
        return Err(parse_err(n, "expected `matrix`"));
    }

    let mut rows: Vec<Vec<u32>> = Vec::new();
    loop {
        let (n, words) = next("a matrix row or `end`")?;
        if words.as_slice() == ["end"] {
            break;
        }
        if words.len() != labels.len() {
            return Err(invalid(n, format!("row: {} entries for {} elements", words.len(), labels.len())));
        }
        let mut row = Vec::with_capacity(words.len());
        for w in words {
            let v: u32 = w.parse().map_err(|_| parse_err(n, format!("bad entry `{w}`")))?;
            if v >= p {
                return Err(invalid(n, format!("entry: {v} is not in [0, {p})")));
            }
            row.push(v);
        }
        rows.push(row);
    }
    if let Some((n, _)) = lines.next() {
        return Err(parse_err(n, "content after `end`"));
    }
    let matrix = LabeledMatrix::from_rows(field, labels, &rows).map_err(|e| invalid(last, e.to_string()))?;
    Ok(MatroidFile { name, matroid: VectorMatroid::new(matrix) })
}

/// Canonical text: single spaces, rows in order, columns by ascending label.
pub fn format_matroid_file(name: &str, m: &VectorMatroid) -> String {
    let mat = m.matrix().sorted_by_label();
    let mut out = String::new();
    let _ = writeln!(out, "matroid {name}");
    let _ = writeln!(out, "field {}", mat.field().order());
    out.push_str("elements");
    for l in mat.labels() {
        let _ = write!(out, " {l}");
    }
    out.push_str("\nmatrix\n");
    for r in 0..mat.rows() {
        let row: Vec<String> = mat.row(r).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
