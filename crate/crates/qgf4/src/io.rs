//! Reading and writing additive codes as plain text files.
//!
//! The file format is line-oriented:
//!
//! ```text
//! # any number of comment lines
//! 5 4
//! wWWw0
//! 0wWWw
//! w0wWW
//! Ww0wW
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. The first
//! significant line is the header `n r`: the code length and the number
//! of generator rows that follow. Each row is exactly `n` characters
//! over the alphabet `0`, `1`, `w` (for ω), `W` (for ω̄). Malformed
//! input is rejected with a line/column diagnostic.
//!
//! Reading reduces the rows to the canonical basis; if the declared
//! rows were dependent, the code is still returned but the reduction is
//! reported as a warning in [`ReadOutcome::warnings`]. Writing always
//! emits the canonical basis with no comments, so write → read → write
//! is byte-stable, and read → write is a lossless round trip at the
//! code level (the stored code is unchanged even when the text is
//! normalized).

use std::fmt::Write as _;
use std::path::Path;

use crate::code::AdditiveCode;
use crate::vector::Gf4Vector;
use crate::Error;

/// The result of reading a code file: the code itself plus any
/// non-fatal findings about the input.
#[derive(Clone, Debug)]
pub struct ReadOutcome {
    /// The parsed code, reduced to its canonical basis.
    pub code: AdditiveCode,
    /// Human-readable notes about accepted-but-odd input, such as
    /// dependent generator rows.
    pub warnings: Vec<String>,
}

/// Parses a code from file text. See the module docs for the format.
pub fn parse_code(text: &str) -> Result<ReadOutcome, Error> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.trim().is_empty() && !line.starts_with('#'));

    let (header_ln, header) = significant
        .next()
        .ok_or_else(|| Error::Parse("empty file: expected a header line 'n r'".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse_field = |s: &str| -> Result<usize, Error> {
        s.parse().map_err(|_| {
            Error::Parse(format!(
                "line {header_ln}: expected header 'n r' with two nonnegative integers, found {header:?}"
            ))
        })
    };
    let [n_str, r_str] = fields[..] else {
        return Err(Error::Parse(format!(
            "line {header_ln}: expected header 'n r' with two fields, found {} field(s)",
            fields.len()
        )));
    };
    let n = parse_field(n_str)?;
    let r = parse_field(r_str)?;
    if r > 2 * n {
        return Err(Error::Parse(format!(
            "line {header_ln}: {r} rows declared but a length-{n} code has rank at most {}",
            2 * n
        )));
    }

    let mut rows = Vec::with_capacity(r);
    for _ in 0..r {
        let (ln, line) = significant.next().ok_or_else(|| {
            Error::Parse(format!(
                "unexpected end of file: {r} generator rows declared, found {}",
                rows.len()
            ))
        })?;
        if line.chars().count() != n {
            return Err(Error::Parse(format!(
                "line {ln}: expected {n} characters, found {}",
                line.chars().count()
            )));
        }
        let row: Gf4Vector = line.parse().map_err(|e| match e {
            Error::BadChar(c) => {
                let col = line.chars().position(|x| x == c).unwrap_or(0) + 1;
                Error::Parse(format!(
                    "line {ln}, column {col}: invalid character {c:?} (alphabet is 0, 1, w, W)"
                ))
            }
            other => other,
        })?;
        rows.push(row);
    }
    if let Some((ln, line)) = significant.next() {
        return Err(Error::Parse(format!(
            "line {ln}: unexpected content after the last declared row: {line:?}"
        )));
    }

    let code = AdditiveCode::from_generators(n, rows);
    let mut warnings = Vec::new();
    if code.rank() < r {
        warnings.push(format!(
            "the {r} declared rows are dependent: rank is {}; stored the reduced basis",
            code.rank()
        ));
    }
    Ok(ReadOutcome { code, warnings })
}

/// Renders a code in the file format: a `n r` header followed by the
/// canonical basis rows. Deterministic, comment-free, newline-
/// terminated.
pub fn format_code(code: &AdditiveCode) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", code.n(), code.rank()).unwrap();
    for g in code.generators() {
        writeln!(out, "{g}").unwrap();
    }
    out
}

/// Reads a code file from disk.
pub fn read_code(path: &Path) -> Result<ReadOutcome, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_code(&text)
}

/// Writes a code to disk in the file format.
pub fn write_code(code: &AdditiveCode, path: &Path) -> Result<(), Error> {
    std::fs::write(path, format_code(code))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
