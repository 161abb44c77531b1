//! Text formats for matrices, linear codes, and fuzzy chains.
//!
//! A matrix file is a `p rows cols` header followed by one line per row.
//! Code files carry a format tag and headers:
//!
//! ```text
//! LINEARCODE 1            FUZZYCODE 1
//! field: 2                field: 2
//! length: 7               length: 8
//! dim: 4                  levels: 8
//! <dim basis rows>        alphas: 1 7/8 3/4 5/8 1/2 3/8 1/4 1/8
//!                         dims: 0 1 2 3 4 5 6 7
//!                         <master rows for the largest cut>
//! ```
//!
//! Rows are space-separated residues; over fields up to GF(9) contiguous
//! digit strings are also accepted. Alphas are reduced fractions (or the
//! integers 0 and 1). Blank lines are ignored; anything else after the
//! expected content is an error. All errors carry 1-based line numbers.

use thiserror::Error;

use crate::code::LinearCode;
use crate::fuzzy::FuzzyLinearCode;
use crate::gf::{FieldMatrix, FieldSpec, FieldVector};
use crate::rational::Rational;

/// A parse failure, pointing at the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// The recognized file kinds, by leading tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Matrix,
    LinearCode,
    FuzzyCode,
}

/// Classifies a file by its first non-blank line: a `LINEARCODE` or
/// `FUZZYCODE` tag, or a bare matrix header.
pub fn detect_kind(text: &str) -> FileKind {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("LINEARCODE") {
            return FileKind::LinearCode;
        }
        if line.starts_with("FUZZYCODE") {
            return FileKind::FuzzyCode;
        }
        break;
    }
    FileKind::Matrix
}

/// Non-blank lines with their 1-based numbers.
struct Cursor<'a> {
    lines: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { lines: text.lines().enumerate().peekable() }
    }

    fn next_line(&mut self, expected: &str) -> Result<(usize, &'a str), ParseError> {
        loop {
            match self.lines.next() {
                None => {
                    return err(0, format!("unexpected end of file, expected {expected}"));
                }
                Some((i, line)) => {
                    let trimmed = line.trim();
                    if !trimmed.is_empty() {
                        return Ok((i + 1, trimmed));
                    }
                }
            }
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        loop {
            match self.lines.next() {
                None => return Ok(()),
                Some((i, line)) => {
                    if !line.trim().is_empty() {
                        return err(i + 1, "unexpected trailing content");
                    }
                }
            }
        }
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| ParseError {
        line,
        message: format!("expected {what}, got '{token}'"),
    })
}

fn parse_residue(field: FieldSpec, token: &str, line: usize) -> Result<u64, ParseError> {
    let value = token
        .parse::<u64>()
        .map_err(|_| ParseError { line, message: format!("expected a residue, got '{token}'") })?;
    if value >= field.modulus() {
        return err(line, format!("residue {value} is out of range for GF({})", field.modulus()));
    }
    Ok(value)
}

/// One row of `cols` residues: either `cols` space-separated tokens, or (for
/// fields up to GF(9)) contiguous digit strings totalling `cols` characters.
fn parse_row(field: FieldSpec, cols: usize, text: &str, line: usize) -> Result<Vec<u64>, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() == cols {
        return tokens.iter().map(|t| parse_residue(field, t, line)).collect();
    }
    if field.modulus() <= 9 {
        let digits: String = tokens.concat();
        if digits.len() == cols {
            return digits
                .chars()
                .map(|c| {
                    let d = c.to_digit(10).ok_or_else(|| ParseError {
                        line,
                        message: format!("expected a digit, got '{c}'"),
                    })?;
                    if u64::from(d) >= field.modulus() {
                        return err(
                            line,
                            format!("residue {d} is out of range for GF({})", field.modulus()),
                        );
                    }
                    Ok(u64::from(d))
                })
                .collect();
        }
    }
    err(line, format!("expected {cols} entries"))
}

/// A vector in either accepted form: space/comma-separated residues, or a
/// contiguous digit string over fields up to GF(9).
pub fn parse_vector(field: FieldSpec, text: &str) -> Result<FieldVector, ParseError> {
    let tokens: Vec<&str> =
        text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    if tokens.is_empty() {
        return err(1, "empty vector");
    }
    let entries: Vec<u64> = if tokens.len() == 1 && tokens[0].len() > 1 {
        if field.modulus() > 9 {
            return err(1, format!("contiguous digits need a field up to GF(9), got GF({}); separate entries with spaces or commas", field.modulus()));
        }
        parse_row(field, tokens[0].len(), tokens[0], 1)?
    } else {
        tokens.iter().map(|t| parse_residue(field, t, 1)).collect::<Result<_, _>>()?
    };
    Ok(FieldVector::new(field, entries).expect("residues already checked"))
}

fn parse_field(token: &str, line: usize) -> Result<FieldSpec, ParseError> {
    let p = token
        .parse::<u64>()
        .map_err(|_| ParseError { line, message: format!("expected a prime, got '{token}'") })?;
    FieldSpec::new(p).map_err(|e| ParseError { line, message: e.to_string() })
}

/// Parses a bare matrix file: `p rows cols` header, then the rows.
pub fn parse_matrix(text: &str) -> Result<FieldMatrix, ParseError> {
    let mut cursor = Cursor::new(text);
    let (line, header) = cursor.next_line("a 'p rows cols' header")?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 {
        return err(line, "header must be 'p rows cols'");
    }
    let field = parse_field(tokens[0], line)?;
    let rows = parse_usize(tokens[1], line, "a row count")?;
    let cols = parse_usize(tokens[2], line, "a column count")?;
    if cols == 0 {
        return err(line, "column count must be positive");
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line, text) = cursor.next_line("a matrix row")?;
        entries.extend(parse_row(field, cols, text, line)?);
    }
    cursor.expect_end()?;
    Ok(FieldMatrix::new(field, rows, cols, entries).expect("entries already checked"))
}

/// Renders a matrix in the bare format, rows space-separated.
pub fn write_matrix(m: &FieldMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.field().modulus(), m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn expect_tag(cursor: &mut Cursor, tag: &str) -> Result<(), ParseError> {
    let (line, text) = cursor.next_line(&format!("the '{tag} 1' tag"))?;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != tag {
        return err(line, format!("expected '{tag} <version>'"));
    }
    if tokens[1] != "1" {
        return err(line, format!("unsupported {tag} version '{}'", tokens[1]));
    }
    Ok(())
}

fn header_value<'a>(cursor: &mut Cursor<'a>, key: &str) -> Result<(usize, &'a str), ParseError> {
    let (line, text) = cursor.next_line(&format!("'{key}: ...'"))?;
    match text.split_once(':') {
        Some((k, v)) if k.trim() == key => Ok((line, v.trim())),
        _ => err(line, format!("expected '{key}: ...', got '{text}'")),
    }
}

/// Parses a `LINEARCODE 1` file. The declared dimension must match the rank
/// of the listed rows.
pub fn parse_linear_code(text: &str) -> Result<LinearCode, ParseError> {
    let mut cursor = Cursor::new(text);
    expect_tag(&mut cursor, "LINEARCODE")?;
    let (line, value) = header_value(&mut cursor, "field")?;
    let field = parse_field(value, line)?;
    let (line, value) = header_value(&mut cursor, "length")?;
    let n = parse_usize(value, line, "a length")?;
    if n == 0 {
        return err(line, "length must be positive");
    }
    let (dim_line, value) = header_value(&mut cursor, "dim")?;
    let dim = parse_usize(value, dim_line, "a dimension")?;
    if dim > n {
        return err(dim_line, format!("dim {dim} exceeds length {n}"));
    }
    let mut rows = Vec::with_capacity(dim);
    for _ in 0..dim {
        let (line, text) = cursor.next_line("a basis row")?;
        let entries = parse_row(field, n, text, line)?;
        rows.push(FieldVector::new(field, entries).expect("residues already checked"));
    }
    cursor.expect_end()?;
    let code = LinearCode::from_rows(field, n, &rows)
        .map_err(|e| ParseError { line: dim_line, message: e.to_string() })?;
    if code.dim() != dim {
        return err(dim_line, format!("declared dim {dim} but rows have rank {}", code.dim()));
    }
    Ok(code)
}

/// Renders a code in the `LINEARCODE 1` format, basis rows space-separated.
pub fn write_linear_code(code: &LinearCode) -> String {
    let mut out = format!(
        "LINEARCODE 1\nfield: {}\nlength: {}\ndim: {}\n",
        code.field().modulus(),
        code.n(),
        code.dim()
    );
    for row in code.basis().row_vectors() {
        let cells: Vec<String> = row.entries().iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a `FUZZYCODE 1` file: levels as reduced fractions, dimensions, and
/// the master rows of the largest cut.
pub fn parse_fuzzy_code(text: &str) -> Result<FuzzyLinearCode, ParseError> {
    let mut cursor = Cursor::new(text);
    expect_tag(&mut cursor, "FUZZYCODE")?;
    let (line, value) = header_value(&mut cursor, "field")?;
    let field = parse_field(value, line)?;
    let (line, value) = header_value(&mut cursor, "length")?;
    let n = parse_usize(value, line, "a length")?;
    if n == 0 {
        return err(line, "length must be positive");
    }
    let (line, value) = header_value(&mut cursor, "levels")?;
    let levels = parse_usize(value, line, "a level count")?;
    if levels == 0 {
        return err(line, "a chain needs at least one level");
    }
    let (alpha_line, value) = header_value(&mut cursor, "alphas")?;
    let alphas: Vec<Rational> = value
        .split_whitespace()
        .map(|t| t.parse::<Rational>().map_err(|e| ParseError { line: alpha_line, message: e.to_string() }))
        .collect::<Result<_, _>>()?;
    if alphas.len() != levels {
        return err(alpha_line, format!("expected {levels} alphas, got {}", alphas.len()));
    }
    let (dims_line, value) = header_value(&mut cursor, "dims")?;
    let dims: Vec<usize> = value
        .split_whitespace()
        .map(|t| parse_usize(t, dims_line, "a dimension"))
        .collect::<Result<_, _>>()?;
    if dims.len() != levels {
        return err(dims_line, format!("expected {levels} dims, got {}", dims.len()));
    }
    let row_count = *dims.last().expect("levels >= 1");
    let mut rows = Vec::with_capacity(row_count);
    for _ in 0..row_count {
        let (line, text) = cursor.next_line("a master row")?;
        let entries = parse_row(field, n, text, line)?;
        rows.push(FieldVector::new(field, entries).expect("residues already checked"));
    }
    cursor.expect_end()?;
    let chain: Vec<(Rational, usize)> = alphas.into_iter().zip(dims).collect();
    FuzzyLinearCode::from_master_rows(field, n, &rows, &chain)
        .map_err(|e| ParseError { line: dims_line, message: e.to_string() })
}

/// Renders a chain in the `FUZZYCODE 1` format.
pub fn write_fuzzy_code(code: &FuzzyLinearCode) -> String {
    let alphas: Vec<String> = code.levels().iter().map(|&(a, _)| a.to_string()).collect();
    let dims: Vec<String> = code.levels().iter().map(|&(_, k)| k.to_string()).collect();
    let mut out = format!(
        "FUZZYCODE 1\nfield: {}\nlength: {}\nlevels: {}\nalphas: {}\ndims: {}\n",
        code.field().modulus(),
        code.n(),
        code.num_levels(),
        alphas.join(" "),
        dims.join(" ")
    );
    for row in code.master_rows().row_vectors() {
        let cells: Vec<String> = row.entries().iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
