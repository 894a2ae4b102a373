//! The line-oriented instance format.
//!
//! ```text
//! DMC 1 <n> <l> <alpha> <beta>
//! <n body lines over 0, 1, ?>
//! OFFSETS            (optional)
//! <n - 1 lines; line h lists the offsets of pairs (h, h+1), ..., (h, n-1)>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Witness files hold
//! body lines only.

use std::fmt::{self, Write as _};

use dmc_core::{Cell, CompleteMatrix, DmcInstance, IncompleteMatrix, PairOffsets, RowVector};

pub const MAGIC: &str = "DMC";
pub const VERSION: u32 = 1;
pub const OFFSETS_TAG: &str = "OFFSETS";

/// Parse failure with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Content lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim_start().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_row(line_no: usize, line: &str, width: usize, allow_missing: bool) -> Result<RowVector, ParseError> {
    let mut cells = Vec::with_capacity(width);
    for (k, ch) in line.chars().enumerate() {
        let cell = match Cell::from_char(ch) {
            Some(Cell::Missing) if !allow_missing => {
                return Err(ParseError::new(line_no, k + 1, "missing entry in a complete matrix"))
            }
            Some(c) => c,
            None => return Err(ParseError::new(line_no, k + 1, format!("unexpected character {ch:?}"))),
        };
        cells.push(cell);
    }
    if cells.len() != width {
        return Err(ParseError::new(
            line_no,
            cells.len().min(width) + 1,
            format!("row has {} entries, expected {width}", cells.len()),
        ));
    }
    Ok(RowVector::from_cells(&cells))
}

fn header_field(line_no: usize, line: &str, idx: usize) -> Result<usize, ParseError> {
    let mut col = 1;
    for (k, tok) in line.split_whitespace().enumerate() {
        col = line[col - 1..].find(tok).map_or(col, |p| col + p);
        if k == idx {
            return tok
                .parse()
                .map_err(|_| ParseError::new(line_no, col, format!("expected a non-negative integer, got {tok:?}")));
        }
        col += tok.len();
    }
    Err(ParseError::new(line_no, line.len() + 1, "header needs: DMC 1 n l alpha beta"))
}

pub fn parse_instance(text: &str) -> Result<DmcInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty file"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some(MAGIC) {
        return Err(ParseError::new(hl, 1, format!("header must start with {MAGIC}")));
    }
    let version = header_field(hl, header, 1)?;
    if version != VERSION as usize {
        return Err(ParseError::new(hl, header.find(char::is_whitespace).unwrap_or(0) + 2, format!("unsupported version {version}")));
    }
    let n = header_field(hl, header, 2)?;
    let ell = header_field(hl, header, 3)?;
    let alpha = header_field(hl, header, 4)?;
    let beta = header_field(hl, header, 5)?;
    if header.split_whitespace().count() > 6 {
        return Err(ParseError::new(hl, 1, "trailing fields in header"));
    }
    if n == 0 || ell == 0 {
        return Err(ParseError::new(hl, 1, "instance needs at least one row and one column"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = hl;
    for i in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| ParseError::new(last + 1, 1, format!("expected {n} rows, found {i}")))?;
        rows.push(parse_row(ln, line, ell, true)?);
        last = ln;
    }
    let mut offsets = PairOffsets::zeros(n);
    match lines.next() {
        None => {}
        Some((ln, line)) if line.trim() == OFFSETS_TAG => {
            last = ln;
            for h in 0..n - 1 {
                let (ln, line) = lines
                    .next()
                    .ok_or_else(|| ParseError::new(last + 1, 1, format!("expected {} offset lines", n - 1)))?;
                let mut count = 0;
                let mut col = 1;
                for tok in line.split_whitespace() {
                    col = line[col - 1..].find(tok).map_or(col, |p| col + p);
                    let v: usize = tok
                        .parse()
                        .map_err(|_| ParseError::new(ln, col, format!("expected a non-negative integer, got {tok:?}")))?;
                    if h + 1 + count >= n {
                        return Err(ParseError::new(ln, col, format!("row {} has {} offsets", h + 1, n - 1 - h)));
                    }
                    offsets.set(h, h + 1 + count, v);
                    count += 1;
                    col += tok.len();
                }
                if count != n - 1 - h {
                    return Err(ParseError::new(ln, line.len() + 1, format!("expected {} offsets, got {count}", n - 1 - h)));
                }
                last = ln;
            }
            if let Some((ln, _)) = lines.next() {
                return Err(ParseError::new(ln, 1, "unexpected content after offsets"));
            }
        }
        Some((ln, _)) => return Err(ParseError::new(ln, 1, format!("expected {OFFSETS_TAG} or end of file"))),
    }
    let matrix = IncompleteMatrix::new(rows).map_err(|e| ParseError::new(hl, 1, e.to_string()))?;
    DmcInstance::with_offsets(matrix, alpha, beta, offsets).map_err(|e| ParseError::new(hl, 1, e.to_string()))
}

/// Body lines of a complete matrix; the width comes from the first row.
pub fn parse_completion(text: &str) -> Result<CompleteMatrix, ParseError> {
    let mut rows = Vec::new();
    let mut width = None;
    for (ln, line) in content_lines(text) {
        let w = *width.get_or_insert(line.chars().count());
        rows.push(parse_row(ln, line, w, false)?);
    }
    if rows.is_empty() {
        return Err(ParseError::new(1, 1, "empty completion"));
    }
    CompleteMatrix::new(rows).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

pub fn write_instance(inst: &DmcInstance) -> String {
    let s = inst.matrix();
    let mut out = format!(
        "{MAGIC} {VERSION} {} {} {} {}\n",
        s.num_rows(),
        s.num_cols(),
        inst.alpha(),
        inst.beta()
    );
    for r in s.rows() {
        let _ = writeln!(out, "{r}");
    }
    if inst.has_offsets() {
        let n = s.num_rows();
        let _ = writeln!(out, "{OFFSETS_TAG}");
        for h in 0..n.saturating_sub(1) {
            let line: Vec<String> = (h + 1..n).map(|h2| inst.offsets().get(h, h2).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    }
    out
}

pub fn write_completion(t: &CompleteMatrix) -> String {
    let mut out = String::new();
    for r in t.rows() {
        let _ = writeln!(out, "{r}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG: &str = "DMC 1 4 5 0 4\n?1101\n?1010\n10010\n0?101\n";

    #[test]
    fn reads_and_writes_plain() {
        let inst = parse_instance(FIG).unwrap();
        assert_eq!(inst.num_rows(), 4);
        assert_eq!((inst.alpha(), inst.beta()), (0, 4));
        assert_eq!(write_instance(&inst), FIG);
    }

    #[test]
    fn offsets_section() {
        let text = "DMC 1 3 2 1 9\n0?\n11\n??\nOFFSETS\n4 5\n6\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.offsets().get(0, 2), 5);
        assert_eq!(inst.offsets().get(1, 2), 6);
        assert_eq!(write_instance(&inst), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# worked example\n\nDMC 1 2 2 0 2\n01\n\n# second row\n1?\n";
        assert_eq!(parse_instance(text).unwrap().num_cols(), 2);
    }

    #[test]
    fn error_locations() {
        let e = parse_instance("DMC 1 2 3 0 1\n0x1\n000\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 2));
        let e = parse_instance("DMC 1 2 3 0 1\n01\n000\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_instance("DMC 1 2 3 zero 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 11));
        let e = parse_instance("DMX 1 1 1 0 0\n0\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_instance("DMC 1 3 1 0 1\n0\n1\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_instance("DMC 1 3 1 0 1\n0\n1\n0\nOFFSETS\n1\n2\n").unwrap_err();
        assert_eq!(e.line, 6);
        let e = parse_instance("DMC 1 1 1 2 1\n0\n").unwrap_err();
        assert!(e.message.contains("alpha"), "{e}");
        assert!(parse_instance("DMC 2 1 1 0 0\n0\n").is_err());
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn completion_rejects_missing() {
        let e = parse_completion("01\n1?\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 2));
        assert!(parse_completion("01\n111\n").is_err());
        let t = parse_completion("01\n10\n").unwrap();
        assert_eq!(write_completion(&t), "01\n10\n");
    }
}
