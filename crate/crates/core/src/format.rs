//! Text file formats for matrices, codes, encoders, and CSS pairs.
//!
//! All formats are line oriented. Blank lines and lines starting with `#`
//! are ignored by every parser, so writers may embed provenance comments.
//! Writers emit a canonical form that parses back bit-exactly.
//!
//! - matrix: a header `p rows cols`, then `rows` lines of `cols`
//!   space-separated canonical residues (no entry lines when a dimension is
//!   zero);
//! - code: a header line `generator` or `parity_check`, then a matrix;
//! - encoder: a header line `k_prime <value>`, then a generator code block;
//! - css pair: a header line `css`, the `C_X` code block, a separator line
//!   `---`, and the `C_Z` code block.

use std::fmt::Write as _;

use crate::code::LinearCode;
use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::zkenc::RandomizedEncoder;

/// Which matrix a code block carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeBlockKind {
    Generator,
    ParityCheck,
}

impl CodeBlockKind {
    fn header(self) -> &'static str {
        match self {
            CodeBlockKind::Generator => "generator",
            CodeBlockKind::ParityCheck => "parity_check",
        }
    }
}

/// Any artifact the toolkit reads from a file, detected by its header line.
#[derive(Debug, Clone)]
pub enum Artifact {
    Code(LinearCode),
    Encoder(RandomizedEncoder),
    Css(Box<CssCode>),
}

/// Line cursor that skips blanks and `#` comments and reports 1-based line
/// numbers in errors.
struct Cursor<'a> {
    lines: std::vec::IntoIter<(usize, &'a str)>,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Cursor {
            lines: lines.into_iter(),
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.as_slice().first().copied()
    }

    fn next(&mut self, expected: &str) -> Result<(usize, &'a str)> {
        self.lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of input, expected {expected}")))
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.lines.next() {
            None => Ok(()),
            Some((line, content)) => Err(Error::parse(
                line,
                format!("unexpected trailing content: {content:?}"),
            )),
        }
    }
}

fn parse_fields(line: usize, content: &str, expected: usize, what: &str) -> Result<Vec<u64>> {
    let fields: Vec<u64> = content
        .split_whitespace()
        .map(|f| {
            f.parse::<u64>()
                .map_err(|_| Error::parse(line, format!("{what}: {f:?} is not a number")))
        })
        .collect::<Result<_>>()?;
    if fields.len() != expected {
        return Err(Error::parse(
            line,
            format!("{what}: expected {expected} fields, found {}", fields.len()),
        ));
    }
    Ok(fields)
}

fn parse_matrix_at(cursor: &mut Cursor) -> Result<Matrix> {
    let (line, header) = cursor.next("matrix header `p rows cols`")?;
    let dims = parse_fields(line, header, 3, "matrix header")?;
    let field = PrimeField::new(dims[0]).map_err(|e| Error::parse(line, e.to_string()))?;
    let (rows, cols) = (dims[1] as usize, dims[2] as usize);
    if rows == 0 || cols == 0 {
        return Ok(Matrix::zeros(field, rows, cols));
    }
    let mut data = Vec::with_capacity(rows);
    if cols > 0 {
        for _ in 0..rows {
            let (line, content) = cursor.next("matrix row")?;
            let row = parse_fields(line, content, cols, "matrix row")?;
            for &v in &row {
                if v >= field.modulus() {
                    return Err(Error::parse(
                        line,
                        format!(
                            "entry {v} is not a canonical residue mod {}",
                            field.modulus()
                        ),
                    ));
                }
            }
            data.push(row);
        }
    } else {
        data.resize(rows, Vec::new());
    }
    Ok(Matrix::from_rows(field, &data))
}

pub fn matrix_to_text(m: &Matrix) -> String {
    let mut out = format!("{} {} {}\n", m.field().modulus(), m.rows(), m.cols());
    if m.cols() > 0 {
        for i in 0..m.rows() {
            let mut first = true;
            for j in 0..m.cols() {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{}", m.get(i, j));
                first = false;
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut cursor = Cursor::new(text);
    let m = parse_matrix_at(&mut cursor)?;
    cursor.expect_end()?;
    Ok(m)
}

fn parse_code_block(cursor: &mut Cursor) -> Result<(LinearCode, CodeBlockKind)> {
    let (line, header) = cursor.next("code header `generator` or `parity_check`")?;
    let kind = match header {
        "generator" => CodeBlockKind::Generator,
        "parity_check" => CodeBlockKind::ParityCheck,
        other => {
            return Err(Error::parse(
                line,
                format!("expected `generator` or `parity_check`, found {other:?}"),
            ))
        }
    };
    let matrix = parse_matrix_at(cursor)?;
    let code = match kind {
        CodeBlockKind::Generator => LinearCode::from_generator(matrix)?,
        CodeBlockKind::ParityCheck => LinearCode::from_parity_check(matrix)?,
    };
    Ok((code, kind))
}

pub fn code_to_text(code: &LinearCode, kind: CodeBlockKind) -> String {
    let matrix = match kind {
        CodeBlockKind::Generator => code.generator(),
        CodeBlockKind::ParityCheck => code.parity_check(),
    };
    format!("{}\n{}", kind.header(), matrix_to_text(matrix))
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut cursor = Cursor::new(text);
    let (code, _) = parse_code_block(&mut cursor)?;
    cursor.expect_end()?;
    Ok(code)
}

pub fn encoder_to_text(encoder: &RandomizedEncoder) -> String {
    format!(
        "k_prime {}\ngenerator\n{}",
        encoder.k_prime(),
        matrix_to_text(encoder.generator())
    )
}

pub fn parse_encoder(text: &str) -> Result<RandomizedEncoder> {
    let mut cursor = Cursor::new(text);
    let encoder = parse_encoder_at(&mut cursor)?;
    cursor.expect_end()?;
    Ok(encoder)
}

fn parse_encoder_at(cursor: &mut Cursor) -> Result<RandomizedEncoder> {
    let (line, header) = cursor.next("encoder header `k_prime <value>`")?;
    let k_prime = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["k_prime", v] => v
            .parse::<usize>()
            .map_err(|_| Error::parse(line, format!("k_prime: {v:?} is not a number")))?,
        _ => {
            return Err(Error::parse(
                line,
                format!("expected `k_prime <value>`, found {header:?}"),
            ))
        }
    };
    let (gen_line, gen_header) = cursor.next("`generator`")?;
    if gen_header != "generator" {
        return Err(Error::parse(
            gen_line,
            "an encoder is defined by a specific generator matrix; the block must be `generator`",
        ));
    }
    let matrix = parse_matrix_at(cursor)?;
    RandomizedEncoder::new(matrix, k_prime)
}

pub fn css_to_text(css: &CssCode) -> String {
    format!(
        "css\n{}---\n{}",
        code_to_text(css.cx(), CodeBlockKind::ParityCheck),
        code_to_text(css.cz(), CodeBlockKind::ParityCheck)
    )
}

pub fn parse_css(text: &str) -> Result<CssCode> {
    let mut cursor = Cursor::new(text);
    let css = parse_css_at(&mut cursor)?;
    cursor.expect_end()?;
    Ok(css)
}

fn parse_css_at(cursor: &mut Cursor) -> Result<CssCode> {
    let (line, header) = cursor.next("`css`")?;
    if header != "css" {
        return Err(Error::parse(
            line,
            format!("expected `css`, found {header:?}"),
        ));
    }
    let (cx, _) = parse_code_block(cursor)?;
    let (sep_line, sep) = cursor.next("`---` separator")?;
    if sep != "---" {
        return Err(Error::parse(
            sep_line,
            format!("expected `---` between the two code blocks, found {sep:?}"),
        ));
    }
    let (cz, _) = parse_code_block(cursor)?;
    CssCode::new(cx, cz)
}

/// Parses any artifact, detecting the type from its header line.
pub fn parse_artifact(text: &str) -> Result<Artifact> {
    let mut cursor = Cursor::new(text);
    let Some((line, header)) = cursor.peek() else {
        return Err(Error::parse(0, "empty input"));
    };
    let artifact = if header == "css" {
        Artifact::Css(Box::new(parse_css_at(&mut cursor)?))
    } else if header.starts_with("k_prime") {
        Artifact::Encoder(parse_encoder_at(&mut cursor)?)
    } else if header == "generator" || header == "parity_check" {
        Artifact::Code(parse_code_block(&mut cursor)?.0)
    } else {
        return Err(Error::parse(
            line,
            format!(
                "expected a header line (`css`, `k_prime <v>`, `generator`, or `parity_check`), found {header:?}"
            ),
        ));
    };
    cursor.expect_end()?;
    Ok(artifact)
}
