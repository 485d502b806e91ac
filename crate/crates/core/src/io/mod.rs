//! Reading and writing complexes and layouts.
//!
//! Readers come in two flavours: `parse_*` turns text into a complex and
//! reports positioned syntax errors, `read_*` additionally loads a file and
//! rejects complexes that fail [`validate_pseudomanifold`].

mod json;
mod obj;
mod off;
mod svg;

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::complex::{validate_pseudomanifold, SimplicialComplex};
use crate::error::{Error, Result};

pub use json::{
    parse_json, parse_layout_json, write_complex_json, write_layout_json, LayoutDocument, Provenance,
};
pub use obj::parse_obj;
pub use off::{parse_off, write_off};
pub use svg::{write_svg, SvgOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Off,
    Obj,
    Json,
}

impl Format {
    /// Guesses the format from the file extension, then from the content.
    pub fn detect(path: &Path, text: &str) -> Format {
        let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("off") => Format::Off,
            Some("obj") => Format::Obj,
            Some("json") => Format::Json,
            _ => {
                let head = text.trim_start();
                if head.starts_with('{') {
                    Format::Json
                } else if head.starts_with("OFF") {
                    Format::Off
                } else {
                    Format::Obj
                }
            }
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<SimplicialComplex> {
    match format {
        Format::Off => parse_off(text),
        Format::Obj => parse_obj(text),
        Format::Json => parse_json(text),
    }
}

fn validated(c: SimplicialComplex) -> Result<SimplicialComplex> {
    let report = validate_pseudomanifold(&c);
    if report.is_ok() {
        Ok(c)
    } else {
        Err(Error::Validation(report))
    }
}

pub fn read_off(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    validated(parse_off(&fs::read_to_string(path)?)?)
}

pub fn read_obj(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    validated(parse_obj(&fs::read_to_string(path)?)?)
}

pub fn read_json(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    validated(parse_json(&fs::read_to_string(path)?)?)
}

/// Reads a complex in whichever format [`Format::detect`] picks. Returns
/// the raw bytes too, for hashing.
pub fn read_complex(path: impl AsRef<Path>) -> Result<(SimplicialComplex, Vec<u8>)> {
    let path = path.as_ref();
    let bytes = fs::read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| Error::parse(1, 1, format!("input is not UTF-8: {e}")))?;
    let c = validated(parse(&text, Format::detect(path, &text))?)?;
    Ok((c, bytes))
}

/// Lowercase hex SHA-256 of `bytes`.
pub fn input_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Non-comment tokens of one line with their 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

pub(crate) fn parse_number<T: std::str::FromStr>(
    line: usize,
    (col, tok): (usize, &str),
    what: &str,
) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, col, format!("expected {what}, found `{tok}`")))
}
