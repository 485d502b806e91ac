//! JSON documents for complexes and layouts.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::layout::StripLayout;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    dim: usize,
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default)]
    coords: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}

/// Parses `{dim, vertex_count, facets, coords?, labels?}`.
pub fn parse_json(text: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_error)?;
    let mut c = SimplicialComplex::new(doc.dim, doc.vertex_count, doc.facets)?;
    if let Some(x) = doc.coords {
        c = c.with_coords(x)?;
    }
    if let Some(l) = doc.labels {
        c = c.with_labels(l)?;
    }
    Ok(c)
}

pub fn write_complex_json(c: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(c).expect("complexes serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// Hex SHA-256 of the input file.
    pub input_sha256: String,
    #[serde(default)]
    pub seed: Option<u64>,
    pub tool_version: String,
}

impl Provenance {
    pub fn new(input_sha256: String, seed: Option<u64>) -> Self {
        Self {
            input_sha256,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayoutDocument {
    pub provenance: Provenance,
    pub layout: StripLayout,
}

pub fn write_layout_json(doc: &LayoutDocument) -> String {
    serde_json::to_string_pretty(doc).expect("layouts serialize")
}

pub fn parse_layout_json(text: &str) -> Result<LayoutDocument> {
    serde_json::from_str(text).map_err(json_error)
}
