use std::fmt;

use crate::report::ValidationReport;

/// Why a facet cycle cannot be produced for a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleObstruction {
    /// A 2-dimensional complex whose dual graph is a checkered tree.
    CheckeredPolygon,
    /// A single d-simplex with d >= 3.
    SingleSimplex,
    /// A 2-manifold whose dual graph has multi-arcs or loops.
    NonSimplicial2Manifold,
    /// A 1-dimensional complex that is a path rather than a closed curve.
    OpenCurve,
}

impl CycleObstruction {
    pub fn name(self) -> &'static str {
        match self {
            CycleObstruction::CheckeredPolygon => "CheckeredPolygon",
            CycleObstruction::SingleSimplex => "SingleSimplex",
            CycleObstruction::NonSimplicial2Manifold => "NonSimplicial2Manifold",
            CycleObstruction::OpenCurve => "OpenCurve",
        }
    }
}

impl fmt::Display for CycleObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("complex is not a connected pseudo-manifold: {0}")]
    Validation(ValidationReport),

    #[error("facet {facet} is a degenerate simplex (affinely dependent coordinates)")]
    DegenerateFacet { facet: usize },

    #[error("degenerate simplex")]
    DegenerateSimplex,

    #[error("no facet cycle exists: {0}")]
    NoCycle(CycleObstruction),

    #[error("vertex {vertex} does not have a single edge-connected star")]
    NonManifoldStar { vertex: usize },

    #[error("{op} is not defined for dimension {dim}")]
    Dimension { op: &'static str, dim: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("even scaffold recursion reached a lone triangle; input unfolding is checkered")]
    CheckeredInput,

    #[error(
        "no single tree swap among {candidates} candidates yields a non-checkered unfolding \
         ({facets} facets, {non_tree_arcs} non-tree arcs)"
    )]
    SwapSearchExhausted {
        facets: usize,
        non_tree_arcs: usize,
        candidates: usize,
    },

    #[error("brute-force search limited to {cap} facets, complex has {facets}")]
    BruteForceCap { facets: usize, cap: usize },

    #[error("scaffold is disconnected; euler trail covers {covered} of {total} facets")]
    DisconnectedScaffold { covered: usize, total: usize },

    #[error("internal invariant failure: {0}")]
    Invariant(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: non-triangular face with {count} vertices")]
    NonTriangularFace { line: usize, count: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
