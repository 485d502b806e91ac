//! Facet paths, facet cycles and non-overlapping vertex-unfoldings of
//! simplicial manifolds.
//!
//! A complex is a list of facets over dense vertex indices. The pipeline
//! picks a spanning tree of the dual graph, unfolds along it, builds a
//! scaffold (every facet attached to exactly two of its vertices), connects
//! the scaffold by flips and reads a facet path or cycle off an Euler trail.
//! [`layout`] then places each facet of the path in its own strip.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod complex;
pub mod error;
pub mod hull;
pub mod io;
pub mod layout;
pub mod path;
pub mod report;
pub mod scaffold;
pub mod shapes;
pub mod unfold;

mod linalg;

pub use complex::{build_dual, validate_pseudomanifold, DualGraph, IncidenceGraph, SimplicialComplex};
pub use error::{CycleObstruction, Error, Result};
pub use layout::{layout, verify_layout, Placement, StripLayout};
pub use path::{facet_cycle, facet_path, make_noncrossing, verify_path, FacetPath};
pub use report::{ValidationReport, Violation};
pub use scaffold::Scaffold;
