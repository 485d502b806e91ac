//! Removing crossings from a facet path of a 2-manifold.
//!
//! At an interior visit of vertex `v` the path passes from facet `A` to
//! facet `C`. Two visits `(A, C)` and `(B, D)` cross when the four facets
//! appear around `v` in the order A, B, C, D. Reversing the stretch of path
//! between the two visits re-pairs them as `(A, B)` and `(C, D)`, keeps the
//! trail a single walk, and leaves every other vertex's pairs untouched.
//! Viewing the pairs at `v` as chords of a circle, replacing two crossing
//! chords by a non-crossing pair on the same endpoints never increases the
//! number of crossings with any third chord, so the count at `v` strictly
//! drops and the loop terminates.

use std::collections::{BTreeMap, HashMap};

use crate::complex::{vertex_rotation_in, IncidenceGraph, SimplicialComplex};
use crate::error::{Error, Result};

use super::{verify_path, FacetPath};

/// Vertex index of each interior visit, with the facets before and after.
fn visits(p: &FacetPath) -> Vec<(usize, usize, usize, usize)> {
    let k = p.facets.len();
    let mut out: Vec<(usize, usize, usize, usize)> = (1..k)
        .map(|i| (i, p.vertices[i], p.facets[i - 1], p.facets[i]))
        .collect();
    if p.cyclic && k > 1 {
        out.push((0, p.vertices[0], p.facets[k - 1], p.facets[0]));
    }
    out
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: usize| lo < x && x < hi;
    inside(b.0) != inside(b.1)
}

/// Vertices with at least two interior visits; only these can cross.
fn revisited(p: &FacetPath) -> Vec<usize> {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, v, _, _) in visits(p) {
        *count.entry(v).or_default() += 1;
    }
    count.into_iter().filter(|&(_, n)| n >= 2).map(|(v, _)| v).collect()
}

fn positions_around(
    c: &SimplicialComplex,
    inc: &IncidenceGraph,
    v: usize,
) -> Result<HashMap<usize, usize>> {
    Ok(vertex_rotation_in(c, inc, v)?.positions())
}

/// Total number of crossing visit pairs, summed over all vertices.
pub fn crossing_count(c: &SimplicialComplex, p: &FacetPath) -> Result<usize> {
    let inc = IncidenceGraph::new(c);
    let mut total = 0;
    for v in revisited(p) {
        let pos = positions_around(c, &inc, v)?;
        let chords: Vec<(usize, usize)> = visits(p)
            .into_iter()
            .filter(|&(_, w, _, _)| w == v)
            .map(|(_, _, a, b)| (pos[&a], pos[&b]))
            .collect();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                total += interleaved(chords[i], chords[j]) as usize;
            }
        }
    }
    Ok(total)
}

/// Rewrites `p` so that no vertex has crossing visits. The facet set, the
/// endpoints of an open path, and the first facet of a cycle are kept.
pub fn make_noncrossing(c: &SimplicialComplex, p: &FacetPath) -> Result<FacetPath> {
    if c.dim() != 2 {
        return Err(Error::Dimension {
            op: "make_noncrossing",
            dim: c.dim(),
        });
    }
    let report = verify_path(c, p);
    if !report.is_ok() {
        return Err(Error::Precondition(format!("path is not valid: {report}")));
    }
    let inc = IncidenceGraph::new(c);
    let first_facet = p.facets.first().copied();
    let mut path = p.clone();

    for v in revisited(p) {
        let pos = positions_around(c, &inc, v)?;
        loop {
            if path.cyclic && path.vertices[0] == v {
                // move the seam off v so that every visit of v is interior
                let j = path.vertices.iter().position(|&w| w != v).expect("v is not every vertex");
                path = path.rotated(j);
            }
            let at_v: Vec<(usize, (usize, usize))> = (1..path.facets.len())
                .filter(|&i| path.vertices[i] == v)
                .map(|i| (i, (pos[&path.facets[i - 1]], pos[&path.facets[i]])))
                .collect();
            let crossing = (0..at_v.len())
                .flat_map(|x| (x + 1..at_v.len()).map(move |y| (x, y)))
                .find(|&(x, y)| interleaved(at_v[x].1, at_v[y].1));
            let Some((x, y)) = crossing else { break };
            let (i, j) = (at_v[x].0, at_v[y].0);
            path.facets[i..j].reverse();
            path.vertices[i..=j].reverse();
        }
    }

    if let (true, Some(f)) = (path.cyclic, first_facet) {
        path = path.starting_at(f)?;
    }
    Ok(path)
}
