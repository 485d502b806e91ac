//! Abstract simplicial complexes and the graphs derived from them.
//!
//! A [`SimplicialComplex`] is a list of d-dimensional facets over dense
//! vertex indices. Ridges (codimension-1 faces) are identified by their
//! sorted vertex tuples, so two facets are glued exactly when they share
//! `d` vertices. Everything else in the crate (incidence graph, dual graph,
//! rotations around a vertex) is derived from this one representation.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::report::ValidationReport;

/// Sorted vertex tuple of a codimension-1 face.
pub type Ridge = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    dim: usize,
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl SimplicialComplex {
    /// Builds an abstract complex. Facets must have `dim + 1` entries, all
    /// below `vertex_count`; the remaining manifold conditions are checked by
    /// [`validate_pseudomanifold`].
    pub fn new(dim: usize, vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidComplex("dimension must be at least 1".into()));
        }
        for (i, f) in facets.iter().enumerate() {
            if f.len() != dim + 1 {
                return Err(Error::InvalidComplex(format!(
                    "facet {i} has {} vertices, expected {}",
                    f.len(),
                    dim + 1
                )));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidComplex(format!(
                    "facet {i} references vertex {v} but vertex_count is {vertex_count}"
                )));
            }
        }
        Ok(Self {
            dim,
            vertex_count,
            facets,
            coords: None,
            labels: None,
        })
    }

    /// Attaches coordinates (one point per vertex, ambient dimension >= dim).
    /// Rejects facets whose vertices are affinely dependent.
    pub fn with_coords(mut self, coords: Vec<Vec<f64>>) -> Result<Self> {
        if coords.len() != self.vertex_count {
            return Err(Error::InvalidComplex(format!(
                "{} coordinate rows for {} vertices",
                coords.len(),
                self.vertex_count
            )));
        }
        let ambient = coords.first().map_or(self.dim, Vec::len);
        if ambient < self.dim {
            return Err(Error::InvalidComplex(format!(
                "ambient dimension {ambient} is smaller than complex dimension {}",
                self.dim
            )));
        }
        for (i, p) in coords.iter().enumerate() {
            if p.len() != ambient {
                return Err(Error::InvalidComplex(format!(
                    "vertex {i} has {} coordinates, expected {ambient}",
                    p.len()
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidComplex(format!(
                    "vertex {i} has a non-finite coordinate"
                )));
            }
        }
        for (i, f) in self.facets.iter().enumerate() {
            let pts: Vec<&[f64]> = f.iter().map(|&v| coords[v].as_slice()).collect();
            if !linalg::affinely_independent(&pts) {
                return Err(Error::DegenerateFacet { facet: i });
            }
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidComplex(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet(&self, f: usize) -> &[usize] {
        &self.facets[f]
    }

    pub fn coords(&self) -> Option<&[Vec<f64>]> {
        self.coords.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The ridges of facet `f`, in the order of the omitted local vertex.
    pub fn ridges_of(&self, f: usize) -> impl Iterator<Item = Ridge> + '_ {
        let facet = &self.facets[f];
        (0..facet.len()).map(move |omit| {
            let mut r: Ridge = facet
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != omit)
                .map(|(_, &v)| v)
                .collect();
            r.sort_unstable();
            r
        })
    }
}

/// Bipartite vertex/facet adjacency; arc (v, f) iff v is a vertex of f.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    vertex_facets: Vec<Vec<usize>>,
    facet_vertices: Vec<Vec<usize>>,
}

impl IncidenceGraph {
    pub fn new(c: &SimplicialComplex) -> Self {
        let mut vertex_facets = vec![Vec::new(); c.vertex_count()];
        for (f, facet) in c.facets().iter().enumerate() {
            for &v in facet {
                vertex_facets[v].push(f);
            }
        }
        Self {
            vertex_facets,
            facet_vertices: c.facets().to_vec(),
        }
    }

    pub fn facets_of(&self, v: usize) -> &[usize] {
        &self.vertex_facets[v]
    }

    pub fn vertices_of(&self, f: usize) -> &[usize] {
        &self.facet_vertices[f]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_facets.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facet_vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.facet_vertices.iter().map(Vec::len).sum()
    }
}

/// Two facets glued along a ridge. `a <= b`; `a == b` is a self-loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DualArc {
    pub a: usize,
    pub b: usize,
    pub ridge: Ridge,
}

impl DualArc {
    pub fn other(&self, f: usize) -> usize {
        if f == self.a {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryRidge {
    pub facet: usize,
    pub ridge: Ridge,
}

/// Facet adjacency across ridges. Arcs are sorted by facet pair, then ridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    facet_count: usize,
    arcs: Vec<DualArc>,
    boundary: Vec<BoundaryRidge>,
    adjacency: Vec<Vec<usize>>,
}

impl DualGraph {
    /// Assembles a dual graph from explicit arcs. Used by [`build_dual`] and
    /// for gluings that facet lists cannot express (self-loops).
    pub fn from_arcs(
        facet_count: usize,
        mut arcs: Vec<DualArc>,
        mut boundary: Vec<BoundaryRidge>,
    ) -> Self {
        for arc in &mut arcs {
            if arc.a > arc.b {
                std::mem::swap(&mut arc.a, &mut arc.b);
            }
        }
        arcs.sort_unstable();
        boundary.sort_unstable();
        let mut adjacency = vec![Vec::new(); facet_count];
        for (i, arc) in arcs.iter().enumerate() {
            adjacency[arc.a].push(i);
            if arc.b != arc.a {
                adjacency[arc.b].push(i);
            }
        }
        Self {
            facet_count,
            arcs,
            boundary,
            adjacency,
        }
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    pub fn arcs(&self) -> &[DualArc] {
        &self.arcs
    }

    pub fn arc(&self, i: usize) -> &DualArc {
        &self.arcs[i]
    }

    pub fn boundary(&self) -> &[BoundaryRidge] {
        &self.boundary
    }

    /// Arc indices incident to facet `f`, ascending.
    pub fn arcs_at(&self, f: usize) -> &[usize] {
        &self.adjacency[f]
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adjacency[f].len()
    }

    /// No self-loops and no two arcs joining the same pair of facets.
    pub fn is_simple(&self) -> bool {
        self.arcs.iter().all(|a| a.a != a.b)
            && self
                .arcs
                .windows(2)
                .all(|w| (w[0].a, w[0].b) != (w[1].a, w[1].b))
    }

    pub fn is_tree(&self) -> bool {
        self.facet_count > 0 && self.arcs.len() + 1 == self.facet_count && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        if self.facet_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.facet_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(f) = stack.pop() {
            for &i in &self.adjacency[f] {
                let g = self.arcs[i].other(f);
                if !seen[g] {
                    seen[g] = true;
                    count += 1;
                    stack.push(g);
                }
            }
        }
        count == self.facet_count
    }
}

fn ridge_map(c: &SimplicialComplex) -> HashMap<Ridge, Vec<usize>> {
    let mut map: HashMap<Ridge, Vec<usize>> = HashMap::with_capacity(c.facet_count() * 2);
    for f in 0..c.facet_count() {
        for r in c.ridges_of(f) {
            map.entry(r).or_default().push(f);
        }
    }
    map
}

fn analyze(c: &SimplicialComplex) -> (ValidationReport, HashMap<Ridge, Vec<usize>>) {
    let mut report = ValidationReport::new();
    if c.facet_count() == 0 {
        report.push("empty", "complex has no facets", vec![]);
        return (report, HashMap::new());
    }
    for (i, f) in c.facets().iter().enumerate() {
        let mut sorted = f.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            report.push(
                "repeated-vertex",
                format!("facet {i} {f:?} repeats a vertex"),
                vec![i],
            );
        }
    }
    let map = ridge_map(c);
    let mut overfull: Vec<(&Ridge, &Vec<usize>)> =
        map.iter().filter(|(_, fs)| fs.len() > 2).collect();
    overfull.sort_unstable();
    for (ridge, fs) in overfull {
        report.push(
            "ridge-overfull",
            format!("ridge {ridge:?} lies in {} facets {fs:?}", fs.len()),
            fs.clone(),
        );
    }

    let mut uf = UnionFind::<usize>::new(c.facet_count());
    for fs in map.values() {
        for w in fs.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut root_seen = vec![false; c.facet_count()];
    for f in 0..c.facet_count() {
        let root = uf.find(f);
        if !root_seen[root] {
            root_seen[root] = true;
            reps.push(f);
        }
    }
    if reps.len() > 1 {
        report.push(
            "disconnected-dual",
            format!("dual graph has {} components", reps.len()),
            reps,
        );
    }
    (report, map)
}

/// Checks the pseudo-manifold conditions the pipeline relies on: every facet
/// has distinct vertices, every ridge lies in at most two facets, and the
/// dual graph is connected.
pub fn validate_pseudomanifold(c: &SimplicialComplex) -> ValidationReport {
    analyze(c).0
}

/// Builds the dual graph, rejecting complexes that fail validation.
pub fn build_dual(c: &SimplicialComplex) -> Result<DualGraph> {
    let (report, map) = analyze(c);
    if !report.is_ok() {
        return Err(Error::Validation(report));
    }
    let mut arcs = Vec::new();
    let mut boundary = Vec::new();
    for (ridge, fs) in map {
        match fs.as_slice() {
            [f] => boundary.push(BoundaryRidge { facet: *f, ridge }),
            [a, b] => arcs.push(DualArc {
                a: *a.min(b),
                b: *a.max(b),
                ridge,
            }),
            _ => unreachable!("overfull ridges rejected by validation"),
        }
    }
    Ok(DualGraph::from_arcs(c.facet_count(), arcs, boundary))
}

/// True iff the dual graph has no multi-arcs and no self-loops.
pub fn is_simplicial(c: &SimplicialComplex) -> Result<bool> {
    Ok(build_dual(c)?.is_simple())
}

/// Facets around a vertex of a 2-complex, ordered by successive edge sharing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation {
    pub vertex: usize,
    pub facets: Vec<usize>,
    /// Interior vertex (closed fan) when true, boundary vertex otherwise.
    pub cyclic: bool,
}

impl Rotation {
    /// Position of each facet in the rotation.
    pub fn positions(&self) -> HashMap<usize, usize> {
        self.facets.iter().enumerate().map(|(i, &f)| (f, i)).collect()
    }
}

pub fn vertex_rotation(c: &SimplicialComplex, v: usize) -> Result<Rotation> {
    if c.dim() != 2 {
        return Err(Error::Dimension {
            op: "vertex_rotation",
            dim: c.dim(),
        });
    }
    if v >= c.vertex_count() {
        return Err(Error::Precondition(format!("vertex {v} out of range")));
    }
    let star: Vec<usize> = (0..c.facet_count())
        .filter(|&f| c.facet(f).contains(&v))
        .collect();
    rotation_of_star(c, v, &star)
}

/// Same as [`vertex_rotation`], reusing a prebuilt incidence graph.
pub fn vertex_rotation_in(
    c: &SimplicialComplex,
    incidence: &IncidenceGraph,
    v: usize,
) -> Result<Rotation> {
    if c.dim() != 2 {
        return Err(Error::Dimension {
            op: "vertex_rotation",
            dim: c.dim(),
        });
    }
    rotation_of_star(c, v, incidence.facets_of(v))
}

fn rotation_of_star(c: &SimplicialComplex, v: usize, star: &[usize]) -> Result<Rotation> {
    let non_manifold = || Error::NonManifoldStar { vertex: v };
    if star.is_empty() {
        return Err(non_manifold());
    }
    // link vertices of each facet in the star
    let link = |f: usize| -> [usize; 2] {
        let mut it = c.facet(f).iter().copied().filter(|&w| w != v);
        [it.next().unwrap(), it.next().unwrap()]
    };
    let mut by_link: HashMap<usize, Vec<usize>> = HashMap::new();
    for &f in star {
        for w in link(f) {
            by_link.entry(w).or_default().push(f);
        }
    }
    if by_link.values().any(|fs| fs.len() > 2) {
        return Err(non_manifold());
    }
    let across = |f: usize, w: usize| -> Option<usize> {
        by_link[&w].iter().copied().find(|&g| g != f)
    };

    let open_end = star
        .iter()
        .copied()
        .filter(|&f| link(f).iter().any(|w| by_link[w].len() == 1))
        .min();
    let (start, mut exit, cyclic) = match open_end {
        Some(f) => {
            let [a, b] = link(f);
            // leave through the side that has a neighbour
            let exit = if by_link[&a].len() == 1 { b } else { a };
            (f, exit, false)
        }
        None => {
            let start = *star.iter().min().unwrap();
            let [a, b] = link(start);
            let na = across(start, a).unwrap();
            let nb = across(start, b).unwrap();
            (start, if na <= nb { a } else { b }, true)
        }
    };

    let mut order = vec![start];
    let mut current = start;
    while let Some(next) = across(current, exit) {
        if next == start {
            break;
        }
        if order.len() > star.len() {
            return Err(non_manifold());
        }
        order.push(next);
        let [a, b] = link(next);
        exit = if a == exit { b } else { a };
        current = next;
    }
    if order.len() != star.len() {
        return Err(non_manifold());
    }
    Ok(Rotation {
        vertex: v,
        facets: order,
        cyclic,
    })
}
