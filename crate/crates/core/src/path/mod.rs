//! Facet paths and facet cycles: trails in the vertex/facet incidence graph
//! that visit every facet exactly once.

mod brute;
mod noncrossing;

pub use brute::{brute_force, brute_force_exists, DEFAULT_CAP};
pub use noncrossing::{crossing_count, make_noncrossing};

use serde::{Deserialize, Serialize};

use crate::complex::{build_dual, DualGraph, SimplicialComplex};
use crate::error::{CycleObstruction, Error, Result};
use crate::report::ValidationReport;
use crate::scaffold::{
    build_even_scaffold_2d, build_even_scaffold_d, build_scaffold_2d, connect_on, Flip, Scaffold,
};
use crate::unfold::{find_noncheckered_tree, spanning_tree, unfold, TreeSearch, UnfoldTree, UnfoldedComplex};

/// Alternating trail `v0, f1, v1, ..., fk, vk`. `facets[i]` joins
/// `vertices[i]` to `vertices[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FacetPath {
    pub vertices: Vec<usize>,
    pub facets: Vec<usize>,
    pub cyclic: bool,
}

impl FacetPath {
    pub fn new(vertices: Vec<usize>, facets: Vec<usize>) -> Self {
        let cyclic = !facets.is_empty() && vertices.first() == vertices.last();
        Self {
            vertices,
            facets,
            cyclic,
        }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `(entry, facet, exit)` for each step.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.facets
            .iter()
            .enumerate()
            .map(|(i, &f)| (self.vertices[i], f, self.vertices[i + 1]))
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        let mut facets = self.facets.clone();
        vertices.reverse();
        facets.reverse();
        Self {
            vertices,
            facets,
            cyclic: self.cyclic,
        }
    }

    /// Rotates a cycle so that the facet at position `i` comes first.
    pub fn rotated(&self, i: usize) -> Self {
        assert!(self.cyclic, "only cycles can be rotated");
        let k = self.facets.len();
        let i = i % k;
        let mut facets = self.facets[i..].to_vec();
        facets.extend_from_slice(&self.facets[..i]);
        let mut vertices = self.vertices[i..k].to_vec();
        vertices.extend_from_slice(&self.vertices[..=i]);
        Self {
            vertices,
            facets,
            cyclic: true,
        }
    }

    /// Rotates a cycle so that facet `f` comes first.
    pub fn starting_at(&self, f: usize) -> Result<Self> {
        if !self.cyclic {
            return Err(Error::Precondition("only a facet cycle can be rotated".into()));
        }
        let i = self
            .facets
            .iter()
            .position(|&g| g == f)
            .ok_or_else(|| Error::Precondition(format!("facet {f} is not on the cycle")))?;
        Ok(self.rotated(i))
    }

    /// Cycles: lowest facet first, then the lexicographically smaller
    /// direction. Open paths: the smaller of the two directions.
    pub fn canonical(&self) -> Self {
        if self.facets.is_empty() {
            return self.clone();
        }
        if !self.cyclic {
            let r = self.reversed();
            return if (&r.facets, &r.vertices) < (&self.facets, &self.vertices) {
                r
            } else {
                self.clone()
            };
        }
        let lowest = |p: &FacetPath| {
            let i = (0..p.facets.len()).min_by_key(|&i| p.facets[i]).unwrap();
            p.rotated(i)
        };
        let a = lowest(self);
        let b = lowest(&self.reversed());
        if (&b.facets, &b.vertices) < (&a.facets, &a.vertices) {
            b
        } else {
            a
        }
    }
}

/// Checks the facet-path conditions against `c`.
pub fn verify_path(c: &SimplicialComplex, p: &FacetPath) -> ValidationReport {
    let mut report = ValidationReport::new();
    if p.vertices.len() != p.facets.len() + 1 {
        report.push(
            "shape",
            format!(
                "{} vertices for {} facets",
                p.vertices.len(),
                p.facets.len()
            ),
            vec![],
        );
        return report;
    }
    let mut seen = vec![0usize; c.facet_count()];
    for (i, (a, f, b)) in p.steps().enumerate() {
        if f >= c.facet_count() {
            report.push("unknown-facet", format!("step {i}: facet {f} out of range"), vec![i, f]);
            continue;
        }
        seen[f] += 1;
        if a == b {
            report.push(
                "degenerate-transition",
                format!("step {i}: facet {f} entered and left at vertex {a}"),
                vec![i, f, a],
            );
        }
        for v in [a, b] {
            if !c.facet(f).contains(&v) {
                report.push(
                    "not-incident",
                    format!("step {i}: vertex {v} is not a vertex of facet {f}"),
                    vec![i, f, v],
                );
            }
        }
    }
    for (f, &n) in seen.iter().enumerate() {
        if n > 1 {
            report.push("facet-repeated", format!("facet {f} appears {n} times"), vec![f]);
        } else if n == 0 {
            report.push("facet-missing", format!("facet {f} is not on the path"), vec![f]);
        }
    }
    let closed = !p.facets.is_empty() && p.vertices.first() == p.vertices.last();
    if closed != p.cyclic {
        report.push(
            "cyclic-flag",
            format!("cyclic flag is {} but the trail is {}", p.cyclic, if closed { "closed" } else { "open" }),
            vec![],
        );
    }
    report
}

/// Euler trail through a connected scaffold. Starts at the lowest odd
/// vertex if there is one, else at the lowest attachment of facet 0.
pub fn euler_trail(s: &Scaffold) -> Result<FacetPath> {
    let n = s.facet_count();
    if n == 0 {
        return Ok(FacetPath::new(Vec::new(), Vec::new()));
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); s.vertex_count()];
    for (f, &[a, b]) in s.attachments().iter().enumerate() {
        adj[a].push((f, b));
        adj[b].push((f, a));
    }
    let odd = s.odd_vertices();
    let start = match odd.first() {
        Some(&v) => v,
        None => s.attached(0)[0],
    };

    let mut used = vec![false; n];
    let mut next = vec![0usize; s.vertex_count()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut out: Vec<(usize, Option<usize>)> = Vec::with_capacity(n + 1);
    while let Some(&(v, _)) = stack.last() {
        let edges = &adj[v];
        while next[v] < edges.len() && used[edges[next[v]].0] {
            next[v] += 1;
        }
        if let Some(&(f, w)) = edges.get(next[v]) {
            used[f] = true;
            stack.push((w, Some(f)));
        } else {
            out.push(stack.pop().unwrap());
        }
    }
    if out.len() != n + 1 {
        return Err(Error::DisconnectedScaffold {
            covered: out.len() - 1,
            total: n,
        });
    }
    out.reverse();
    let vertices = out.iter().map(|&(v, _)| v).collect();
    let facets = out[1..].iter().map(|&(_, f)| f.unwrap()).collect();
    Ok(FacetPath::new(vertices, facets))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Root facet of the breadth-first spanning tree.
    pub seed_facet: usize,
}

/// Intermediate products of one run of the path or cycle pipeline.
#[derive(Debug, Clone)]
pub struct PipelineTrace {
    pub tree: Option<UnfoldTree>,
    pub unfolded: Option<UnfoldedComplex>,
    /// Folded scaffold before flips.
    pub raw_scaffold: Scaffold,
    pub flips: Vec<Flip>,
    pub scaffold: Scaffold,
    pub path: FacetPath,
}

fn checked_dual(c: &SimplicialComplex) -> Result<DualGraph> {
    build_dual(c)
}

fn finish(
    c: &SimplicialComplex,
    dual: &DualGraph,
    tree: Option<UnfoldTree>,
    unfolded: Option<UnfoldedComplex>,
    raw_scaffold: Scaffold,
) -> Result<PipelineTrace> {
    let (scaffold, flips) = connect_on(dual, &raw_scaffold)?;
    let path = euler_trail(&scaffold)?;
    let report = verify_path(c, &path);
    if !report.is_ok() {
        return Err(Error::Invariant(format!("pipeline produced an invalid path: {report}")));
    }
    Ok(PipelineTrace {
        tree,
        unfolded,
        raw_scaffold,
        flips,
        scaffold,
        path,
    })
}

/// Runs the facet-path pipeline and keeps every intermediate product.
pub fn trace_path(c: &SimplicialComplex, opts: &PipelineOptions) -> Result<PipelineTrace> {
    let dual = checked_dual(c)?;
    if c.dim() == 1 || c.facet_count() == 1 {
        let raw = if c.dim() == 1 {
            let att = c.facets().iter().map(|f| [f[0], f[1]]).collect();
            Scaffold::new(c.vertex_count(), att)
        } else {
            Scaffold::lowest_pairs(c)
        };
        return finish(c, &dual, None, None, raw);
    }
    let tree = spanning_tree(&dual, opts.seed_facet)?;
    let u = unfold(c, &dual, &tree)?;
    let raw = if c.dim() == 2 {
        build_scaffold_2d(&u)?
    } else {
        build_even_scaffold_d(&u)?
    };
    let raw = raw.fold(&u, c.vertex_count());
    finish(c, &dual, Some(tree), Some(u), raw)
}

/// Runs the facet-cycle pipeline and keeps every intermediate product.
pub fn trace_cycle(c: &SimplicialComplex, opts: &PipelineOptions) -> Result<PipelineTrace> {
    let dual = checked_dual(c)?;
    let trace = match c.dim() {
        1 => {
            let att = c.facets().iter().map(|f| [f[0], f[1]]).collect();
            let raw = Scaffold::new(c.vertex_count(), att);
            if !raw.is_even() {
                return Err(Error::NoCycle(CycleObstruction::OpenCurve));
            }
            finish(c, &dual, None, None, raw)?
        }
        2 => {
            if !dual.is_simple() {
                return Err(Error::NoCycle(CycleObstruction::NonSimplicial2Manifold));
            }
            let start = spanning_tree(&dual, opts.seed_facet)?;
            let tree = match find_noncheckered_tree(c, &dual, &start)? {
                TreeSearch::Found(t) => t,
                TreeSearch::CheckeredPolygon => {
                    return Err(Error::NoCycle(CycleObstruction::CheckeredPolygon))
                }
            };
            let u = unfold(c, &dual, &tree)?;
            let raw = build_even_scaffold_2d(&u)?.fold(&u, c.vertex_count());
            finish(c, &dual, Some(tree), Some(u), raw)?
        }
        _ => {
            if c.facet_count() == 1 {
                return Err(Error::NoCycle(CycleObstruction::SingleSimplex));
            }
            let tree = spanning_tree(&dual, opts.seed_facet)?;
            let u = unfold(c, &dual, &tree)?;
            let raw = build_even_scaffold_d(&u)?.fold(&u, c.vertex_count());
            finish(c, &dual, Some(tree), Some(u), raw)?
        }
    };
    if !trace.path.cyclic {
        return Err(Error::Invariant("even scaffold produced an open trail".into()));
    }
    Ok(trace)
}

/// A facet path of a connected pseudo-manifold of any dimension.
pub fn facet_path(c: &SimplicialComplex) -> Result<FacetPath> {
    Ok(trace_path(c, &PipelineOptions::default())?.path)
}

/// A facet cycle, optionally rotated so that `start_facet` comes first.
pub fn facet_cycle(c: &SimplicialComplex, start_facet: Option<usize>) -> Result<FacetPath> {
    let path = trace_cycle(c, &PipelineOptions::default())?.path;
    match start_facet {
        Some(f) if f >= c.facet_count() => Err(Error::Precondition(format!(
            "start facet {f} out of range for {} facets",
            c.facet_count()
        ))),
        Some(f) => path.starting_at(f),
        None => Ok(path),
    }
}
