//! Scaffolds: subgraphs of the incidence graph in which every facet has
//! degree two and at most two vertices have odd degree.
//!
//! Scaffolds are built on an unfolded complex (dual graph a tree) by
//! repeatedly stripping a hat together with some of its ears, then folded
//! back onto the source complex and made connected with flips across
//! shared ridges.

use std::collections::{BTreeSet, VecDeque};

use petgraph::unionfind::UnionFind;

use crate::complex::{build_dual, DualGraph, SimplicialComplex};
use crate::error::{CycleObstruction, Error, Result};
use crate::report::ValidationReport;
use crate::unfold::UnfoldedComplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scaffold {
    vertex_count: usize,
    attachments: Vec<[usize; 2]>,
}

impl Scaffold {
    /// Attachment pairs are stored sorted.
    pub fn new(vertex_count: usize, attachments: Vec<[usize; 2]>) -> Self {
        let attachments = attachments
            .into_iter()
            .map(|[a, b]| [a.min(b), a.max(b)])
            .collect();
        Self {
            vertex_count,
            attachments,
        }
    }

    /// Each facet attached to its two lowest-index vertices; for a single
    /// facet this is the trivial facet path.
    pub fn lowest_pairs(c: &SimplicialComplex) -> Self {
        let attachments = c
            .facets()
            .iter()
            .map(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                [s[0], s[1]]
            })
            .collect();
        Self::new(c.vertex_count(), attachments)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facet_count(&self) -> usize {
        self.attachments.len()
    }

    pub fn attachments(&self) -> &[[usize; 2]] {
        &self.attachments
    }

    pub fn attached(&self, f: usize) -> [usize; 2] {
        self.attachments[f]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &[a, b] in &self.attachments {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d % 2 == 1)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_even(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    pub fn components(&self) -> ComponentStructure {
        ComponentStructure::new(self)
    }

    pub fn component_count(&self) -> usize {
        self.components().count()
    }

    /// Pushes the scaffold of an unfolding forward along its folding map.
    pub fn fold(&self, u: &UnfoldedComplex, source_vertex_count: usize) -> Scaffold {
        let attachments = self
            .attachments
            .iter()
            .map(|&[a, b]| [u.fold_vertex(a), u.fold_vertex(b)])
            .collect();
        Scaffold::new(source_vertex_count, attachments)
    }

    /// Checks the scaffold conditions against `c`.
    pub fn verify(&self, c: &SimplicialComplex) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.facet_count() != c.facet_count() {
            report.push(
                "facet-count",
                format!(
                    "scaffold covers {} facets, complex has {}",
                    self.facet_count(),
                    c.facet_count()
                ),
                vec![],
            );
            return report;
        }
        for (f, &[a, b]) in self.attachments.iter().enumerate() {
            if a == b {
                report.push("repeated-arc", format!("facet {f} attached twice to {a}"), vec![f, a]);
            }
            for v in [a, b] {
                if !c.facet(f).contains(&v) {
                    report.push(
                        "foreign-vertex",
                        format!("facet {f} attached to vertex {v} it does not contain"),
                        vec![f, v],
                    );
                }
            }
        }
        let odd = self.odd_vertices();
        if odd.len() > 2 {
            report.push(
                "odd-vertices",
                format!("{} vertices have odd degree", odd.len()),
                odd,
            );
        }
        report
    }
}

/// Connected components over scaffold nodes: vertices are `0..V`, facet `f`
/// is node `V + f`.
pub struct ComponentStructure {
    sets: UnionFind<usize>,
    vertex_count: usize,
    facet_count: usize,
}

impl ComponentStructure {
    fn new(s: &Scaffold) -> Self {
        let v = s.vertex_count();
        let mut sets = UnionFind::new(v + s.facet_count());
        for (f, &[a, b]) in s.attachments().iter().enumerate() {
            sets.union(v + f, a);
            sets.union(v + f, b);
        }
        Self {
            sets,
            vertex_count: v,
            facet_count: s.facet_count(),
        }
    }

    pub fn facet_node(&self, f: usize) -> usize {
        self.vertex_count + f
    }

    pub fn same_component(&mut self, x: usize, y: usize) -> bool {
        self.sets.find_mut(x) == self.sets.find_mut(y)
    }

    /// Number of components containing at least one facet.
    pub fn count(&mut self) -> usize {
        let mut roots: Vec<usize> = (0..self.facet_count)
            .map(|f| self.sets.find_mut(self.vertex_count + f))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

fn shared(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
    s.sort_unstable();
    s
}

/// Ear/hat bookkeeping while facets are stripped from a dual tree.
struct Pruner<'a> {
    tree: &'a [Vec<usize>],
    alive: Vec<bool>,
    degree: Vec<usize>,
    remaining: usize,
    /// hats with at least two ears
    mickey: BTreeSet<usize>,
    /// hats with exactly one ear
    dunce: BTreeSet<usize>,
}

impl<'a> Pruner<'a> {
    fn new(tree: &'a [Vec<usize>]) -> Self {
        let n = tree.len();
        let mut p = Self {
            tree,
            alive: vec![true; n],
            degree: tree.iter().map(Vec::len).collect(),
            remaining: n,
            mickey: BTreeSet::new(),
            dunce: BTreeSet::new(),
        };
        for f in 0..n {
            p.classify(f);
        }
        p
    }

    fn is_ear(&self, f: usize) -> bool {
        self.alive[f] && self.degree[f] <= 1
    }

    /// Ears adjacent to `f`, ascending, if `f` is a hat.
    fn hat_ears(&self, f: usize) -> Option<Vec<usize>> {
        if !self.alive[f] {
            return None;
        }
        let mut ears = Vec::new();
        let mut others = 0;
        for &g in &self.tree[f] {
            if !self.alive[g] {
                continue;
            }
            if self.is_ear(g) {
                ears.push(g);
            } else {
                others += 1;
            }
        }
        if ears.is_empty() || others > 1 {
            return None;
        }
        ears.sort_unstable();
        Some(ears)
    }

    fn classify(&mut self, f: usize) {
        self.mickey.remove(&f);
        self.dunce.remove(&f);
        match self.hat_ears(f).map(|e| e.len()) {
            Some(1) => {
                self.dunce.insert(f);
            }
            Some(_) => {
                self.mickey.insert(f);
            }
            None => {}
        }
    }

    fn remove(&mut self, nodes: &[usize]) {
        for &f in nodes {
            debug_assert!(self.alive[f]);
            self.alive[f] = false;
            self.remaining -= 1;
            self.mickey.remove(&f);
            self.dunce.remove(&f);
            for &g in &self.tree[f] {
                if self.alive[g] {
                    self.degree[g] -= 1;
                }
            }
        }
        let mut touched = Vec::new();
        for &f in nodes {
            for &g in &self.tree[f] {
                if self.alive[g] {
                    touched.push(g);
                    touched.extend(self.tree[g].iter().copied().filter(|&h| self.alive[h]));
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        for f in touched {
            self.classify(f);
        }
    }

    fn lowest_hat(&self) -> Option<usize> {
        match (self.mickey.first(), self.dunce.first()) {
            (Some(&a), Some(&b)) => Some(a.min(b)),
            (a, b) => a.or(b).copied(),
        }
    }

    fn last_alive(&self) -> usize {
        self.alive.iter().position(|&a| a).expect("one facet remains")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Lowest-index hat each step; may end on a lone triangle.
    Surface,
    /// Mickey Mouse hats preferred, so no lone triangle for non-checkered trees.
    EvenSurface,
    /// Four-case recursion for d >= 3.
    EvenHigher,
}

fn build(u: &UnfoldedComplex, mode: Mode) -> Result<Scaffold> {
    let c = &u.complex;
    let n = c.facet_count();
    if n == 0 {
        return Err(Error::Precondition("complex has no facets".into()));
    }
    if u.tree.len() != n {
        return Err(Error::Precondition("dual tree does not match facets".into()));
    }
    let mut attachments: Vec<Option<[usize; 2]>> = vec![None; n];
    let mut pruner = Pruner::new(&u.tree);

    while pruner.remaining > 0 {
        if pruner.remaining == 1 {
            let f = pruner.last_alive();
            match mode {
                Mode::Surface => {
                    let mut s = c.facet(f).to_vec();
                    s.sort_unstable();
                    attachments[f] = Some([s[0], s[1]]);
                    pruner.remove(&[f]);
                    continue;
                }
                Mode::EvenSurface => return Err(Error::CheckeredInput),
                Mode::EvenHigher if n == 1 => {
                    return Err(Error::NoCycle(CycleObstruction::SingleSimplex))
                }
                Mode::EvenHigher => {
                    return Err(Error::Invariant(
                        "four-case recursion left a single simplex".into(),
                    ))
                }
            }
        }

        let hat = match mode {
            Mode::EvenSurface => pruner
                .mickey
                .first()
                .or(pruner.dunce.first())
                .copied(),
            _ => pruner.lowest_hat(),
        }
        .ok_or_else(|| Error::Invariant("dual tree with two or more facets has no hat".into()))?;
        let ears = pruner.hat_ears(hat).expect("hat sets are current");

        match mode {
            Mode::Surface | Mode::EvenSurface => {
                if ears.len() >= 2 {
                    // cycle (r, E, q, H, s, F, r)
                    let (e, f) = (ears[0], ears[1]);
                    let eh = shared(c.facet(e), c.facet(hat));
                    let fh = shared(c.facet(f), c.facet(hat));
                    let r = *shared(&eh, &fh).first().ok_or_else(|| {
                        Error::Invariant(format!("ears {e} and {f} of hat {hat} share no vertex"))
                    })?;
                    let q = eh.iter().copied().find(|&v| v != r).unwrap();
                    let s = fh.iter().copied().find(|&v| v != r).unwrap();
                    attachments[e] = Some([q, r]);
                    attachments[hat] = Some([q, s]);
                    attachments[f] = Some([r, s]);
                    pruner.remove(&[hat, e, f]);
                } else {
                    // cycle (q, H, r, E, q)
                    let e = ears[0];
                    let qr = shared(c.facet(hat), c.facet(e));
                    let pair = [qr[0], qr[1]];
                    attachments[hat] = Some(pair);
                    attachments[e] = Some(pair);
                    pruner.remove(&[hat, e]);
                }
            }
            Mode::EvenHigher => {
                if pruner.remaining == 3 {
                    // hat plus two ears: cycle (p, E, q, H, r, F, p)
                    let (e, f) = (ears[0], ears[1]);
                    let ef = shared(c.facet(e), c.facet(f));
                    let eh = shared(c.facet(e), c.facet(hat));
                    let hf = shared(c.facet(hat), c.facet(f));
                    let p = *ef.first().ok_or_else(|| no_choice("p", hat))?;
                    let q = *eh.iter().find(|&&v| v != p).ok_or_else(|| no_choice("q", hat))?;
                    let r = *hf
                        .iter()
                        .find(|&&v| v != p && v != q)
                        .ok_or_else(|| no_choice("r", hat))?;
                    attachments[e] = Some([p, q]);
                    attachments[hat] = Some([q, r]);
                    attachments[f] = Some([r, p]);
                    pruner.remove(&[hat, e, f]);
                } else if ears.len() == 1 {
                    // cycle (p, H, q, E, p) on the shared ridge
                    let e = ears[0];
                    let ridge = shared(c.facet(hat), c.facet(e));
                    let pair = [ridge[0], ridge[1]];
                    attachments[hat] = Some(pair);
                    attachments[e] = Some(pair);
                    pruner.remove(&[hat, e]);
                } else {
                    // two ears of one hat share a (d-2)-face: cycle (p, E, q, F, p)
                    let (e, f) = (ears[0], ears[1]);
                    let face = shared(c.facet(e), c.facet(f));
                    if face.len() < 2 {
                        return Err(no_choice("p, q", hat));
                    }
                    let pair = [face[0], face[1]];
                    attachments[e] = Some(pair);
                    attachments[f] = Some(pair);
                    pruner.remove(&[e, f]);
                }
            }
        }
    }

    let attachments = attachments
        .into_iter()
        .map(|a| a.expect("every facet is removed exactly once"))
        .collect();
    Ok(Scaffold::new(c.vertex_count(), attachments))
}

fn no_choice(which: &str, hat: usize) -> Error {
    Error::Invariant(format!("no admissible vertex {which} around hat {hat}"))
}

fn require_dim(u: &UnfoldedComplex, ok: bool, op: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Dimension { op, dim: u.dim() })
    }
}

/// A (possibly disconnected) scaffold of a triangulated polygon with no
/// interior vertices.
pub fn build_scaffold_2d(u: &UnfoldedComplex) -> Result<Scaffold> {
    require_dim(u, u.dim() == 2, "build_scaffold_2d")?;
    build(u, Mode::Surface)
}

/// An even scaffold of a non-checkered triangulated polygon.
pub fn build_even_scaffold_2d(u: &UnfoldedComplex) -> Result<Scaffold> {
    require_dim(u, u.dim() == 2, "build_even_scaffold_2d")?;
    build(u, Mode::EvenSurface)
}

/// An even scaffold of an unfolded d-manifold, d >= 3, with at least two
/// facets.
pub fn build_even_scaffold_d(u: &UnfoldedComplex) -> Result<Scaffold> {
    require_dim(u, u.dim() >= 3, "build_even_scaffold_d")?;
    build(u, Mode::EvenHigher)
}

/// One flip: `q` moved from facet `a` to facet `b`, `r` from `b` to `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flip {
    pub a: usize,
    pub b: usize,
    pub q: usize,
    pub r: usize,
}

/// Makes a scaffold of `c` connected; see [`connect_on`].
pub fn connect(c: &SimplicialComplex, s: &Scaffold) -> Result<Scaffold> {
    let dual = build_dual(c)?;
    Ok(connect_on(&dual, s)?.0)
}

/// Walks the dual arcs in order and flips across every arc whose facets lie
/// in different components. Vertex degrees and facet degrees are unchanged.
///
/// Each flip merges exactly the two components involved: at most one of
/// the two removed arcs can be a bridge, since only the component holding
/// the odd vertices can have bridges. So merges are tracked with union-find.
pub fn connect_on(dual: &DualGraph, s: &Scaffold) -> Result<(Scaffold, Vec<Flip>)> {
    connect_impl(dual, s, false)
}

/// [`connect_on`], recounting components from scratch after every flip and
/// failing if a flip did not remove exactly one component.
pub fn connect_checked(dual: &DualGraph, s: &Scaffold) -> Result<(Scaffold, Vec<Flip>)> {
    connect_impl(dual, s, true)
}

fn connect_impl(dual: &DualGraph, s: &Scaffold, recount: bool) -> Result<(Scaffold, Vec<Flip>)> {
    if dual.facet_count() != s.facet_count() {
        return Err(Error::Precondition(
            "scaffold and dual graph disagree on facet count".into(),
        ));
    }
    let v = s.vertex_count();
    let mut att = s.attachments().to_vec();
    let mut sets = UnionFind::<usize>::new(v + att.len());
    for (f, &[a, b]) in att.iter().enumerate() {
        sets.union(v + f, a);
        sets.union(v + f, b);
    }
    let mut flips = Vec::new();
    let mut count = if recount { count_from_scratch(v, &att) } else { 0 };

    for arc in dual.arcs() {
        let (a, b) = (arc.a, arc.b);
        if a == b || sets.find_mut(v + a) == sets.find_mut(v + b) {
            continue;
        }
        let q = att[a].iter().copied().filter(|x| arc.ridge.contains(x)).min();
        let r = att[b].iter().copied().filter(|x| arc.ridge.contains(x)).min();
        let (q, r) = match (q, r) {
            (Some(q), Some(r)) if q != r => (q, r),
            _ => {
                return Err(Error::Invariant(format!(
                    "no flip across facets {a} and {b}: attachments {:?} / {:?}",
                    att[a], att[b]
                )))
            }
        };
        replace(&mut att[a], q, r);
        replace(&mut att[b], r, q);
        sets.union(v + a, v + b);
        flips.push(Flip { a, b, q, r });
        if recount {
            let now = count_from_scratch(v, &att);
            if now + 1 != count {
                return Err(Error::Invariant(format!(
                    "flip across ({a}, {b}) changed component count {count} -> {now}"
                )));
            }
            count = now;
        }
    }
    Ok((Scaffold::new(v, att), flips))
}

fn replace(pair: &mut [usize; 2], from: usize, to: usize) {
    let slot = pair.iter_mut().find(|x| **x == from).expect("attached vertex");
    *slot = to;
    if pair[0] > pair[1] {
        pair.swap(0, 1);
    }
}

/// Component count by breadth-first search over the scaffold's arcs.
fn count_from_scratch(vertex_count: usize, att: &[[usize; 2]]) -> usize {
    let mut at_vertex = vec![Vec::new(); vertex_count];
    for (f, &[a, b]) in att.iter().enumerate() {
        at_vertex[a].push(f);
        at_vertex[b].push(f);
    }
    let mut seen = vec![false; att.len()];
    let mut count = 0;
    for start in 0..att.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &x in &att[f] {
                for &g in &at_vertex[x] {
                    if !seen[g] {
                        seen[g] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
    }
    count
}
