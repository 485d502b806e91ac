//! Spanning trees of the dual graph, topological unfoldings, and the
//! checkered-triangulation test.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use crate::complex::{build_dual, DualGraph, SimplicialComplex};
use crate::error::{Error, Result};

/// A spanning tree of a [`DualGraph`], as ascending arc indices into it.
/// Arcs not in the tree form the cut set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnfoldTree {
    facet_count: usize,
    arcs: Vec<usize>,
}

impl UnfoldTree {
    /// Wraps a set of arc indices, checking that they span `dual` as a tree.
    pub fn from_arcs(dual: &DualGraph, mut arcs: Vec<usize>) -> Result<Self> {
        arcs.sort_unstable();
        arcs.dedup();
        let n = dual.facet_count();
        if n == 0 || arcs.len() + 1 != n {
            return Err(Error::Precondition(format!(
                "{} arcs cannot span {n} facets as a tree",
                arcs.len()
            )));
        }
        let mut uf = UnionFind::<usize>::new(n);
        for &i in &arcs {
            let arc = dual.arcs().get(i).ok_or_else(|| {
                Error::Precondition(format!("arc index {i} out of range"))
            })?;
            if !uf.union(arc.a, arc.b) {
                return Err(Error::Precondition(format!("arc {i} closes a cycle")));
            }
        }
        Ok(Self {
            facet_count: n,
            arcs,
        })
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    pub fn contains(&self, arc: usize) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// Dual arcs not in the tree, ascending.
    pub fn cut_arcs(&self, dual: &DualGraph) -> Vec<usize> {
        (0..dual.arcs().len()).filter(|&i| !self.contains(i)).collect()
    }

    /// Neighbour lists of the tree, each ascending by arc index.
    pub fn adjacency(&self, dual: &DualGraph) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.facet_count];
        for &i in &self.arcs {
            let arc = dual.arc(i);
            adj[arc.a].push(arc.b);
            adj[arc.b].push(arc.a);
        }
        adj
    }
}

/// Breadth-first spanning tree rooted at `seed`; neighbours are visited in
/// arc-index order.
pub fn spanning_tree(dual: &DualGraph, seed: usize) -> Result<UnfoldTree> {
    let n = dual.facet_count();
    if seed >= n {
        return Err(Error::Precondition(format!(
            "seed facet {seed} out of range for {n} facets"
        )));
    }
    let mut seen = vec![false; n];
    let mut arcs = Vec::with_capacity(n.saturating_sub(1));
    let mut queue = VecDeque::from([seed]);
    seen[seed] = true;
    while let Some(f) = queue.pop_front() {
        for &i in dual.arcs_at(f) {
            let g = dual.arc(i).other(f);
            if !seen[g] {
                seen[g] = true;
                arcs.push(i);
                queue.push_back(g);
            }
        }
    }
    if arcs.len() + 1 != n {
        return Err(Error::Precondition("dual graph is disconnected".into()));
    }
    arcs.sort_unstable();
    Ok(UnfoldTree {
        facet_count: n,
        arcs,
    })
}

/// A complex whose dual graph is a tree, with the folding map back to the
/// complex it was cut from. Facet indices are shared with the source.
#[derive(Debug, Clone)]
pub struct UnfoldedComplex {
    pub complex: SimplicialComplex,
    /// Folding map on vertices: unfolded vertex -> source vertex.
    pub vertex_map: Vec<usize>,
    /// Dual tree of `complex`, as neighbour lists.
    pub tree: Vec<Vec<usize>>,
}

impl UnfoldedComplex {
    /// Treats a complex whose dual graph is already a tree as its own
    /// unfolding.
    pub fn identity(c: &SimplicialComplex) -> Result<Self> {
        let dual = build_dual(c)?;
        if !dual.is_tree() {
            return Err(Error::Precondition("dual graph is not a tree".into()));
        }
        let arcs = (0..dual.arcs().len()).collect();
        let tree = UnfoldTree::from_arcs(&dual, arcs)?;
        Ok(Self {
            complex: c.clone(),
            vertex_map: (0..c.vertex_count()).collect(),
            tree: tree.adjacency(&dual),
        })
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn facet_count(&self) -> usize {
        self.complex.facet_count()
    }

    pub fn fold_vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }
}

/// Glues the facets of `c` only along the ridges of `tree`, duplicating
/// vertices along every cut ridge.
pub fn unfold(c: &SimplicialComplex, dual: &DualGraph, tree: &UnfoldTree) -> Result<UnfoldedComplex> {
    if tree.facet_count() != c.facet_count() || dual.facet_count() != c.facet_count() {
        return Err(Error::Precondition(
            "tree does not span the complex's dual graph".into(),
        ));
    }
    let k = c.dim() + 1;
    let corner = |f: usize, v: usize| -> usize {
        let local = c.facet(f).iter().position(|&w| w == v).expect("ridge vertex in facet");
        f * k + local
    };
    let mut uf = UnionFind::<usize>::new(c.facet_count() * k);
    for &i in tree.arcs() {
        let arc = dual.arc(i);
        for &v in &arc.ridge {
            uf.union(corner(arc.a, v), corner(arc.b, v));
        }
    }
    let mut class_id = vec![usize::MAX; c.facet_count() * k];
    let mut vertex_map = Vec::new();
    let mut facets = Vec::with_capacity(c.facet_count());
    for (f, facet) in c.facets().iter().enumerate() {
        let mut out = Vec::with_capacity(k);
        for (local, &v) in facet.iter().enumerate() {
            let root = uf.find_mut(f * k + local);
            if class_id[root] == usize::MAX {
                class_id[root] = vertex_map.len();
                vertex_map.push(v);
            }
            out.push(class_id[root]);
        }
        facets.push(out);
    }
    let mut complex = SimplicialComplex::new(c.dim(), vertex_map.len(), facets)?;
    if let Some(coords) = c.coords() {
        let lifted = vertex_map.iter().map(|&v| coords[v].clone()).collect();
        complex = complex.with_coords(lifted)?;
    }
    Ok(UnfoldedComplex {
        complex,
        vertex_map,
        tree: tree.adjacency(dual),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

/// A proper 2-colouring of a dual tree in which every white facet has
/// exactly three neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkering {
    pub colors: Vec<Color>,
}

impl Checkering {
    pub fn white(&self) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Color::White)
            .map(|(i, _)| i)
    }
}

/// Checkering of a tree given by neighbour lists, if one exists.
pub fn checkering_of_tree(tree: &[Vec<usize>]) -> Option<Checkering> {
    let n = tree.len();
    if n == 0 {
        return None;
    }
    let mut parity = vec![u8::MAX; n];
    let mut queue = VecDeque::from([0]);
    parity[0] = 0;
    while let Some(f) = queue.pop_front() {
        for &g in &tree[f] {
            if parity[g] == u8::MAX {
                parity[g] = 1 - parity[f];
                queue.push_back(g);
            }
        }
    }
    // white class = one parity class; either orientation may qualify
    for white in [1u8, 0] {
        if (0..n).all(|f| parity[f] != white || tree[f].len() == 3) {
            let colors = parity
                .iter()
                .map(|&p| if p == white { Color::White } else { Color::Black })
                .collect();
            return Some(Checkering { colors });
        }
    }
    None
}

/// Checkering of a 2-dimensional unfolding, if its dual tree is checkered.
pub fn checkering_of(u: &UnfoldedComplex) -> Result<Option<Checkering>> {
    if u.dim() != 2 {
        return Err(Error::Dimension {
            op: "checkering_of",
            dim: u.dim(),
        });
    }
    Ok(checkering_of_tree(&u.tree))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSearch {
    /// A spanning tree whose unfolding is not checkered.
    Found(UnfoldTree),
    /// The dual graph is itself a checkered tree: only a facet path exists.
    CheckeredPolygon,
}

/// Searches single tree swaps (add a cut arc, drop a tree arc on the cycle
/// it closes) for a spanning tree whose unfolding is not checkered.
/// Cut arcs and cycle arcs are tried in ascending index order.
pub fn find_noncheckered_tree(
    c: &SimplicialComplex,
    dual: &DualGraph,
    start: &UnfoldTree,
) -> Result<TreeSearch> {
    if c.dim() != 2 {
        return Err(Error::Dimension {
            op: "find_noncheckered_tree",
            dim: c.dim(),
        });
    }
    let adjacency = start.adjacency(dual);
    if checkering_of_tree(&adjacency).is_none() {
        return Ok(TreeSearch::Found(start.clone()));
    }
    let cut = start.cut_arcs(dual);
    if cut.is_empty() {
        return Ok(TreeSearch::CheckeredPolygon);
    }

    // root the tree to recover cycle paths
    let n = dual.facet_count();
    let mut parent_arc = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_arcs_at = vec![Vec::new(); n];
    for &i in start.arcs() {
        let arc = dual.arc(i);
        tree_arcs_at[arc.a].push(i);
        tree_arcs_at[arc.b].push(i);
    }
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(f) = queue.pop_front() {
        for &i in &tree_arcs_at[f] {
            let g = dual.arc(i).other(f);
            if !seen[g] {
                seen[g] = true;
                parent_arc[g] = i;
                depth[g] = depth[f] + 1;
                queue.push_back(g);
            }
        }
    }

    let mut candidates = 0;
    for &e in &cut {
        let (mut x, mut y) = (dual.arc(e).a, dual.arc(e).b);
        let mut cycle = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                cycle.push(parent_arc[x]);
                x = dual.arc(parent_arc[x]).other(x);
            } else {
                cycle.push(parent_arc[y]);
                y = dual.arc(parent_arc[y]).other(y);
            }
        }
        cycle.sort_unstable();
        for &drop in &cycle {
            candidates += 1;
            let arcs: Vec<usize> = start
                .arcs()
                .iter()
                .copied()
                .filter(|&i| i != drop)
                .chain(std::iter::once(e))
                .collect();
            let swapped = UnfoldTree::from_arcs(dual, arcs)?;
            if checkering_of_tree(&swapped.adjacency(dual)).is_none() {
                return Ok(TreeSearch::Found(swapped));
            }
        }
    }
    Err(Error::SwapSearchExhausted {
        facets: n,
        non_tree_arcs: cut.len(),
        candidates,
    })
}
