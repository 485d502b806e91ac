//! Exhaustive backtracking over the vertex/facet incidence graph. Used as a
//! test oracle on small complexes.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::complex::{IncidenceGraph, SimplicialComplex};
use crate::error::{Error, Result};

use super::FacetPath;

/// Largest facet count accepted by default.
pub const DEFAULT_CAP: usize = 9;

struct Search<'a> {
    inc: IncidenceGraph,
    c: &'a SimplicialComplex,
    want_cycle: bool,
    used: Vec<bool>,
    vertices: Vec<usize>,
    facets: Vec<usize>,
}

impl Search<'_> {
    /// Extends the partial trail, which currently ends at `vertices.last()`.
    fn extend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(FacetPath) -> ControlFlow<()>,
    {
        let n = self.c.facet_count();
        let here = *self.vertices.last().expect("trail has a start vertex");
        if self.facets.len() == n {
            if !self.want_cycle || here == self.vertices[0] {
                return visit(FacetPath::new(self.vertices.clone(), self.facets.clone()));
            }
            return ControlFlow::Continue(());
        }
        for i in 0..self.inc.facets_of(here).len() {
            let f = self.inc.facets_of(here)[i];
            if self.used[f] {
                continue;
            }
            self.used[f] = true;
            self.facets.push(f);
            for &w in self.c.facet(f) {
                if w == here {
                    continue;
                }
                self.vertices.push(w);
                let flow = self.extend(visit);
                self.vertices.pop();
                flow?;
            }
            self.facets.pop();
            self.used[f] = false;
        }
        ControlFlow::Continue(())
    }
}

fn search<F>(c: &SimplicialComplex, want_cycle: bool, cap: usize, mut visit: F) -> Result<()>
where
    F: FnMut(FacetPath) -> ControlFlow<()>,
{
    let n = c.facet_count();
    if n > cap {
        return Err(Error::BruteForceCap { facets: n, cap });
    }
    if n == 0 {
        return Ok(());
    }
    let mut s = Search {
        inc: IncidenceGraph::new(c),
        c,
        want_cycle,
        used: vec![false; n],
        vertices: Vec::with_capacity(n + 1),
        facets: Vec::with_capacity(n),
    };
    // a cycle passes through facet 0, so it may be taken as the first facet
    let starts: Vec<usize> = if want_cycle { vec![0] } else { (0..n).collect() };
    for f in starts {
        s.used[f] = true;
        s.facets.push(f);
        for &u in c.facet(f) {
            for &w in c.facet(f) {
                if u == w {
                    continue;
                }
                s.vertices.push(u);
                s.vertices.push(w);
                let flow = s.extend(&mut visit);
                s.vertices.clear();
                if flow.is_break() {
                    return Ok(());
                }
            }
        }
        s.facets.pop();
        s.used[f] = false;
    }
    Ok(())
}

/// Every facet path of `c`, or every facet cycle up to rotation and
/// reflection when `want_cycle` is set. Paths are directed, so a path and
/// its reverse are both listed.
pub fn brute_force(c: &SimplicialComplex, want_cycle: bool, cap: usize) -> Result<Vec<FacetPath>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    search(c, want_cycle, cap, |p| {
        if want_cycle {
            let key = p.canonical();
            if seen.insert((key.facets.clone(), key.vertices.clone())) {
                out.push(key);
            }
        } else {
            out.push(p);
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Whether any facet path (or cycle) exists; stops at the first one found.
pub fn brute_force_exists(c: &SimplicialComplex, want_cycle: bool, cap: usize) -> Result<bool> {
    let mut found = false;
    search(c, want_cycle, cap, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::verify_path;
    use crate::shapes;

    #[test]
    fn single_triangle_has_six_paths() {
        let c = shapes::triangle();
        let paths = brute_force(&c, false, DEFAULT_CAP).unwrap();
        assert_eq!(paths.len(), 6);
        let ends: BTreeSet<(usize, usize)> = paths.iter().map(|p| (p.vertices[0], p.vertices[1])).collect();
        assert_eq!(ends.len(), 6);
        assert!(!brute_force_exists(&c, true, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn triforce_has_paths_but_no_cycle() {
        let c = shapes::triforce();
        assert!(brute_force(&c, true, DEFAULT_CAP).unwrap().is_empty());
        let paths = brute_force(&c, false, DEFAULT_CAP).unwrap();
        assert!(!paths.is_empty());
        for p in &paths {
            assert!(verify_path(&c, p).is_ok());
        }
    }

    #[test]
    fn two_triangles_have_one_cycle() {
        let c = shapes::strip(2);
        let cycles = brute_force(&c, true, DEFAULT_CAP).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].facets, vec![0, 1]);
        assert!(verify_path(&c, &cycles[0]).is_ok());
    }

    #[test]
    fn octahedron_cycles_are_valid() {
        let c = shapes::octahedron();
        let cycles = brute_force(&c, true, DEFAULT_CAP).unwrap();
        assert!(!cycles.is_empty());
        for p in &cycles {
            assert!(p.cyclic);
            assert_eq!(p, &p.canonical());
            assert!(verify_path(&c, p).is_ok());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let c = shapes::icosahedron();
        assert!(matches!(
            brute_force_exists(&c, true, DEFAULT_CAP),
            Err(Error::BruteForceCap { facets: 20, cap: 9 })
        ));
    }
}
