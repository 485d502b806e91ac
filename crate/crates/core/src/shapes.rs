//! Fixture complexes: platonic surfaces, fans, strips, polygon
//! triangulations, abstract surfaces, and higher-dimensional examples.

use std::collections::HashMap;
use std::f64::consts::PI;

use crate::complex::{vertex_rotation, SimplicialComplex};

fn geometric(dim: usize, facets: Vec<Vec<usize>>, coords: Vec<Vec<f64>>) -> SimplicialComplex {
    SimplicialComplex::new(dim, coords.len(), facets)
        .and_then(|c| c.with_coords(coords))
        .expect("fixture geometry is valid")
}

fn abstract_complex(dim: usize, vertex_count: usize, facets: Vec<Vec<usize>>) -> SimplicialComplex {
    SimplicialComplex::new(dim, vertex_count, facets).expect("fixture is valid")
}

/// One d-simplex at the origin and the unit basis vectors.
pub fn single_simplex(d: usize) -> SimplicialComplex {
    let mut coords = vec![vec![0.0; d]];
    for i in 0..d {
        let mut p = vec![0.0; d];
        p[i] = 1.0;
        coords.push(p);
    }
    geometric(d, vec![(0..=d).collect()], coords)
}

pub fn triangle() -> SimplicialComplex {
    single_simplex(2)
}

pub fn tetrahedron() -> SimplicialComplex {
    let coords = vec![
        vec![1.0, 1.0, 1.0],
        vec![1.0, -1.0, -1.0],
        vec![-1.0, 1.0, -1.0],
        vec![-1.0, -1.0, 1.0],
    ];
    let facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    geometric(2, facets, coords)
}

/// The cube surface with each square split along a diagonal (12 triangles).
pub fn cube() -> SimplicialComplex {
    let mut coords = Vec::new();
    for i in 0..8 {
        let bit = |b: usize| if i >> b & 1 == 1 { 1.0 } else { -1.0 };
        coords.push(vec![bit(0), bit(1), bit(2)]);
    }
    let squares = [
        [0, 1, 3, 2],
        [4, 6, 7, 5],
        [0, 4, 5, 1],
        [2, 3, 7, 6],
        [0, 2, 6, 4],
        [1, 5, 7, 3],
    ];
    let facets = squares
        .iter()
        .flat_map(|&[a, b, c, d]| [vec![a, b, c], vec![a, c, d]])
        .collect();
    geometric(2, facets, coords)
}

/// Octahedron with vertices +x, -x, +y, -y, +z, -z (indices 0..6).
pub fn octahedron() -> SimplicialComplex {
    let coords = vec![
        vec![1.0, 0.0, 0.0],
        vec![-1.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0],
        vec![0.0, -1.0, 0.0],
        vec![0.0, 0.0, 1.0],
        vec![0.0, 0.0, -1.0],
    ];
    let mut facets = Vec::new();
    for z in [4, 5] {
        for (x, y) in [(0, 2), (2, 1), (1, 3), (3, 0)] {
            facets.push(vec![z, x, y]);
        }
    }
    geometric(2, facets, coords)
}

pub fn icosahedron() -> SimplicialComplex {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut coords = Vec::new();
    for a in [-1.0, 1.0] {
        for b in [-phi, phi] {
            coords.push(vec![0.0, a, b]);
            coords.push(vec![a, b, 0.0]);
            coords.push(vec![b, 0.0, a]);
        }
    }
    let close = |i: usize, j: usize| {
        let d2: f64 = coords[i]
            .iter()
            .zip(&coords[j])
            .map(|(x, y)| (x - y) * (x - y))
            .sum();
        (d2 - 4.0).abs() < 1e-9
    };
    let mut facets = Vec::new();
    for i in 0..12 {
        for j in i + 1..12 {
            for k in j + 1..12 {
                if close(i, j) && close(j, k) && close(i, k) {
                    facets.push(vec![i, j, k]);
                }
            }
        }
    }
    geometric(2, facets, coords)
}

/// Dodecahedron surface with each pentagon fanned into three triangles
/// (20 vertices, 36 triangles). Built as the polar dual of the icosahedron.
pub fn dodecahedron() -> SimplicialComplex {
    let ico = icosahedron();
    let ico_coords = ico.coords().unwrap();
    let coords: Vec<Vec<f64>> = ico
        .facets()
        .iter()
        .map(|f| {
            let mut c = vec![0.0; 3];
            for &v in f {
                for k in 0..3 {
                    c[k] += ico_coords[v][k] / 3.0;
                }
            }
            c
        })
        .collect();
    let mut facets = Vec::new();
    for v in 0..12 {
        let pentagon = vertex_rotation(&ico, v).expect("icosahedron is a manifold").facets;
        for i in 1..4 {
            facets.push(vec![pentagon[0], pentagon[i], pentagon[i + 1]]);
        }
    }
    geometric(2, facets, coords)
}

/// `k` triangles around apex 0, rim vertices 1..=k+1 (open fan).
pub fn fan(k: usize) -> SimplicialComplex {
    let mut coords = vec![vec![0.0, 0.0]];
    for i in 0..=k {
        let t = PI * (i as f64 + 0.5) / (k as f64 + 1.0);
        coords.push(vec![t.cos(), t.sin()]);
    }
    let facets = (1..=k).map(|i| vec![0, i, i + 1]).collect();
    geometric(2, facets, coords)
}

/// A zig-zag strip of `k` triangles.
pub fn strip(k: usize) -> SimplicialComplex {
    let coords = (0..k + 2)
        .map(|i| vec![(i / 2) as f64 + if i % 2 == 1 { 0.5 } else { 0.0 }, (i % 2) as f64])
        .collect();
    let facets = (0..k).map(|i| vec![i, i + 1, i + 2]).collect();
    geometric(2, facets, coords)
}

/// Central triangle with one ear on each side. Facet 0 is the centre.
pub fn triforce() -> SimplicialComplex {
    let a = [0.0, 0.0];
    let b = [2.0, 0.0];
    let c = [1.0, 3f64.sqrt()];
    let mid = |p: [f64; 2], q: [f64; 2]| vec![(p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0];
    let coords = vec![
        mid(a, b),
        mid(b, c),
        mid(c, a),
        a.to_vec(),
        b.to_vec(),
        c.to_vec(),
    ];
    let facets = vec![vec![0, 1, 2], vec![3, 0, 2], vec![4, 1, 0], vec![5, 2, 1]];
    geometric(2, facets, coords)
}

/// Realises a tree of maximum degree 3 as a triangulation of a convex
/// polygon whose dual tree is exactly `adjacency` (facet i is node i).
pub fn polygon_from_tree(adjacency: &[Vec<usize>]) -> SimplicialComplex {
    assert!(!adjacency.is_empty(), "tree must be non-empty");
    let n = adjacency.len();
    let mut facets = vec![Vec::new(); n];
    let mut next_vertex = 3;
    // (node, parent, left vertex, right vertex)
    fn fill(
        adjacency: &[Vec<usize>],
        facets: &mut [Vec<usize>],
        next_vertex: &mut usize,
        node: usize,
        parent: usize,
        a: usize,
        b: usize,
    ) -> Vec<usize> {
        let apex = *next_vertex;
        *next_vertex += 1;
        facets[node] = vec![a, apex, b];
        let children: Vec<usize> = adjacency[node].iter().copied().filter(|&c| c != parent).collect();
        assert!(children.len() <= 2, "node {node} has degree > 3");
        let mut seq = Vec::new();
        if let Some(&c) = children.first() {
            seq.extend(fill(adjacency, facets, next_vertex, c, node, a, apex));
        }
        seq.push(apex);
        if let Some(&c) = children.get(1) {
            seq.extend(fill(adjacency, facets, next_vertex, c, node, apex, b));
        }
        seq
    }
    facets[0] = vec![0, 1, 2];
    let root_children = &adjacency[0];
    assert!(root_children.len() <= 3, "root has degree > 3");
    let corners = [(0, 1), (1, 2), (2, 0)];
    let mut boundary = Vec::new();
    for (i, &(a, b)) in corners.iter().enumerate() {
        boundary.push(a);
        if let Some(&c) = root_children.get(i) {
            boundary.extend(fill(adjacency, &mut facets, &mut next_vertex, c, 0, a, b));
        }
    }
    let count = boundary.len();
    let mut coords = vec![Vec::new(); count];
    for (i, &v) in boundary.iter().enumerate() {
        let t = 2.0 * PI * i as f64 / count as f64;
        coords[v] = vec![t.cos(), t.sin()];
    }
    geometric(2, facets, coords)
}

/// All triangulations of a convex polygon with `n >= 3` vertices.
pub fn convex_polygon_triangulations(n: usize) -> Vec<SimplicialComplex> {
    fn rec(i: usize, j: usize, memo: &mut HashMap<(usize, usize), Vec<Vec<[usize; 3]>>>) -> Vec<Vec<[usize; 3]>> {
        if j < i + 2 {
            return vec![Vec::new()];
        }
        if let Some(r) = memo.get(&(i, j)) {
            return r.clone();
        }
        let mut out = Vec::new();
        for k in i + 1..j {
            let left = rec(i, k, memo);
            let right = rec(k, j, memo);
            for l in &left {
                for r in &right {
                    let mut t = vec![[i, k, j]];
                    t.extend_from_slice(l);
                    t.extend_from_slice(r);
                    out.push(t);
                }
            }
        }
        memo.insert((i, j), out.clone());
        out
    }
    let coords: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            vec![t.cos(), t.sin()]
        })
        .collect();
    rec(0, n - 1, &mut HashMap::new())
        .into_iter()
        .map(|tris| {
            let facets = tris.into_iter().map(|t| t.to_vec()).collect();
            geometric(2, facets, coords.clone())
        })
        .collect()
}

/// Checkered tree: the triforce grown `expansions` times by hanging a white
/// triangle with two black ears off the lowest-index black leaf.
pub fn checkered_tree(expansions: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
    let mut black = vec![false, true, true, true];
    for _ in 0..expansions {
        let leaf = (0..adj.len())
            .find(|&f| black[f] && adj[f].len() == 1)
            .expect("checkered trees always have black leaves");
        let w = adj.len();
        adj.push(vec![leaf, w + 1, w + 2]);
        adj.push(vec![w]);
        adj.push(vec![w]);
        adj[leaf].push(w);
        black.extend([false, true, true]);
    }
    adj
}

pub fn checkered_polygon(expansions: usize) -> SimplicialComplex {
    polygon_from_tree(&checkered_tree(expansions))
}

fn grid_surface(m: usize, n: usize, twist: bool) -> SimplicialComplex {
    assert!(m >= 3 && n >= 3, "grid must be at least 3x3 to be simplicial");
    let id = |i: usize, j: usize| -> usize {
        let (mut i, mut j) = (i, j % n);
        if i >= m {
            i -= m;
            if twist {
                j = (n - j) % n;
            }
        }
        i * n + j
    };
    let mut facets = Vec::new();
    for i in 0..m {
        for j in 0..n {
            let a = id(i, j);
            let b = id(i + 1, j);
            let c = id(i + 1, j + 1);
            let d = id(i, j + 1);
            facets.push(vec![a, b, c]);
            facets.push(vec![a, c, d]);
        }
    }
    abstract_complex(2, m * n, facets)
}

/// Abstract torus from an `m x n` grid of split squares.
pub fn torus(m: usize, n: usize) -> SimplicialComplex {
    grid_surface(m, n, false)
}

/// Abstract Klein bottle: the torus grid with a reflection in the gluing of
/// one pair of opposite sides.
pub fn klein_bottle(m: usize, n: usize) -> SimplicialComplex {
    grid_surface(m, n, true)
}

/// `k` tetrahedra glued face to face in a chain, vertices on the moment
/// curve so every facet is non-degenerate.
pub fn tetra_path(k: usize) -> SimplicialComplex {
    let coords = (0..k + 3)
        .map(|i| {
            let t = i as f64;
            vec![t, t * t, t * t * t]
        })
        .collect();
    let facets = (0..k).map(|i| vec![i, i + 1, i + 2, i + 3]).collect();
    geometric(3, facets, coords)
}

/// Boundary of the (d+1)-simplex: a d-sphere with d + 2 facets.
pub fn simplex_boundary(d: usize) -> SimplicialComplex {
    let coords = (0..d + 2)
        .map(|i| {
            let mut p = vec![0.0; d + 2];
            p[i] = 1.0;
            p
        })
        .collect();
    let facets = (0..d + 2)
        .map(|omit| (0..d + 2).filter(|&v| v != omit).collect())
        .collect();
    geometric(d, facets, coords)
}

/// Replaces facet `f` by the cone from a new vertex over its boundary.
/// The new vertex sits at the facet centroid when coordinates are present.
pub fn stellar_subdivide(c: &SimplicialComplex, f: usize) -> SimplicialComplex {
    let apex = c.vertex_count();
    let facet = c.facet(f).to_vec();
    let mut facets: Vec<Vec<usize>> = c.facets().to_vec();
    let replacement: Vec<Vec<usize>> = (0..facet.len())
        .map(|omit| {
            let mut g = facet.clone();
            g[omit] = apex;
            g
        })
        .collect();
    facets[f] = replacement[0].clone();
    facets.extend(replacement.into_iter().skip(1));
    let out = SimplicialComplex::new(c.dim(), apex + 1, facets).expect("subdivision is valid");
    match c.coords() {
        Some(coords) => {
            let mut coords = coords.to_vec();
            let m = coords[0].len();
            let mut centroid = vec![0.0; m];
            for &v in &facet {
                for k in 0..m {
                    centroid[k] += coords[v][k] / facet.len() as f64;
                }
            }
            coords.push(centroid);
            out.with_coords(coords).expect("centroid cone is non-degenerate")
        }
        None => out,
    }
}

/// Glues a new facet (with a fresh vertex) onto ridge `ridge_of_facet`
/// of facet `f`: the ridge omitting local vertex `omit`. Abstract only.
pub fn stack_onto(c: &SimplicialComplex, f: usize, omit: usize) -> SimplicialComplex {
    let apex = c.vertex_count();
    let mut g = c.facet(f).to_vec();
    g[omit] = apex;
    let mut facets = c.facets().to_vec();
    facets.push(g);
    SimplicialComplex::new(c.dim(), apex + 1, facets).expect("stacking is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_dual, validate_pseudomanifold};

    fn euler_characteristic(c: &SimplicialComplex) -> i64 {
        let mut edges = std::collections::HashSet::new();
        for f in c.facets() {
            for i in 0..3 {
                for j in i + 1..3 {
                    edges.insert((f[i].min(f[j]), f[i].max(f[j])));
                }
            }
        }
        c.vertex_count() as i64 - edges.len() as i64 + c.facet_count() as i64
    }

    #[test]
    fn platonic_counts() {
        for (c, v, f) in [
            (tetrahedron(), 4, 4),
            (cube(), 8, 12),
            (octahedron(), 6, 8),
            (icosahedron(), 12, 20),
            (dodecahedron(), 20, 36),
        ] {
            assert_eq!(c.vertex_count(), v);
            assert_eq!(c.facet_count(), f);
            assert!(validate_pseudomanifold(&c).is_ok());
            let dual = build_dual(&c).unwrap();
            assert!(dual.boundary().is_empty());
            assert!(dual.is_simple());
            assert_eq!(euler_characteristic(&c), 2);
        }
    }

    #[test]
    fn closed_abstract_surfaces() {
        for (c, chi) in [(torus(3, 3), 0), (klein_bottle(4, 4), 0), (klein_bottle(3, 5), 0)] {
            assert!(validate_pseudomanifold(&c).is_ok());
            let dual = build_dual(&c).unwrap();
            assert!(dual.boundary().is_empty());
            assert!(dual.is_simple());
            assert_eq!(euler_characteristic(&c), chi);
            for v in 0..c.vertex_count() {
                assert!(vertex_rotation(&c, v).unwrap().cyclic);
            }
        }
    }

    #[test]
    fn polygon_from_tree_matches_tree() {
        let adj = checkered_tree(2);
        let c = polygon_from_tree(&adj);
        let dual = build_dual(&c).unwrap();
        assert!(dual.is_tree());
        for (f, nbrs) in adj.iter().enumerate() {
            let mut got: Vec<usize> = dual.arcs_at(f).iter().map(|&i| dual.arc(i).other(f)).collect();
            let mut want = nbrs.clone();
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (3..=9).map(|n| convex_polygon_triangulations(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn subdivision_and_stacking() {
        let c = stellar_subdivide(&octahedron(), 3);
        assert_eq!(c.facet_count(), 10);
        assert!(build_dual(&c).unwrap().is_simple());
        let s = stack_onto(&single_simplex(3), 0, 0);
        assert!(build_dual(&s).unwrap().is_tree());
        let b = stellar_subdivide(&simplex_boundary(3), 0);
        assert_eq!(b.facet_count(), 8);
        assert!(validate_pseudomanifold(&b).is_ok());
    }
}
