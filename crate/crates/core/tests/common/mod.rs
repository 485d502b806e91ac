//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vertex_unfold::complex::build_dual;
use vertex_unfold::hull::gen_hull;
use vertex_unfold::{shapes, FacetPath, SimplicialComplex};

pub type Named = (String, SimplicialComplex);

fn named(name: impl Into<String>, c: SimplicialComplex) -> Named {
    (name.into(), c)
}

pub fn platonic() -> Vec<Named> {
    vec![
        named("tetrahedron", shapes::tetrahedron()),
        named("cube", shapes::cube()),
        named("octahedron", shapes::octahedron()),
        named("icosahedron", shapes::icosahedron()),
        named("dodecahedron", shapes::dodecahedron()),
    ]
}

/// The mixed corpus used for the pipeline sweep.
pub fn corpus() -> Vec<Named> {
    let mut out = platonic();
    out.push(named("triforce", shapes::triforce()));
    for e in 1..=5 {
        out.push(named(format!("checkered polygon {e}"), shapes::checkered_polygon(e)));
    }
    for k in 1..=10 {
        out.push(named(format!("fan {k}"), shapes::fan(k)));
        out.push(named(format!("strip {k}"), shapes::strip(k)));
    }
    for n in 3..=6 {
        for (i, c) in shapes::convex_polygon_triangulations(n).into_iter().enumerate() {
            out.push(named(format!("polygon {n}#{i}"), c));
        }
    }
    for n in (4..=400).step_by(3) {
        out.push(named(format!("hull {n}"), gen_hull(n, n as u64).unwrap()));
    }
    for (m, n) in [(3, 3), (3, 4), (4, 5)] {
        out.push(named(format!("klein bottle {m}x{n}"), shapes::klein_bottle(m, n)));
        out.push(named(format!("torus {m}x{n}"), shapes::torus(m, n)));
    }
    for k in 1..=6 {
        out.push(named(format!("tetra path {k}"), shapes::tetra_path(k)));
    }
    for d in 3..=5 {
        out.push(named(format!("boundary of {}-simplex", d + 1), shapes::simplex_boundary(d)));
    }
    for d in 1..=4 {
        out.push(named(format!("single {d}-simplex"), shapes::single_simplex(d)));
    }
    let mut oct = shapes::octahedron();
    for f in 0..4 {
        oct = shapes::stellar_subdivide(&oct, f);
        out.push(named(format!("subdivided octahedron {f}"), oct.clone()));
    }
    out
}

/// Random tree on `n` nodes with maximum degree 3.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| adj[u].len() < 3).collect();
        let u = open[rng.random_range(0..open.len())];
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn random_polygon(facets: usize, rng: &mut impl Rng) -> SimplicialComplex {
    shapes::polygon_from_tree(&random_tree(facets, rng))
}

/// Random stacked ball: facets glued one at a time onto boundary ridges.
pub fn random_stacked(d: usize, facets: usize, rng: &mut impl Rng) -> SimplicialComplex {
    let mut c = shapes::single_simplex(d);
    while c.facet_count() < facets {
        let dual = build_dual(&c).unwrap();
        let b = &dual.boundary()[rng.random_range(0..dual.boundary().len())];
        let omit = c.facet(b.facet).iter().position(|v| !b.ridge.contains(v)).unwrap();
        c = shapes::stack_onto(&c, b.facet, omit);
    }
    c
}

/// Random closed surface or higher sphere with a few stellar subdivisions.
pub fn random_closed(rng: &mut impl Rng) -> SimplicialComplex {
    let mut c = match rng.random_range(0..4) {
        0 => shapes::simplex_boundary(rng.random_range(3..=4)),
        1 => shapes::torus(rng.random_range(3..=5), rng.random_range(3..=5)),
        2 => shapes::klein_bottle(rng.random_range(3..=5), rng.random_range(3..=5)),
        _ => gen_hull(rng.random_range(4..=40), rng.random()).unwrap(),
    };
    for _ in 0..rng.random_range(0..4) {
        let f = rng.random_range(0..c.facet_count());
        c = shapes::stellar_subdivide(&c, f);
    }
    c
}

/// A random complex of one of several families, seeded.
pub fn random_complex(seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match rng.random_range(0..5) {
        0 => {
            let n = rng.random_range(1..=30);
            random_polygon(n, &mut rng)
        }
        1 => {
            let d = rng.random_range(3..=5);
            let n = rng.random_range(1..=20);
            random_stacked(d, n, &mut rng)
        }
        2 => {
            let n = rng.random_range(1..=25);
            random_stacked(2, n, &mut rng)
        }
        _ => random_closed(&mut rng),
    }
}

/// Connected components of a scaffold by breadth-first search over the
/// bipartite graph of vertices and facets.
pub fn scaffold_components(vertex_count: usize, attachments: &[[usize; 2]]) -> usize {
    let n = vertex_count + attachments.len();
    let mut adj = vec![Vec::new(); n];
    for (f, &[a, b]) in attachments.iter().enumerate() {
        for v in [a, b] {
            adj[v].push(vertex_count + f);
            adj[vertex_count + f].push(v);
        }
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || adj[s].is_empty() {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    count
}

/// Facets around `v` in cyclic order, found by walking across shared
/// edges; `None` when the star is not a single fan.
pub fn fan_order(c: &SimplicialComplex, v: usize) -> Option<Vec<usize>> {
    let star: Vec<usize> = (0..c.facet_count()).filter(|&f| c.facet(f).contains(&v)).collect();
    let link = |f: usize| -> Vec<usize> { c.facet(f).iter().copied().filter(|&w| w != v).collect() };
    let mut by_neighbour: HashMap<usize, Vec<usize>> = HashMap::new();
    for &f in &star {
        for w in link(f) {
            by_neighbour.entry(w).or_default().push(f);
        }
    }
    if by_neighbour.values().any(|fs| fs.len() > 2) {
        return None;
    }
    let start = star
        .iter()
        .copied()
        .find(|&f| link(f).iter().any(|w| by_neighbour[w].len() == 1))
        .unwrap_or(star[0]);
    let mut order = vec![start];
    let mut came_over = link(start).into_iter().find(|w| by_neighbour[w].len() == 1);
    let mut cur = start;
    loop {
        let next_edge = link(cur).into_iter().find(|&w| Some(w) != came_over);
        let Some(w) = next_edge else { break };
        let Some(&next) = by_neighbour[&w].iter().find(|&&g| g != cur) else { break };
        if next == start {
            break;
        }
        order.push(next);
        came_over = Some(w);
        cur = next;
    }
    (order.len() == star.len()).then_some(order)
}

/// Crossing count of `p`, computed from scratch: at each vertex every pair
/// of visits is tested for interleaving in the fan order.
pub fn crossings_oracle(c: &SimplicialComplex, p: &FacetPath) -> Option<usize> {
    let k = p.facets.len();
    let mut visits: Vec<(usize, usize, usize)> =
        (1..k).map(|i| (p.vertices[i], p.facets[i - 1], p.facets[i])).collect();
    if p.cyclic && k > 1 {
        visits.push((p.vertices[0], p.facets[k - 1], p.facets[0]));
    }
    let mut total = 0;
    for v in 0..c.vertex_count() {
        let here: Vec<(usize, usize)> =
            visits.iter().filter(|x| x.0 == v).map(|x| (x.1, x.2)).collect();
        if here.len() < 2 {
            continue;
        }
        let order = fan_order(c, v)?;
        let pos = |f: usize| order.iter().position(|&g| g == f).unwrap();
        for i in 0..here.len() {
            for j in i + 1..here.len() {
                let (a, b) = (pos(here[i].0), pos(here[i].1));
                let (lo, hi) = (a.min(b), a.max(b));
                let inside = |x: usize| lo < x && x < hi;
                let (x, y) = (pos(here[j].0), pos(here[j].1));
                if inside(x) != inside(y) {
                    total += 1;
                }
            }
        }
    }
    Some(total)
}

/// True when every vertex star of a 2-complex is a single fan.
pub fn manifold_stars(c: &SimplicialComplex) -> bool {
    (0..c.vertex_count()).all(|v| fan_order(c, v).is_some())
}

/// Placement direction by an SVD pseudo-inverse: the minimum-norm `w` with
/// `<w, p_i - p_entry>` equal to 1 at the exit and 1/2 elsewhere.
pub fn direction_oracle(coords: &[Vec<f64>], entry: usize, exit: usize) -> (Vec<f64>, f64) {
    let m = coords[0].len();
    let others: Vec<usize> = (0..coords.len()).filter(|&i| i != entry).collect();
    let e = DMatrix::from_fn(others.len(), m, |r, k| coords[others[r]][k] - coords[entry][k]);
    let t = DVector::from_iterator(others.len(), others.iter().map(|&i| if i == exit { 1.0 } else { 0.5 }));
    let w = e.pseudo_inverse(1e-14).unwrap() * t;
    let n = w.norm();
    ((w / n).iter().copied().collect(), 1.0 / n)
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Unit-edge regular simplex, as used for complexes without coordinates.
pub fn source_shape(c: &SimplicialComplex, f: usize) -> Vec<Vec<f64>> {
    match c.coords() {
        Some(x) => c.facet(f).iter().map(|&v| x[v].clone()).collect(),
        None => {
            let d = c.dim();
            let s = std::f64::consts::FRAC_1_SQRT_2;
            (0..=d).map(|i| (0..=d).map(|j| if i == j { s } else { 0.0 }).collect()).collect()
        }
    }
}

/// Largest relative pairwise-distance error between two vertex lists.
pub fn congruence_error(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let want = distance(&a[i], &a[j]);
            worst = worst.max((distance(&b[i], &b[j]) - want).abs() / want);
        }
    }
    worst
}
