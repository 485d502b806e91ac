//! Random convex polyhedra: the convex hull of points drawn uniformly on the
//! unit sphere, built by incremental insertion.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Points that had to be nudged to get a hull in general position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HullReport {
    pub perturbed: Vec<usize>,
    /// Points that ended up strictly inside the hull and were dropped.
    pub dropped: Vec<usize>,
}

type P = [f64; 3];

fn sub(a: P, b: P) -> P {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: P, b: P) -> P {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: P, b: P) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Positive when `p` is on the outer side of the counterclockwise face.
fn side(pts: &[P], f: [usize; 3], p: P) -> f64 {
    let [a, b, c] = f.map(|i| pts[i]);
    dot(cross(sub(b, a), sub(c, a)), sub(p, a))
}

/// `n` points uniform on the unit sphere.
pub fn sphere_points(n: usize, seed: u64) -> Vec<P> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: P = [rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal)];
        let r = dot(v, v).sqrt();
        if r > 1e-9 {
            out.push(v.map(|x| x / r));
        }
    }
    out
}

const EPS: f64 = 1e-13;

struct Hull {
    pts: Vec<P>,
    faces: Vec<[usize; 3]>,
    alive: Vec<bool>,
    /// Directed edge `(a, b)` to the live face that contains it.
    edges: HashMap<(usize, usize), usize>,
}

impl Hull {
    fn add_face(&mut self, f: [usize; 3]) {
        let id = self.faces.len();
        self.faces.push(f);
        self.alive.push(true);
        for k in 0..3 {
            self.edges.insert((f[k], f[(k + 1) % 3]), id);
        }
    }

    fn visible(&self, p: P) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.alive[i] && side(&self.pts, self.faces[i], p) > EPS)
            .collect()
    }

    /// Inserts point `i`; false if no face sees it.
    fn insert(&mut self, i: usize) -> bool {
        let p = self.pts[i];
        let vis = self.visible(p);
        if vis.is_empty() {
            return false;
        }
        // every face that touches the point must be strictly visible,
        // otherwise new faces would be coplanar with old ones
        let mut seen = vec![false; self.faces.len()];
        for &f in &vis {
            seen[f] = true;
        }
        let mut horizon = Vec::new();
        for &f in &vis {
            let t = self.faces[f];
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                let twin = self.edges[&(b, a)];
                if !seen[twin] {
                    if side(&self.pts, self.faces[twin], p) >= -EPS {
                        return false;
                    }
                    horizon.push((a, b));
                }
            }
        }
        for &f in &vis {
            self.alive[f] = false;
            let t = self.faces[f];
            for k in 0..3 {
                self.edges.remove(&(t[k], t[(k + 1) % 3]));
            }
        }
        for (a, b) in horizon {
            self.add_face([a, b, i]);
        }
        true
    }
}

fn initial_simplex(pts: &[P]) -> Option<[usize; 4]> {
    let a = 0;
    let b = (1..pts.len()).find(|&i| dot(sub(pts[i], pts[a]), sub(pts[i], pts[a])) > 1e-12)?;
    let ab = sub(pts[b], pts[a]);
    let c = (1..pts.len()).find(|&i| {
        let n = cross(ab, sub(pts[i], pts[a]));
        dot(n, n) > 1e-12
    })?;
    let n = cross(ab, sub(pts[c], pts[a]));
    let d = (1..pts.len()).find(|&i| dot(n, sub(pts[i], pts[a])).abs() > 1e-9)?;
    Some([a, b, c, d])
}

/// Convex hull of `n` random unit-sphere points, with the perturbation
/// report. Vertices are numbered in point order, skipping dropped points.
pub fn gen_hull_with_report(n: usize, seed: u64) -> Result<(SimplicialComplex, HullReport)> {
    if n < 4 {
        return Err(Error::Precondition(format!("a hull needs at least 4 points, got {n}")));
    }
    let pts = sphere_points(n, seed);
    let [a, b, c, d] = initial_simplex(&pts)
        .ok_or_else(|| Error::Precondition("sampled points are coplanar".into()))?;
    let mut h = Hull {
        pts,
        faces: Vec::new(),
        alive: Vec::new(),
        edges: HashMap::new(),
    };
    let (b, c) = if side(&h.pts, [a, b, c], h.pts[d]) > 0.0 { (c, b) } else { (b, c) };
    for f in [[a, b, c], [a, d, b], [b, d, c], [c, d, a]] {
        h.add_face(f);
    }

    let mut report = HullReport::default();
    for i in 0..n {
        if [a, b, c, d].contains(&i) {
            continue;
        }
        let mut tries = 0;
        while !h.insert(i) {
            tries += 1;
            if tries > 60 {
                report.dropped.push(i);
                break;
            }
            // push the point outward until it sees the hull in general position
            let s = 1.0 + 1e-12 * 2f64.powi(tries);
            h.pts[i] = h.pts[i].map(|x| x * s);
            if tries == 1 {
                report.perturbed.push(i);
            }
        }
    }

    let mut index = vec![usize::MAX; n];
    let mut coords = Vec::new();
    let faces: Vec<[usize; 3]> = (0..h.faces.len()).filter(|&f| h.alive[f]).map(|f| h.faces[f]).collect();
    for f in &faces {
        for &v in f {
            index[v] = 0;
        }
    }
    for v in 0..n {
        if index[v] == 0 {
            index[v] = coords.len();
            coords.push(h.pts[v].to_vec());
        } else if !report.dropped.contains(&v) {
            report.dropped.push(v);
        }
    }
    report.dropped.sort_unstable();
    let facets = faces.iter().map(|f| f.iter().map(|&v| index[v]).collect()).collect();
    let complex = SimplicialComplex::new(2, coords.len(), facets)?.with_coords(coords)?;
    Ok((complex, report))
}

/// Convex hull of `n` random unit-sphere points; deterministic in `seed`.
pub fn gen_hull(n: usize, seed: u64) -> Result<SimplicialComplex> {
    Ok(gen_hull_with_report(n, seed)?.0)
}
