//! Strip layouts: each facet of a path is placed as a congruent copy in its
//! own slab `x_left <= x <= x_right`, with the path's entry vertex on the
//! left wall and its exit vertex on the right wall. Consecutive slabs are
//! separated by `gap`.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{distance, dot, gram, norm, solve_spd, sub};
use crate::path::{verify_path, FacetPath};
use crate::report::ValidationReport;

/// One facet of a layout. `coords[i]` is the placed position of
/// `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    pub facet: usize,
    pub vertices: Vec<usize>,
    pub coords: Vec<Vec<f64>>,
    pub entry: usize,
    pub exit: usize,
    pub strip: [f64; 2],
}

impl Placement {
    pub fn width(&self) -> f64 {
        self.strip[1] - self.strip[0]
    }

    pub fn position_of(&self, v: usize) -> Option<&[f64]> {
        self.vertices
            .iter()
            .position(|&w| w == v)
            .map(|i| self.coords[i].as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StripLayout {
    pub dim: usize,
    pub gap: f64,
    pub path: FacetPath,
    pub placements: Vec<Placement>,
}

impl StripLayout {
    pub fn total_width(&self) -> f64 {
        match (self.placements.first(), self.placements.last()) {
            (Some(a), Some(b)) => b.strip[1] - a.strip[0],
            _ => 0.0,
        }
    }
}

fn check_simplex(coords: &[Vec<f64>], entry: usize, exit: usize) -> Result<()> {
    let k = coords.len();
    if k < 2 || entry >= k || exit >= k || entry == exit {
        return Err(Error::Precondition(format!(
            "entry {entry} and exit {exit} must be distinct vertices of a {k}-vertex simplex"
        )));
    }
    let m = coords[0].len();
    if coords.iter().any(|p| p.len() != m) || m + 1 < k {
        return Err(Error::DegenerateSimplex);
    }
    Ok(())
}

/// Gradient, within the simplex's affine hull, of the affine functional
/// that is 0 at `entry`, 1 at `exit` and 1/2 at every other vertex.
fn functional_gradient(coords: &[Vec<f64>], entry: usize, exit: usize) -> Result<Vec<f64>> {
    check_simplex(coords, entry, exit)?;
    let others: Vec<usize> = (0..coords.len()).filter(|&i| i != entry).collect();
    let offsets: Vec<Vec<f64>> = others.iter().map(|&i| sub(&coords[i], &coords[entry])).collect();
    let target: Vec<f64> = others.iter().map(|&i| if i == exit { 1.0 } else { 0.5 }).collect();
    let alpha = solve_spd(&gram(&offsets), &target).ok_or(Error::DegenerateSimplex)?;
    let mut w = vec![0.0; coords[0].len()];
    for (a, e) in alpha.iter().zip(&offsets) {
        for (wi, ei) in w.iter_mut().zip(e) {
            *wi += a * ei;
        }
    }
    Ok(w)
}

/// Unit direction along which `entry` is the strict minimum and `exit` the
/// strict maximum of the simplex, with all other vertices halfway between.
pub fn placement_direction(coords: &[Vec<f64>], entry: usize, exit: usize) -> Result<Vec<f64>> {
    let w = functional_gradient(coords, entry, exit)?;
    let n = norm(&w);
    Ok(w.into_iter().map(|x| x / n).collect())
}

/// Removes from `v` its components along the orthonormal `basis`, twice
/// for numerical safety.
fn orthogonalize(mut v: Vec<f64>, basis: &[Vec<f64>]) -> Vec<f64> {
    for _ in 0..2 {
        for b in basis {
            let t = dot(&v, b);
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= t * bi;
            }
        }
    }
    v
}

/// Rigid copy of the simplex in `R^d` (d = vertex count - 1) with the
/// placement direction along +x and `entry` at `anchor`.
///
/// The rest of the frame comes from orthonormalizing the offsets of the
/// non-path vertices in index order, then the exit offset. For a triangle
/// this puts the third vertex above the entry vertex.
pub fn place_facet(
    coords: &[Vec<f64>],
    entry: usize,
    exit: usize,
    anchor: &[f64],
) -> Result<Vec<Vec<f64>>> {
    let u = placement_direction(coords, entry, exit)?;
    let d = coords.len() - 1;
    if anchor.len() != d {
        return Err(Error::Precondition(format!(
            "anchor has {} coordinates, expected {d}",
            anchor.len()
        )));
    }
    let offsets: Vec<Vec<f64>> = coords.iter().map(|p| sub(p, &coords[entry])).collect();
    let scale = offsets.iter().map(|e| norm(e)).fold(0.0_f64, f64::max);

    let mut frame = vec![u];
    let order = (0..coords.len())
        .filter(|&i| i != entry && i != exit)
        .chain(std::iter::once(exit));
    for i in order {
        if frame.len() == d {
            break;
        }
        let r = orthogonalize(offsets[i].clone(), &frame);
        let n = norm(&r);
        if n > 1e-12 * scale {
            frame.push(r.into_iter().map(|x| x / n).collect());
        }
    }
    if frame.len() != d {
        return Err(Error::DegenerateSimplex);
    }

    Ok(offsets
        .iter()
        .enumerate()
        .map(|(i, e)| {
            if i == entry {
                anchor.to_vec()
            } else {
                frame.iter().zip(anchor).map(|(b, a)| a + dot(e, b)).collect()
            }
        })
        .collect())
}

/// Unit-edge regular simplex used for complexes without coordinates.
fn regular_simplex(d: usize) -> Vec<Vec<f64>> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    (0..=d)
        .map(|i| (0..=d).map(|j| if i == j { s } else { 0.0 }).collect())
        .collect()
}

/// Source shape of facet `f`: its coordinates, or a unit regular simplex.
fn source_shape(c: &SimplicialComplex, f: usize) -> Vec<Vec<f64>> {
    match c.coords() {
        Some(xyz) => c.facet(f).iter().map(|&v| xyz[v].clone()).collect(),
        None => regular_simplex(c.dim()),
    }
}

/// Lays out the facets of `p` left to right. A cycle is laid out as the
/// open path obtained by dropping its closing connection.
pub fn layout(c: &SimplicialComplex, p: &FacetPath, gap: f64) -> Result<StripLayout> {
    if !(gap.is_finite() && gap >= 0.0) {
        return Err(Error::Precondition(format!("gap must be finite and non-negative, got {gap}")));
    }
    let report = verify_path(c, p);
    if !report.is_ok() {
        return Err(Error::Precondition(format!("path is not valid: {report}")));
    }
    let d = c.dim();
    let mut anchor = vec![0.0; d];
    let mut placements = Vec::with_capacity(p.len());
    for (entry, f, exit) in p.steps() {
        let vertices = c.facet(f).to_vec();
        let local = |v: usize| vertices.iter().position(|&w| w == v).expect("verified path");
        let (i, j) = (local(entry), local(exit));
        let coords = place_facet(&source_shape(c, f), i, j, &anchor)?;
        let strip = [anchor[0], coords[j][0]];
        anchor = coords[j].clone();
        anchor[0] += gap;
        placements.push(Placement {
            facet: f,
            vertices,
            coords,
            entry,
            exit,
            strip,
        });
    }
    Ok(StripLayout {
        dim: d,
        gap,
        path: p.clone(),
        placements,
    })
}

/// Certifies a layout against `c`: slab order and spacing, wall contact of
/// path vertices, congruence to the source facets at relative tolerance
/// `tol`, and shared points between consecutive facets when `gap` is 0.
pub fn verify_layout(l: &StripLayout, c: &SimplicialComplex, tol: f64) -> ValidationReport {
    let mut r = ValidationReport::new();
    if l.dim != c.dim() {
        r.push("dimension", format!("layout has dimension {}, complex {}", l.dim, c.dim()), vec![]);
        return r;
    }
    if l.placements.len() != l.path.len()
        || l.placements.iter().zip(&l.path.facets).any(|(pl, &f)| pl.facet != f)
    {
        r.push("path-mismatch", "placements do not follow the path's facets", vec![]);
        return r;
    }
    let scale = l
        .placements
        .iter()
        .flat_map(|pl| pl.coords.iter().flatten())
        .fold(1.0_f64, |m, x| m.max(x.abs()));

    for (k, pl) in l.placements.iter().enumerate() {
        let f = pl.facet;
        if f >= c.facet_count() || pl.vertices != c.facet(f) || pl.coords.len() != pl.vertices.len() {
            r.push("shape", format!("placement {k} does not match facet {f}"), vec![k]);
            continue;
        }
        if pl.coords.iter().any(|x| x.len() != l.dim || x.iter().any(|t| !t.is_finite())) {
            r.push("shape", format!("placement {k} has malformed coordinates"), vec![k]);
            continue;
        }
        let (entry, exit) = (l.path.vertices[k], l.path.vertices[k + 1]);
        if pl.entry != entry || pl.exit != exit {
            r.push("path-mismatch", format!("placement {k} has the wrong entry or exit"), vec![k]);
            continue;
        }
        let [left, right] = pl.strip;
        if !(left < right) {
            r.push("strip-empty", format!("strip {k} has no interior"), vec![k]);
        }
        if k > 0 {
            let prev = l.placements[k - 1].strip[1];
            if !(left >= prev) || (left - prev - l.gap).abs() > tol * scale {
                r.push(
                    "strip-spacing",
                    format!("strip {k} starts at {left}, previous ends at {prev}, gap {}", l.gap),
                    vec![k - 1, k],
                );
            }
        }
        for (x, &v) in pl.coords.iter().zip(&pl.vertices) {
            let ok = if v == entry {
                (x[0] - left).abs() <= tol * scale
            } else if v == exit {
                (x[0] - right).abs() <= tol * scale
            } else {
                left < x[0] && x[0] < right
            };
            if !ok {
                r.push(
                    "outside-strip",
                    format!("vertex {v} of facet {f} at x = {} in strip [{left}, {right}]", x[0]),
                    vec![k, v],
                );
            }
        }
        let src = source_shape(c, f);
        let n = src.len();
        for a in 0..n {
            for b in a + 1..n {
                let want = distance(&src[a], &src[b]);
                let got = distance(&pl.coords[a], &pl.coords[b]);
                if (got - want).abs() > tol * want {
                    r.push(
                        "congruence",
                        format!("facet {f}: edge {a}-{b} has length {got}, source {want}"),
                        vec![k, f],
                    );
                }
            }
        }
        if l.gap == 0.0 && k > 0 {
            let here = pl.position_of(entry);
            let there = l.placements[k - 1].position_of(entry);
            if let (Some(x), Some(y)) = (here, there) {
                if distance(x, y) > tol * scale {
                    r.push(
                        "shared-vertex",
                        format!("vertex {entry} is placed apart in placements {} and {k}", k - 1),
                        vec![k - 1, k],
                    );
                }
            }
        }
    }
    r
}
