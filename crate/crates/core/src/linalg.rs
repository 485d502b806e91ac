//! Small dense helpers for per-simplex geometry. Systems here are at most
//! (d x d) for a single facet, so plain elimination is enough.

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Relative pivot threshold below which a Gram matrix counts as singular.
const PIVOT_EPS: f64 = 1e-12;

/// Solves `G x = rhs` for a symmetric positive definite Gram matrix by
/// Cholesky factorisation. Returns `None` when `G` is (numerically) singular.
pub(crate) fn solve_spd(gram: &[Vec<f64>], rhs: &[f64]) -> Option<Vec<f64>> {
    let n = rhs.len();
    let scale = (0..n).map(|i| gram[i][i]).fold(0.0_f64, f64::max);
    if !(scale > 0.0) {
        return None;
    }
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = gram[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s <= PIVOT_EPS * scale {
                    return None;
                }
                l[i][i] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = rhs[i];
        for k in 0..i {
            s -= l[i][k] * y[k];
        }
        y[i] = s / l[i][i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[k][i] * x[k];
        }
        x[i] = s / l[i][i];
    }
    Some(x)
}

pub(crate) fn gram(vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    vectors
        .iter()
        .map(|a| vectors.iter().map(|b| dot(a, b)).collect())
        .collect()
}

/// True when the points span an affine space of dimension `points.len() - 1`.
pub(crate) fn affinely_independent(points: &[&[f64]]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let edges: Vec<Vec<f64>> = points[1..].iter().map(|p| sub(p, points[0])).collect();
    let rhs = vec![0.0; edges.len()];
    solve_spd(&gram(&edges), &rhs).is_some()
}
