//! Object File Format: `OFF`, then `nv nf ne`, then one vertex per line and
//! one face per line (`n i j k ...`). Only triangles are accepted.

use std::fmt::Write;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::{parse_number, tokens};

pub fn parse_off(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());

    let (line, mut head) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty file"))?;
    if head[0].1 != "OFF" {
        return Err(Error::parse(line, head[0].0, format!("expected `OFF`, found `{}`", head[0].1)));
    }
    head.remove(0);
    let (line, counts) = if head.is_empty() {
        lines
            .next()
            .ok_or_else(|| Error::parse(line + 1, 1, "missing vertex and face counts"))?
    } else {
        (line, head)
    };
    if counts.len() < 2 {
        return Err(Error::parse(line, counts[0].0, "expected vertex and face counts"));
    }
    let nv: usize = parse_number(line, counts[0], "a vertex count")?;
    let nf: usize = parse_number(line, counts[1], "a face count")?;

    let mut coords = Vec::with_capacity(nv);
    for k in 0..nv {
        let (line, t) = lines
            .next()
            .ok_or_else(|| Error::parse(text.lines().count() + 1, 1, format!("missing vertex {k}")))?;
        if t.len() < 3 {
            return Err(Error::parse(line, t[0].0, "expected three coordinates"));
        }
        let p = t[..3]
            .iter()
            .map(|&tok| parse_number::<f64>(line, tok, "a coordinate"))
            .collect::<Result<Vec<_>>>()?;
        if let Some(i) = p.iter().position(|x| !x.is_finite()) {
            return Err(Error::parse(line, t[i].0, "coordinate is not finite"));
        }
        coords.push(p);
    }

    let mut facets = Vec::with_capacity(nf);
    for k in 0..nf {
        let (line, t) = lines
            .next()
            .ok_or_else(|| Error::parse(text.lines().count() + 1, 1, format!("missing face {k}")))?;
        let n: usize = parse_number(line, t[0], "a face size")?;
        if n != 3 {
            return Err(Error::NonTriangularFace { line, count: n });
        }
        if t.len() < 4 {
            return Err(Error::parse(line, t[t.len() - 1].0, "face has fewer indices than declared"));
        }
        let mut f = Vec::with_capacity(3);
        for &tok in &t[1..4] {
            let v: usize = parse_number(line, tok, "a vertex index")?;
            if v >= nv {
                return Err(Error::parse(line, tok.0, format!("vertex index {v} out of range (0..{nv})")));
            }
            f.push(v);
        }
        facets.push(f);
    }
    if let Some((line, t)) = lines.next() {
        return Err(Error::parse(line, t[0].0, "unexpected data after the last face"));
    }
    SimplicialComplex::new(2, nv, facets)?.with_coords(coords)
}

/// Writes a 2-complex with 3D coordinates as OFF.
pub fn write_off(c: &SimplicialComplex) -> Result<String> {
    if c.dim() != 2 {
        return Err(Error::Dimension { op: "write_off", dim: c.dim() });
    }
    let coords = match c.coords() {
        Some(x) if x.iter().all(|p| p.len() == 3) => x,
        _ => return Err(Error::Precondition("OFF output needs 3D coordinates".into())),
    };
    let mut s = String::new();
    writeln!(s, "OFF").unwrap();
    writeln!(s, "{} {} 0", c.vertex_count(), c.facet_count()).unwrap();
    for p in coords {
        writeln!(s, "{} {} {}", p[0], p[1], p[2]).unwrap();
    }
    for f in c.facets() {
        writeln!(s, "3 {} {} {}", f[0], f[1], f[2]).unwrap();
    }
    Ok(s)
}
