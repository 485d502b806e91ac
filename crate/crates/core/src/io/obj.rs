//! Wavefront OBJ, restricted to `v` and triangular `f` records. Texture and
//! normal references (`f 1/2/3 ...`) and negative indices are accepted;
//! other record types are ignored.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::{parse_number, tokens};

pub fn parse_obj(text: &str) -> Result<SimplicialComplex> {
    let mut coords: Vec<Vec<f64>> = Vec::new();
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = tokens(raw);
        let Some(&(_, kind)) = t.first() else { continue };
        match kind {
            "v" => {
                if t.len() < 4 {
                    return Err(Error::parse(line, t[0].0, "vertex needs three coordinates"));
                }
                let p = t[1..4]
                    .iter()
                    .map(|&tok| parse_number::<f64>(line, tok, "a coordinate"))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(k) = p.iter().position(|x| !x.is_finite()) {
                    return Err(Error::parse(line, t[k + 1].0, "coordinate is not finite"));
                }
                coords.push(p);
            }
            "f" => {
                if t.len() != 4 {
                    return Err(Error::NonTriangularFace { line, count: t.len() - 1 });
                }
                let mut f = Vec::with_capacity(3);
                for &(col, tok) in &t[1..] {
                    let head = tok.split('/').next().unwrap_or("");
                    let k: i64 = parse_number(line, (col, head), "a vertex index")?;
                    let n = coords.len() as i64;
                    let idx = if k > 0 { k - 1 } else { n + k };
                    if k == 0 || idx < 0 || idx >= n {
                        return Err(Error::parse(line, col, format!("vertex index {k} out of range")));
                    }
                    f.push(idx as usize);
                }
                facets.push(f);
            }
            _ => {}
        }
    }
    SimplicialComplex::new(2, coords.len(), facets)?.with_coords(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA: &str = "# tetrahedron
o tet
v 1 1 1
v 1 -1 -1
v -1 1 -1
v -1 -1 1
vn 0 0 1
f 1 2 3
f 1/1/1 3/2/1 4/3/1
f -4 -1 -3
f 2 4 3
";

    #[test]
    fn reads_tetrahedron() {
        let c = parse_obj(TETRA).unwrap();
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.facets(), &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]);
    }

    #[test]
    fn quad_is_rejected() {
        let e = parse_obj("v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n").unwrap_err();
        assert!(matches!(e, Error::NonTriangularFace { line: 5, count: 4 }));
        assert!(e.to_string().contains("non-triangular face"));
    }

    #[test]
    fn bad_index_is_positioned() {
        let e = parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2  9\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, column: 8, .. }), "{e}");
        let e = parse_obj("v 0 0 zero\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 7, .. }), "{e}");
    }
}
