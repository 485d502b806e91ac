mod common;

use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

use vertex_unfold::complex::build_dual;
use vertex_unfold::io::{parse_json, parse_layout_json, write_complex_json, write_layout_json, LayoutDocument, Provenance};
use vertex_unfold::layout::{layout, place_facet, verify_layout};
use vertex_unfold::path::{trace_cycle, trace_path, PipelineOptions, PipelineTrace};
use vertex_unfold::scaffold::Scaffold;
use vertex_unfold::{make_noncrossing, verify_path, Error, SimplicialComplex};

use common::*;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn check_scaffold_shape(c: &SimplicialComplex, s: &Scaffold) {
    assert_eq!(s.facet_count(), c.facet_count());
    for (f, &[a, b]) in s.attachments().iter().enumerate() {
        assert_ne!(a, b);
        assert!(c.facet(f).contains(&a) && c.facet(f).contains(&b));
    }
}

fn swap(pair: &mut [usize; 2], from: usize, to: usize) {
    let i = pair.iter().position(|&x| x == from).expect("flip removes an attached vertex");
    pair[i] = to;
}

/// Replays the flips on the raw scaffold, recounting components each time.
fn check_flips(t: &PipelineTrace) {
    let v = t.raw_scaffold.vertex_count();
    let mut att = t.raw_scaffold.attachments().to_vec();
    let mut count = scaffold_components(v, &att);
    for fl in &t.flips {
        swap(&mut att[fl.a], fl.q, fl.r);
        swap(&mut att[fl.b], fl.r, fl.q);
        let now = scaffold_components(v, &att);
        assert_eq!(now + 1, count, "flip {fl:?}");
        count = now;
    }
    assert_eq!(count, 1);
    let norm = |a: &[[usize; 2]]| a.iter().map(|&[x, y]| [x.min(y), x.max(y)]).collect::<Vec<_>>();
    assert_eq!(norm(&att), norm(t.scaffold.attachments()));
    assert_eq!(t.raw_scaffold.degrees(), t.scaffold.degrees());
}

/// The trail's (facet, endpoints) pairs are exactly the scaffold's arcs.
fn check_trail(t: &PipelineTrace) {
    let mut seen: Vec<[usize; 2]> = vec![[usize::MAX; 2]; t.scaffold.facet_count()];
    for (a, f, b) in t.path.steps() {
        seen[f] = [a.min(b), a.max(b)];
    }
    assert_eq!(seen, t.scaffold.attachments());
}

fn cycle_expected(c: &SimplicialComplex) -> Option<bool> {
    let dual = build_dual(c).unwrap();
    match c.dim() {
        2 if !dual.is_simple() => Some(false),
        2 if dual.is_tree() => None,
        2 => Some(true),
        _ => Some(c.facet_count() > 1),
    }
}

/// A random rotation of R^m from the QR factorization of a seeded matrix.
fn rotation(m: usize, seed: u64) -> DMatrix<f64> {
    let mut x = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
    let a = DMatrix::from_fn(m, m, |_, _| {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        (x >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    });
    let q = a.qr().q();
    if q.determinant() < 0.0 {
        let mut q = q;
        q.column_mut(0).neg_mut();
        q
    } else {
        q
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn path_pipeline_invariants(seed in any::<u64>(), root in 0usize..64) {
        let c = random_complex(seed);
        let opts = PipelineOptions { seed_facet: root % c.facet_count() };
        let t = trace_path(&c, &opts).unwrap();
        check_scaffold_shape(&c, &t.raw_scaffold);
        prop_assert!(t.raw_scaffold.odd_vertices().len() <= 2);
        check_flips(&t);
        check_trail(&t);
        prop_assert!(verify_path(&c, &t.path).is_ok());
    }

    #[test]
    fn cycle_pipeline_invariants(seed in any::<u64>()) {
        let c = random_complex(seed);
        let expected = cycle_expected(&c);
        match trace_cycle(&c, &PipelineOptions::default()) {
            Ok(t) => {
                prop_assert_ne!(expected, Some(false));
                check_scaffold_shape(&c, &t.raw_scaffold);
                prop_assert!(t.raw_scaffold.is_even());
                check_flips(&t);
                check_trail(&t);
                prop_assert!(t.path.cyclic);
                prop_assert!(verify_path(&c, &t.path).is_ok());
            }
            Err(Error::NoCycle(_)) => prop_assert_ne!(expected, Some(true)),
            Err(e) => panic!("unexpected error: {e}"),
        }
    }

    #[test]
    fn noncrossing_preserves_paths(seed in any::<u64>(), facets in 1usize..40, cyc in any::<bool>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let c = if facets % 2 == 0 {
            random_polygon(facets, &mut rng)
        } else {
            vertex_unfold::hull::gen_hull(facets / 2 + 4, seed).unwrap()
        };
        let p = if cyc {
            match vertex_unfold::facet_cycle(&c, None) {
                Ok(p) => p,
                Err(_) => vertex_unfold::facet_path(&c).unwrap(),
            }
        } else {
            vertex_unfold::facet_path(&c).unwrap()
        };
        let q = make_noncrossing(&c, &p).unwrap();
        prop_assert!(verify_path(&c, &q).is_ok());
        prop_assert_eq!(crossings_oracle(&c, &q), Some(0));
        prop_assert_eq!(sorted(q.facets.clone()), sorted(p.facets.clone()));
        prop_assert_eq!(q.cyclic, p.cyclic);
        if p.cyclic {
            prop_assert_eq!(q.facets[0], p.facets[0]);
        } else {
            prop_assert_eq!(q.vertices.first(), p.vertices.first());
            prop_assert_eq!(q.vertices.last(), p.vertices.last());
        }
    }

    #[test]
    fn layouts_certify(seed in any::<u64>(), gap in prop_oneof![Just(0.0), 0.0f64..2.0]) {
        let c = random_complex(seed);
        let p = vertex_unfold::facet_path(&c).unwrap();
        let l = layout(&c, &p, gap).unwrap();
        prop_assert!(verify_layout(&l, &c, 1e-9).is_ok());
        let mut sum = 0.0;
        for pl in &l.placements {
            prop_assert!(congruence_error(&source_shape(&c, pl.facet), &pl.coords) <= 1e-9);
            sum += pl.width();
        }
        let k = l.placements.len() as f64;
        let want = sum + (k - 1.0) * gap;
        prop_assert!((l.total_width() - want).abs() <= 1e-9 * want);
    }

    #[test]
    fn placement_ignores_rigid_motions(
        seed in any::<u64>(),
        d in 2usize..6,
        shift in prop::collection::vec(-100.0f64..100.0, 6),
        pts in prop::collection::vec(-10.0f64..10.0, 36),
    ) {
        let coords: Vec<Vec<f64>> = (0..=d).map(|i| pts[i * d..(i + 1) * d].to_vec()).collect();
        let entry = (seed % (d as u64 + 1)) as usize;
        let exit = (entry + 1 + (seed / 7 % d as u64) as usize) % (d + 1);
        let offsets = DMatrix::from_fn(d, d, |i, k| coords[(entry + 1 + i) % (d + 1)][k] - coords[entry][k]);
        let sv = offsets.singular_values();
        prop_assume!(sv.min() > 1e-3 * sv.max());
        let a = place_facet(&coords, entry, exit, &vec![0.0; d]).unwrap();
        let r = rotation(d, seed);
        let moved: Vec<Vec<f64>> = coords
            .iter()
            .map(|p| {
                let y = &r * DVector::from_column_slice(p);
                y.iter().zip(&shift).map(|(a, b)| a + b).collect()
            })
            .collect();
        let b = place_facet(&moved, entry, exit, &vec![0.0; d]).unwrap();
        let scale = coords.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(distance(x, y) <= 1e-8 * scale, "{x:?} vs {y:?}");
        }
        prop_assert!(congruence_error(&coords, &a) <= 1e-9);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), gap in 0.0f64..1.0) {
        let c = random_complex(seed);
        prop_assert_eq!(&parse_json(&write_complex_json(&c)).unwrap(), &c);
        let p = vertex_unfold::facet_path(&c).unwrap();
        let doc = LayoutDocument {
            provenance: Provenance::new(vertex_unfold::io::input_hash(&seed.to_le_bytes()), Some(seed)),
            layout: layout(&c, &p, gap).unwrap(),
        };
        prop_assert_eq!(parse_layout_json(&write_layout_json(&doc)).unwrap(), doc);
    }
}
