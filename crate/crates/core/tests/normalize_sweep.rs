//! Exhaustive and seeded sweeps over the normalization pipeline. Any use of
//! the fallback search counts as a failure here.

use latnorm::instances::random_unimodular_map;
use latnorm::*;

fn check(s: &DigitalSet, what: &dyn std::fmt::Debug) -> CaseLabel {
    let out = to_almost_4_connected(s).unwrap_or_else(|e| panic!("{what:?}: {e}"));
    assert!(!out.trace.fallback_used, "{what:?}: {:?}", out.trace.fallback_reason);
    assert!(out.class.is_almost_4());
    assert_eq!(out.map.apply_set(s).unwrap(), out.image);
    out.trace.case_label
}

#[test]
fn every_triangle_in_a_small_box() {
    let g = 7;
    let pts: Vec<LatticePoint> = (0..=g).flat_map(|x| (0..=g).map(move |y| LatticePoint::new(x, y))).collect();
    let mut labels = std::collections::HashSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let hull = convex_hull(&DigitalSet::new([pts[i], pts[j], pts[k]]).unwrap()).unwrap();
                let s = lattice_points_in_polygon(&hull);
                labels.insert(check(&s, &(pts[i], pts[j], pts[k])));
            }
        }
    }
    for label in [CaseLabel::Direct4, CaseLabel::TopCentered, CaseLabel::Pompom, CaseLabel::BottomRightShear] {
        assert!(labels.contains(&label), "{label} never reached");
    }
}

#[test]
fn scrambled_generator_families() {
    let mut rng = SplitMix64::new(20);
    for i in 0..4000u64 {
        let spec = match i % 4 {
            0 => GeneratorSpec::RandomHull {
                samples: rng.range_inclusive(3, 10) as u32,
                half_width: rng.range_inclusive(1, 14),
                seed: rng.next_u64(),
            },
            1 => GeneratorSpec::ThinSlab {
                length: rng.range_inclusive(2, 40),
                width: rng.range_inclusive(1, 3),
                max_slope: rng.range_inclusive(1, 6),
                seed: rng.next_u64(),
            },
            2 => GeneratorSpec::Disc { radius: rng.range_inclusive(0, 9) },
            _ => GeneratorSpec::Pompom { k: rng.range_inclusive(2, 12) },
        };
        let m = random_unimodular_map(&mut rng, 3, 3, 100).unwrap();
        let s = m.apply_set(&generate(&spec).unwrap()).unwrap();
        check(&s, &spec);
    }
}

#[test]
fn pompom_family() {
    let s = generate(&GeneratorSpec::Pompom { k: 2 }).unwrap();
    let out = to_almost_4_connected(&s).unwrap();
    assert_eq!(out.trace.case_label, CaseLabel::Pompom);
    assert!(matches!(out.class, ConnectivityClass::Almost4 { .. }));
    for k in 2..=12 {
        let s = generate(&GeneratorSpec::Pompom { k }).unwrap();
        let out = to_almost_4_connected(&s).unwrap();
        assert!(out.class.is_almost_4());
        assert_eq!(out.diameter.k, k as u64);
    }
}
