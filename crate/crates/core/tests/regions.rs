mod common;

use common::*;
use crossring::drawing::fuzz_drawing;
use crossring::regions::Regions;
use crossring::robustness::{
    analyze, prop13_applies, prop13_diagnose, prop13_index_bounds, red_cycle_crossings, robust,
    Prop13Verdict, RedCrossings,
};
use crossring::{canonical, EdgeId, Error};
use proptest::prelude::*;

#[test]
fn canonical_complement_has_two_components() {
    for (m, n) in [(3, 7), (5, 8), (4, 4)] {
        let d = canonical(m, n).unwrap();
        let r = Regions::new(&d);
        for j in 0..n {
            assert_eq!(r.component_count(j), 2, "({m},{n}) j={j}");
        }
    }
}

#[test]
fn figure_eight_has_three_components() {
    let d = figure_eight(7);
    let r = Regions::new(&d);
    assert_eq!(r.component_count(0), 3);
    assert_eq!(curve_face_count(&d, 0), 3);
    for j in 1..7 {
        assert_eq!(r.component_count(j), 2);
    }
}

#[test]
fn canonical_omega_is_not_the_sliver() {
    let d = canonical(5, 8).unwrap();
    let r = Regions::new(&d);
    for j in 0..8 {
        let om = r.omega(j).unwrap();
        // Every other vertex lies in Ω_j.
        for k in (0..8).filter(|&k| k != j) {
            for i in 0..5 {
                assert_eq!(r.locate_vertex(v(i, k), j).unwrap(), om);
            }
        }
        assert_eq!(r.phi(j).unwrap().len(), 1);
    }
}

#[test]
fn canonical_germs() {
    let d = canonical(5, 8).unwrap();
    let r = Regions::new(&d);
    for j in 0..8 {
        let om = r.omega(j).unwrap();
        let j1 = (j + 1) % 8;
        assert_ne!(r.germ_component(v(2, j), EdgeId::blue(2, j1), j).unwrap(), om);
        assert_eq!(r.germ_component(v(0, j), EdgeId::blue(0, j1), j).unwrap(), om);
    }
}

#[test]
fn locate_and_germ_preconditions() {
    let d = canonical(3, 7).unwrap();
    let r = Regions::new(&d);
    assert!(matches!(r.locate_vertex(v(1, 2), 2), Err(Error::OnCurve(_))));
    assert!(matches!(
        r.germ_component(v(1, 2), EdgeId::red(1, 2), 2),
        Err(Error::OnCurve(_))
    ));
    assert!(matches!(
        r.germ_component(v(1, 2), EdgeId::blue(0, 2), 2),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn no_disjoint_partner() {
    let d = crosses_all(7);
    let r = Regions::new(&d);
    assert!(matches!(r.omega(0), Err(Error::NoDisjointPartner { j: 0 })));
}

#[test]
fn enclosing_loop_separates() {
    let d = enclosing_loop(3, 7);
    assert!(crossring::validate(&d).is_valid());
    let r = Regions::new(&d);
    assert!(r.separates(0, 1, 4));
    assert!(r.separates(0, 4, 1));
    assert!(!r.separates(0, 1, 2));
    assert!(!r.separates(0, 4, 5));
    assert!(matches!(r.omega(0), Err(Error::OuterRegionMissed { j: 0, .. })));
    let rep = analyze(&d, &r);
    assert!(!rep.red_nonseparating);
    assert!(!rep.robust);
}

#[test]
fn canonical_separates_nothing() {
    let d = canonical(4, 7).unwrap();
    let r = Regions::new(&d);
    for j in 0..7 {
        for k in 0..7 {
            for l in 0..7 {
                if j != k && j != l && k != l {
                    assert!(!r.separates(j, k, l));
                }
            }
        }
    }
}

#[test]
fn canonical_indices() {
    for (m, n) in [(3, 7), (4, 8), (5, 10), (6, 12)] {
        let d = canonical(m, n).unwrap();
        let rep = analyze(&d, &Regions::new(&d));
        assert!(rep.robust, "({m},{n})");
        assert!(rep.a.iter().all(|&a| a == Some(1)));
        assert!(rep.b.iter().all(|&b| b == Some(1)));
        assert_eq!(rep.big_b, Some(1));
        assert_eq!(rep.red_cycle_crossings, vec![m - 2; n]);
    }
}

#[test]
fn small_canonical_is_not_relaxed() {
    // a + b = 2 is not below n/2 = 2.
    let d = canonical(3, 4).unwrap();
    let rep = analyze(&d, &Regions::new(&d));
    assert!(!rep.relaxed);
    assert!(rep.red_nonseparating);
    assert!(!robust(&d));
    let d = canonical(3, 5).unwrap();
    assert!(robust(&d));
}

#[test]
fn double_crossing_indices() {
    let d = double_crossing(7, 3);
    let rep = analyze(&d, &Regions::new(&d));
    assert_eq!(rep.b[3], Some(2));
    assert_eq!(rep.a[3], Some(1));
    assert_eq!(rep.big_b, Some(2));
    assert!(rep.robust);
    let red = RedCrossings::from_drawing(&d);
    assert_eq!(red.count(2, 3), 2);
}

#[test]
fn prop13_threshold() {
    assert!(!prop13_applies(3, 18));
    assert!(prop13_applies(3, 19));
    assert!(prop13_applies(4, 26));
    assert!(!prop13_applies(4, 25));
}

#[test]
fn prop13_on_canonical_and_crossed() {
    let d = canonical(3, 19).unwrap();
    let rep = analyze(&d, &Regions::new(&d));
    assert_eq!(prop13_diagnose(&rep).unwrap(), Prop13Verdict::Robust);
    assert!(prop13_index_bounds(&rep).is_empty());

    let d = canonical(3, 18).unwrap();
    let rep = analyze(&d, &Regions::new(&d));
    assert!(matches!(prop13_diagnose(&rep), Err(Error::BelowThreshold { .. })));
}

#[test]
fn heavy_cycle_in_non_robust_drawing() {
    let d = crosses_all(27);
    let rep = analyze(&d, &Regions::new(&d));
    assert!(!rep.robust);
    match prop13_diagnose(&rep).unwrap() {
        Prop13Verdict::HeavyRedCycle { j, crossings } => {
            assert_eq!(j, 0);
            assert!(crossings >= 4);
            assert_eq!(crossings, red_cycle_crossings(&d, 0));
        }
        v => panic!("{v:?}"),
    }
}

#[test]
fn fixture_region_counts_match_curve_faces() {
    for d in [figure_eight(7), enclosing_loop(3, 7), crosses_all(7), double_crossing(7, 3)] {
        let r = Regions::new(&d);
        for j in 0..d.n() {
            assert_eq!(r.component_count(j), curve_face_count(&d, j), "j={j}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn region_count_oracle(seed in any::<u64>(), m in 3usize..6, n in 4usize..10, j in 0usize..10) {
        let d = fuzz_drawing(m, n, seed).unwrap();
        let j = j % n;
        let r = Regions::new(&d);
        prop_assert_eq!(r.component_count(j), curve_face_count(&d, j));
    }

    #[test]
    fn separates_is_symmetric(seed in any::<u64>()) {
        let d = fuzz_drawing(3, 7, seed).unwrap();
        let r = Regions::new(&d);
        for j in 0..7 {
            for k in 0..7 {
                for l in 0..7 {
                    if j != k && j != l && k != l {
                        prop_assert_eq!(r.separates(j, k, l), r.separates(j, l, k));
                    }
                }
            }
        }
    }

    #[test]
    fn omega_holds_disjoint_cycles(seed in any::<u64>()) {
        let d = fuzz_drawing(4, 9, seed).unwrap();
        let r = Regions::new(&d);
        let red = r.red_crossings();
        for j in 0..9 {
            if let Ok(om) = r.omega(j) {
                for k in (0..9).filter(|&k| k != j && !red.cross(j, k)) {
                    prop_assert!(r.partition(j).red_components(k).contains(&om));
                    prop_assert_eq!(r.partition(j).red_components(k).len(), 1);
                }
            }
        }
    }

    #[test]
    fn nonseparating_iff_no_triple(seed in any::<u64>()) {
        let d = fuzz_drawing(3, 6, seed).unwrap();
        let r = Regions::new(&d);
        let rep = analyze(&d, &r);
        let mut any = false;
        for j in 0..6 {
            for k in 0..6 {
                for l in 0..6 {
                    if j != k && j != l && k != l {
                        any |= r.separates(j, k, l);
                    }
                }
            }
        }
        prop_assert_eq!(rep.red_nonseparating, !any);
    }

    #[test]
    fn b_and_a_definitions(seed in any::<u64>()) {
        let d = fuzz_drawing(3, 8, seed).unwrap();
        let red = RedCrossings::from_drawing(&d);
        for j in 0..8 {
            if let Some(b) = red.b(j) {
                prop_assert!(!red.cross((j + 8 - b) % 8, j));
                for c in 1..b {
                    prop_assert!(red.cross((j + 8 - c) % 8, j));
                }
                if let Some(a) = red.a(j) {
                    prop_assert!(a + b < 8);
                    for c in 0..=b {
                        prop_assert!(!red.cross((j + 8 - c) % 8, (j + a) % 8));
                    }
                }
            }
        }
    }
}
