mod common;

use crossring::drawing::{perturb, Violation};
use crossring::{canonical, validate, CrossingId, Drawing, EdgeId};
use proptest::prelude::*;
use serde_json::{json, Value};

#[test]
fn canonical_matches_coordinate_construction() {
    for (m, n) in [(3, 3), (3, 7), (4, 5), (4, 8), (5, 8), (6, 12), (7, 4)] {
        let d = canonical(m, n).unwrap();
        let geo = common::canonical_geo(m, n);
        assert_eq!(d, geo, "C{m} x C{n}");
    }
}

#[test]
fn canonical_planarization_counts() {
    let d = canonical(3, 7).unwrap();
    assert_eq!(d.crossing_count(), 7);
    let map = d.planarize();
    assert_eq!((map.node_count(), map.segment_count(), map.face_count()), (28, 56, 30));
    assert_eq!(canonical(4, 8).unwrap().crossing_count(), 16);
}

#[test]
fn fixtures_are_valid_drawings() {
    let fixtures = [
        common::figure_eight(6),
        common::enclosing_loop(3, 6),
        common::crosses_all(6),
        common::double_crossing(8, 2),
    ];
    for d in &fixtures {
        let r = validate(d);
        assert!(r.is_valid(), "{:?}", r.violations);
    }
}

#[test]
fn flipped_chirality_breaks_genus() {
    let d = canonical(3, 7).unwrap();
    let id = d.crossing_ids()[0];
    let bad = d.with_flipped_chirality(id).unwrap();
    let r = validate(&bad);
    assert!(r.has_genus_violation(), "{:?}", r.violations);
}

fn edit(d: &Drawing, f: impl FnOnce(&mut Value)) -> String {
    let mut v: Value = serde_json::from_str(&d.to_json()).unwrap();
    f(&mut v);
    v.to_string()
}

#[test]
fn repeated_pair_is_reported() {
    let d = canonical(3, 7).unwrap();
    let text = edit(&d, |v| {
        let c = json!({"other": "R:1:0", "chirality": "+"});
        let b = v["edges"]["B:0:1"]["crossings"].as_array_mut().unwrap();
        b.push(c.clone());
        b.push(c);
        let c = json!({"other": "B:0:1", "chirality": "+"});
        let r = v["edges"]["R:1:0"]["crossings"].as_array_mut().unwrap();
        r.push(c.clone());
        r.push(c);
    });
    let bad = Drawing::from_json(&text).unwrap();
    let r = validate(&bad);
    let id = CrossingId::new(EdgeId::blue(0, 1), EdgeId::red(0, 1));
    assert!(r.violations.contains(&Violation::RepeatedPair { crossing: id, count: 2 }));
    assert!(r.violations.contains(&Violation::AdjacentCrossing { crossing: id }));
}

#[test]
fn self_crossing_is_reported() {
    let d = canonical(4, 6).unwrap();
    let text = edit(&d, |v| {
        let c = json!({"other": "B:0:1", "chirality": "+"});
        let b = v["edges"]["B:0:1"]["crossings"].as_array_mut().unwrap();
        b.push(c.clone());
        b.push(c);
    });
    let r = validate(&Drawing::from_json(&text).unwrap());
    assert!(r.violations.contains(&Violation::SelfCrossing { edge: "B:0:1".into() }));
}

#[test]
fn reader_rejects_one_sided_crossing() {
    let d = canonical(3, 7).unwrap();
    let text = edit(&d, |v| {
        v["edges"]["R:0:2"]["crossings"].as_array_mut().unwrap().clear();
    });
    assert!(Drawing::from_json(&text).is_err());
    let text = edit(&d, |v| {
        v["edges"]["R:0:2"]["crossings"][0]["chirality"] = json!("+");
    });
    assert!(Drawing::from_json(&text).is_err());
}

#[test]
fn reader_rejects_bad_rotation_and_endpoints() {
    let d = canonical(3, 5).unwrap();
    let text = edit(&d, |v| {
        v["rotations"]["0:0"][0] = json!("B:2:2");
    });
    assert!(Drawing::from_json(&text).is_err());
    let text = edit(&d, |v| {
        v["edges"]["B:0:1"]["tail"] = json!("0:1");
    });
    assert!(Drawing::from_json(&text).is_err());
}

#[test]
fn json_accepts_unicode_minus() {
    let d = canonical(3, 4).unwrap();
    let text = d.to_json().replace("\"-\"", "\"\u{2212}\"");
    assert_eq!(Drawing::from_json(&text).unwrap(), d);
}

#[test]
fn traversal_starts_after_the_start_vertex() {
    let d = canonical(5, 8).unwrap();
    let steps = d.blue_traversal(2, 3);
    assert_eq!(steps[0].blue, EdgeId::blue(2, 4));
    assert_eq!(steps[0].other, EdgeId::red(4, 3));
    assert_eq!(steps.len(), 8);
}

#[test]
fn identity_reroute_restores_the_drawing() {
    for d in [canonical(4, 6).unwrap(), common::double_crossing(8, 2), common::crosses_all(6)] {
        for e in d.graph().edges() {
            let route = d.route_of(e).unwrap();
            assert_eq!(d.reroute(e, &route).unwrap(), d, "{e}");
        }
    }
}

#[test]
fn some_perturbation_adds_crossings() {
    let d = canonical(3, 7).unwrap();
    let more = (0..200u64).any(|s| perturb(&d, s).unwrap().drawing.crossing_count() > 7);
    assert!(more);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_crossing_count(m in 3usize..9, n in 3usize..14) {
        let d = canonical(m, n).unwrap();
        prop_assert_eq!(d.crossing_count(), (m - 2) * n);
        prop_assert!(validate(&d).is_valid());
    }

    #[test]
    fn perturbations_validate_and_replay(m in 3usize..6, n in 3usize..9, seed in any::<u64>()) {
        let d = canonical(m, n).unwrap();
        let a = perturb(&d, seed).unwrap();
        let b = perturb(&d, seed).unwrap();
        prop_assert!(validate(&a.drawing).is_valid());
        prop_assert_eq!(&a.drawing, &b.drawing);
        let again = perturb(&a.drawing, seed ^ 0x5eed).unwrap();
        prop_assert!(validate(&again.drawing).is_valid());
    }

    #[test]
    fn json_round_trip(m in 3usize..6, n in 3usize..9, seed in any::<u64>()) {
        let d = crossring::drawing::fuzz_drawing(m, n, seed).unwrap();
        let back = Drawing::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), d.to_json());
        prop_assert_eq!(back.digest(), d.digest());
    }

    #[test]
    fn unvisited_edges_keep_their_crossings(seed in any::<u64>()) {
        let d = canonical(4, 7).unwrap();
        let p = perturb(&d, seed).unwrap();
        for e in d.graph().edges() {
            if e == p.edge { continue; }
            let before: Vec<_> = d.crossings_of(e).iter().filter(|c| c.other != p.edge).collect();
            let after: Vec<_> = p.drawing.crossings_of(e).iter().filter(|c| c.other != p.edge).collect();
            prop_assert_eq!(before, after);
        }
    }
}
