mod common;

use std::collections::BTreeSet;

use common::*;
use crossring::association::{Class, Context, Family, Tag};
use crossring::product_graph::EdgeId;
use crossring::{canonical, CrossingId, Error};

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

#[test]
fn canonical_5_8_classes() {
    let d = canonical(5, 8).unwrap();
    let ctx = Context::new(&d).unwrap();
    use Class::*;
    for j in 0..8 {
        assert_eq!(ctx.classify(j).unwrap(), vec![Tzero, Cplus, Cplus, Cplus, Tzero]);
    }
}

#[test]
fn canonical_3_7_classes() {
    let d = canonical(3, 7).unwrap();
    let ctx = Context::new(&d).unwrap();
    for j in 0..7 {
        assert_eq!(ctx.classify(j).unwrap(), vec![Class::Tzero, Class::Cplus, Class::Tzero]);
    }
}

#[test]
fn canonical_beta_data() {
    let d = canonical(5, 8).unwrap();
    let ctx = Context::new(&d).unwrap();
    for j in 0..8 {
        let classes = ctx.classify(j).unwrap();
        let b = ctx.beta_data(j, &classes).unwrap();
        assert_eq!(b.bbar, vec![1; 5]);
        assert_eq!(b.s, set(&[1]));
        assert_eq!(b.t(1), set(&[0, 4]));
    }
}

#[test]
fn canonical_y_is_the_closing_edge() {
    let (m, n) = (5, 8);
    let d = canonical(m, n).unwrap();
    let ctx = Context::new(&d).unwrap();
    for j in 0..n {
        let a = ctx.associated(j).unwrap();
        let closing = EdgeId::red(m - 1, j);
        let expected: Vec<CrossingId> =
            (1..4).map(|i| CrossingId::new(closing, EdgeId::blue(i, (j + 1) % n))).collect();
        let got: Vec<CrossingId> = a.y.iter().map(|x| x.crossing).collect();
        assert_eq!(got, expected);
        assert!(a.y.iter().all(|x| x.tag == Tag::I && x.family == Family::Y));
        assert!(a.x.values().all(Vec::is_empty));
        assert_eq!(a.all().count(), m - 2);
    }
}

#[test]
fn canonical_counts_per_j() {
    for (m, n) in [(3, 7), (4, 8), (6, 12)] {
        let d = canonical(m, n).unwrap();
        let ctx = Context::new(&d).unwrap();
        let mut all = BTreeSet::new();
        for j in 0..n {
            let a = ctx.associated(j).unwrap();
            assert_eq!(a.all().count(), m - 2);
            all.extend(a.all().map(|x| x.crossing));
            assert!(ctx.prop7_check(j, &a.classes).is_empty());
        }
        assert_eq!(all.len(), (m - 2) * n);
    }
}

#[test]
fn not_robust_is_rejected() {
    let d = canonical(3, 4).unwrap();
    assert!(matches!(Context::new(&d), Err(Error::NotRobust)));
}

#[test]
fn type_a_collects_red_red_crossings() {
    let d = double_crossing(7, 3);
    let ctx = Context::new(&d).unwrap();
    let a = ctx.associated(3).unwrap();
    let t1 = a.beta.t(1);
    let x = ctx.x_set(1, 3, &t1).unwrap();
    let type_a: Vec<_> = x.iter().filter(|x| x.tag == Tag::A).collect();
    assert_eq!(type_a.len(), 2);
    for x in &type_a {
        let (e, f) = x.crossing.edges();
        assert_eq!(e.red_cycle(), Some(2));
        assert_eq!(f.red_cycle(), Some(3));
    }
}

#[test]
fn type_d_needs_two_indices() {
    let d = canonical(4, 8).unwrap();
    let ctx = Context::new(&d).unwrap();
    let x = ctx.x_set(1, 0, &set(&[0])).unwrap();
    assert!(x.iter().all(|x| x.tag != Tag::D));
}

#[test]
fn partition_is_total() {
    for seed in 0..60 {
        let d = crossring::drawing::fuzz_drawing(3, 9, seed).unwrap();
        let Ok(ctx) = Context::new(&d) else { continue };
        for j in 0..9 {
            let a = ctx.associated(j).unwrap();
            assert_eq!(a.classes.len(), 3);
            let tz = a.class_set(Class::Tzero);
            let union: BTreeSet<usize> = a.beta.t.values().flatten().copied().collect();
            assert_eq!(union, tz);
            for (&b, t) in &a.beta.t {
                assert!(b >= 1 && b <= ctx.b(j));
                assert!(t.is_subset(&tz));
            }
        }
    }
}
