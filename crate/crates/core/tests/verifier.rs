mod common;

use common::*;
use crossring::association::Context;
use crossring::drawing::fuzz_drawing;
use crossring::verifier::{disjointness_check, extract, hks_n0, hks_statement_bound};
use crossring::{canonical, certify, Error};
use num_rational::Ratio;
use proptest::prelude::*;

#[test]
fn canonical_certificates_are_tight() {
    for (m, n) in [(3, 7), (4, 8), (5, 10), (6, 12)] {
        let c = certify(&canonical(m, n).unwrap());
        assert!(c.valid && c.robust && c.pairwise_disjoint && c.theorem1_holds, "({m},{n})");
        assert!(c.falsifications.is_empty(), "{:?}", c.falsifications);
        assert_eq!(c.total_crossings, (m - 2) * n);
        assert_eq!(c.associated_total, (m - 2) * n);
        assert!(c.per_j.iter().all(|p| p.associated == m - 2));
        assert_eq!(c.euler_characteristic, 2);
        assert!(c.passed());
    }
}

#[test]
fn canonical_configurations_have_no_slack() {
    let d = canonical(5, 8).unwrap();
    let ctx = Context::new(&d).unwrap();
    let t = ctx.associated(2).unwrap().beta.t(1);
    let cv = extract(&ctx, 1, 2, &t).unwrap();
    assert_eq!(cv.arcs, vec![0, 4]);
    assert_eq!(cv.k, 0);
    assert!(cv.axiom_failures(&ctx).is_empty());
    let c = cv.count(&ctx);
    assert_eq!((c.s, c.x1, c.x2, c.x3), (2, 0, 0, 0));
    assert!(c.holds);
    assert!(extract(&ctx, 1, 2, &Default::default()).is_err());
}

#[test]
fn double_crossing_configuration_is_two_intersecting() {
    let d = double_crossing(7, 3);
    let ctx = Context::new(&d).unwrap();
    let a = ctx.associated(3).unwrap();
    let t = a.beta.t(1);
    let cv = extract(&ctx, 1, 3, &t).unwrap();
    assert_eq!(cv.k, 2);
    assert!(cv.count(&ctx).holds);
    let c = certify(&d);
    assert!(c.passed(), "{:?}", c.falsifications);
    assert!(c.total_crossings >= c.lower_bound);
}

#[test]
fn certificate_is_deterministic() {
    let d = fuzz_drawing(4, 9, 17).unwrap();
    let a = certify(&d).to_json();
    let b = certify(&crossring::Drawing::from_json(&d.to_json()).unwrap()).to_json();
    assert_eq!(a, b);
}

#[test]
fn non_robust_certificate() {
    let c = certify(&canonical(3, 4).unwrap());
    assert!(c.valid && !c.robust);
    assert!(c.per_j.is_empty());
    assert!(c.prop13.is_none());
    assert!(c.passed());

    let c = certify(&crosses_all(27));
    assert!(!c.robust);
    assert!(c.prop13.is_some());
    assert!(c.falsifications.is_empty());
}

#[test]
fn invalid_drawing_certificate() {
    let d = canonical(3, 7).unwrap();
    let id = d.crossing_ids()[0];
    let bad = d.with_flipped_chirality(id).unwrap();
    let c = certify(&bad);
    assert!(!c.valid);
    assert!(!c.passed());
}

#[test]
fn disjointness_flags_double_charge() {
    let d = canonical(4, 8).unwrap();
    let ctx = Context::new(&d).unwrap();
    let a = ctx.associated(0).unwrap();
    let mut b = a.clone();
    b.j = 1;
    for y in &mut b.y {
        y.j = 1;
    }
    let f = disjointness_check(&[a.clone(), b]);
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].check, "disjoint_y_y");
    assert!(disjointness_check(&[a]).is_empty());
}

#[test]
fn statement_bound() {
    let n0 = hks_n0(3);
    assert_eq!(n0, Ratio::from_integer(19));
    assert_eq!(hks_statement_bound(3, 19, n0).unwrap(), Ratio::from_integer(0));
    assert_eq!(hks_statement_bound(3, 29, n0).unwrap(), Ratio::from_integer(29));
    assert_eq!(hks_statement_bound(3, 28, n0).unwrap(), Ratio::from_integer(27));
    assert!(matches!(hks_statement_bound(3, 18, n0), Err(Error::BelowThreshold { .. })));
    assert_eq!(hks_n0(4), Ratio::new(51, 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fuzzed_certificates_hold(seed in any::<u64>(), m in 3usize..6, n in 5usize..11) {
        let d = fuzz_drawing(m, n, seed).unwrap();
        let c = certify(&d);
        prop_assert!(c.valid);
        prop_assert!(c.falsifications.is_empty(), "{:?}", c.falsifications);
        if c.robust {
            prop_assert!(c.theorem1_holds);
            let sum: usize = c.per_j.iter().map(|p| p.associated).sum();
            prop_assert!(sum <= c.total_crossings);
            prop_assert!(c.total_crossings >= c.lower_bound);
        }
    }
}
