use mckay_core::sp4::{
    analyze_e, build_local_group, expected_torus_order, weyl_fixed_irr, LocalGroup, WeylConvention,
};

#[test]
fn brauer_matches_census_for_small_q() {
    let conv = WeylConvention::standard();
    for q in [4, 8] {
        for e in [1, 2, 4] {
            let a = analyze_e(&conv, q, e, 1..=4).unwrap();
            assert_eq!(a.torus_order, expected_torus_order(q, e).unwrap());
            assert_eq!(a.predicted_irr, a.class_count);
            let dixon = a.dixon.as_ref().unwrap();
            assert_eq!(dixon.degrees.len() as u64, a.class_count);
            assert_eq!(dixon.sum_of_squares, a.local_order);
            assert!(a.stabilizer_dichotomy);
            for row in &a.fixed {
                assert_eq!(row.brauer, row.predicted, "q={q} e={e} a={}", row.a);
                assert_eq!(row.weyl_fixed, weyl_fixed_irr(e, row.a).unwrap());
            }
        }
    }
}

#[test]
fn answers_do_not_depend_on_convention() {
    for (q, e) in [(4, 1), (4, 2), (4, 4), (8, 4)] {
        let s = analyze_e(&WeylConvention::standard(), q, e, 1..=4).unwrap();
        let t = analyze_e(&WeylConvention::alternate(), q, e, 1..=4).unwrap();
        assert_eq!(s.invariant_factors, t.invariant_factors);
        assert_eq!(s.orbits, t.orbits);
        assert_eq!(s.class_count, t.class_count);
        assert_eq!(s.dixon, t.dixon);
        assert_eq!(s.fixed, t.fixed);
    }
}

#[test]
fn twist_is_an_automorphism() {
    for q in [4, 8] {
        for e in [1, 2, 4] {
            let n = build_local_group(q, e).unwrap();
            for a in 0..=4 {
                let sigma = n.sigma(a).unwrap();
                n.group.check_automorphism(&sigma).unwrap();
            }
        }
    }
}

#[test]
fn fixed_counts_have_period_four_at_most() {
    let n = LocalGroup::new(&WeylConvention::standard(), 4, 4).unwrap();
    let counts: Vec<u64> = (1..=8).map(|a| n.fixed_irr_count(a).unwrap()).collect();
    assert_eq!(counts, [4, 4, 4, 8, 4, 4, 4, 8]);
    let n = build_local_group(4, 1).unwrap();
    let counts: Vec<u64> = (1..=4).map(|a| n.fixed_irr_count(a).unwrap()).collect();
    assert_eq!(counts, [3, 9, 3, 9]);
}
