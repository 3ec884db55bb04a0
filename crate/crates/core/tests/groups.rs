use std::collections::HashSet;

use mckay_core::group::{
    derived_subgroup, odd_order_charpoly_buckets, sp2n_generators, small_generating_set, ConcreteGroup, GroupOps,
    MatrixOps,
};
use mckay_core::sylow::{embed, embedded_u, u_generators, u_multiply, UOps};
use proptest::prelude::*;

/// Permutations of `0..k` in one-line notation, composed right to left.
#[derive(Clone, Copy, Debug)]
struct Perms(usize);

impl GroupOps for Perms {
    type Elem = Vec<u8>;
    fn identity(&self) -> Vec<u8> {
        (0..self.0 as u8).collect()
    }
    fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        b.iter().map(|&i| a[i as usize]).collect()
    }
    fn inv(&self, a: &Vec<u8>) -> Vec<u8> {
        let mut out = vec![0; a.len()];
        for (i, &x) in a.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        out
    }
}

fn arb_perm(k: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((0..k as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn arb_group() -> impl Strategy<Value = ConcreteGroup<Perms>> {
    (3usize..=6)
        .prop_flat_map(|k| proptest::collection::vec(arb_perm(k), 1..=3).prop_map(move |g| (k, g)))
        .prop_map(|(k, gens)| ConcreteGroup::generate(Perms(k), gens, 1000).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dixon_degrees_are_consistent(g in arb_group()) {
        let classes = g.conjugacy_classes().unwrap();
        let degrees = g.dixon_degrees().unwrap();
        prop_assert_eq!(degrees.len(), classes.len());
        prop_assert_eq!(degrees.iter().map(|d| d * d).sum::<u64>(), g.order() as u64);
        prop_assert_eq!(degrees.iter().filter(|&&d| d == 1).count(),
            g.order() / derived_subgroup(g.ops(), g.generators(), g.order()).unwrap().len());
    }

    #[test]
    fn identity_fixes_every_class(g in arb_group()) {
        let classes = g.conjugacy_classes().unwrap();
        prop_assert_eq!(g.fixed_class_count(&classes, |x: &Vec<u8>| x.clone()).unwrap(), classes.len());
    }

    #[test]
    fn inner_automorphisms_fix_every_class(g in arb_group(), i in any::<prop::sample::Index>()) {
        let classes = g.conjugacy_classes().unwrap();
        let h = g.element(i.index(g.order())).clone();
        let ops = *g.ops();
        prop_assert_eq!(g.fixed_class_count(&classes, |x: &Vec<u8>| ops.conjugate(&h, x)).unwrap(), classes.len());
    }

    #[test]
    fn normalizer_contains_subgroup(g in arb_group(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..=2)) {
        let ops = *g.ops();
        let gens: Vec<Vec<u8>> = picks.iter().map(|p| g.element(p.index(g.order())).clone()).collect();
        let h = ConcreteGroup::generate(ops, gens, g.order()).unwrap();
        let set: HashSet<Vec<u8>> = h.elements().iter().cloned().collect();
        let normalizer: HashSet<Vec<u8>> =
            g.normalizer(&set).unwrap().into_iter().map(|i| g.element(i).clone()).collect();
        prop_assert!(set.is_subset(&normalizer));
        for a in &normalizer {
            for b in &normalizer {
                prop_assert!(normalizer.contains(&ops.mul(a, b)));
            }
        }
        prop_assert!(small_generating_set(&ops, &set).unwrap().len() <= set.len().max(1).ilog2() as usize + 1);
    }
}

#[test]
fn sp4_odd_order_buckets() {
    let g = ConcreteGroup::generate(MatrixOps { dim: 4 }, sp2n_generators(2), 1000).unwrap();
    let buckets = odd_order_charpoly_buckets(&g);
    assert_eq!(buckets.len(), 4);
    assert_eq!(buckets.values().sum::<usize>(), 1 + 40 + 40 + 144);
}

#[test]
fn sylow_is_self_normalizing_in_sp4() {
    let g = ConcreteGroup::generate(MatrixOps { dim: 4 }, sp2n_generators(2), 1000).unwrap();
    let u = embedded_u(2).unwrap();
    assert_eq!(g.normalizer(&u).unwrap().len(), 16);
}

#[test]
fn u_group_law_matches_matrices() {
    for n in 2..=3 {
        let g = ConcreteGroup::generate(UOps { n }, u_generators(n), 1 << (n * n)).unwrap();
        assert_eq!(g.order(), 1 << (n * n));
        let matrices: HashSet<_> = g.elements().iter().map(embed).collect();
        assert_eq!(matrices.len(), g.order());
        for a in g.elements().iter().take(40) {
            for b in g.elements().iter().step_by(7) {
                assert!(matrices.contains(&embed(&u_multiply(a, b))));
            }
        }
    }
}
