//! A small engine for explicit finite groups.
//!
//! Groups are described by a [`GroupOps`] implementation (multiplication,
//! inversion and identity over some hashable element type) and realized as a
//! [`ConcreteGroup`] by breadth-first closure of a generating set. Element
//! indices are the BFS discovery order, so every downstream answer is a
//! deterministic function of the generator order.

mod classes;
mod dixon;
mod symplectic;

use std::collections::{HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use indexmap::IndexSet;

use crate::error::{Error, Result};

pub use classes::ClassPartition;
pub use dixon::DIXON_CAP;
pub use symplectic::{
    odd_order_charpoly_buckets, sp2n_generators, sp2n_order, MatrixOps, SymplecticForm,
};

/// Largest group for which conjugacy classes are computed.
pub const CONJUGACY_CAP: usize = 200_000;

/// Group law on an element type.
pub trait GroupOps {
    type Elem: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn conjugate(&self, g: &Self::Elem, x: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(g, x), &self.inv(g))
    }

    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        self.mul(&self.mul(&self.inv(a), &self.inv(b)), &ab)
    }
}

impl<O: GroupOps> GroupOps for &O {
    type Elem = O::Elem;

    fn identity(&self) -> O::Elem {
        (*self).identity()
    }
    fn mul(&self, a: &O::Elem, b: &O::Elem) -> O::Elem {
        (*self).mul(a, b)
    }
    fn inv(&self, a: &O::Elem) -> O::Elem {
        (*self).inv(a)
    }
}

/// An explicit finite group: every element stored, indexed in BFS order.
#[derive(Clone, Debug)]
pub struct ConcreteGroup<O: GroupOps> {
    ops: O,
    generators: Vec<O::Elem>,
    elements: IndexSet<O::Elem>,
}

/// Subgroup closure of `generators` by BFS; errors once more than `cap`
/// elements have been found.
fn closure<O: GroupOps>(ops: &O, generators: &[O::Elem], cap: usize) -> Result<IndexSet<O::Elem>> {
    let mut elements = IndexSet::new();
    elements.insert(ops.identity());
    let mut frontier = VecDeque::from([0usize]);
    while let Some(i) = frontier.pop_front() {
        for g in generators {
            let y = ops.mul(&elements[i], g);
            let (j, fresh) = elements.insert_full(y);
            if fresh {
                if elements.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                frontier.push_back(j);
            }
        }
    }
    Ok(elements)
}

impl<O: GroupOps> ConcreteGroup<O> {
    /// Closes `generators` under multiplication. Right multiplication by
    /// generators suffices in a finite group.
    pub fn generate(ops: O, generators: Vec<O::Elem>, cap: usize) -> Result<Self> {
        let elements = closure(&ops, &generators, cap)?;
        let group = ConcreteGroup { ops, generators, elements };
        group.spot_check()?;
        Ok(group)
    }

    fn spot_check(&self) -> Result<()> {
        let id = self.ops.identity();
        let step = (self.order() / 64).max(1);
        for x in self.elements.iter().step_by(step) {
            if self.ops.mul(&id, x) != *x || self.ops.mul(x, &id) != *x {
                return Err(Error::Inconsistent(format!("identity is not neutral on {x:?}")));
            }
            let xi = self.ops.inv(x);
            if !self.elements.contains(&xi) || self.ops.mul(x, &xi) != id {
                return Err(Error::Inconsistent(format!("bad inverse for {x:?}")));
            }
        }
        Ok(())
    }

    pub fn ops(&self) -> &O {
        &self.ops
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[O::Elem] {
        &self.generators
    }

    pub fn elements(&self) -> &IndexSet<O::Elem> {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &O::Elem {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &O::Elem) -> Option<usize> {
        self.elements.get_index_of(x)
    }

    pub fn contains(&self, x: &O::Elem) -> bool {
        self.elements.contains(x)
    }

    /// Order of element `x`, or `None` past `limit`.
    pub fn element_order(&self, x: &O::Elem, limit: usize) -> Option<usize> {
        let id = self.ops.identity();
        let mut p = x.clone();
        for k in 1..=limit {
            if p == id {
                return Some(k);
            }
            p = self.ops.mul(&p, x);
        }
        None
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1u64, |acc, x| {
            let o = self.element_order(x, self.order()).expect("finite group") as u64;
            num_integer::lcm(acc, o)
        })
    }

    /// Conjugacy classes, as orbits under conjugation by the generators.
    pub fn conjugacy_classes(&self) -> Result<ClassPartition> {
        ClassPartition::compute(self)
    }

    /// `{h : h K h⁻¹ = K}` for a subgroup `K` given by its element set,
    /// returned as sorted element indices. Membership is tested on the
    /// images of a small generating set of `K`.
    pub fn normalizer(&self, subgroup: &HashSet<O::Elem>) -> Result<Vec<usize>> {
        if let Some(x) = subgroup.iter().find(|x| !self.contains(x)) {
            return Err(Error::Inconsistent(format!("{x:?} is not in the group")));
        }
        let sub_gens = small_generating_set(&self.ops, subgroup)?;
        let mut out = Vec::new();
        for (i, h) in self.elements.iter().enumerate() {
            if sub_gens.iter().all(|k| subgroup.contains(&self.ops.conjugate(h, k))) {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Checks that `sigma` is a bijective homomorphism of this group onto
    /// itself; the homomorphism property is tested on generator × element
    /// pairs for a deterministic sample of elements.
    pub fn check_automorphism(&self, sigma: &impl Fn(&O::Elem) -> O::Elem) -> Result<()> {
        let mut seen = vec![false; self.order()];
        for x in &self.elements {
            let y = sigma(x);
            let j = self
                .index_of(&y)
                .ok_or_else(|| Error::NotAutomorphism(format!("{x:?} maps outside the group")))?;
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::NotAutomorphism("map is not injective".into()));
            }
        }
        let step = (self.order() / 256).max(1);
        for x in self.elements.iter().step_by(step) {
            for g in &self.generators {
                for (a, b) in [(x, g), (g, x)] {
                    if sigma(&self.ops.mul(a, b)) != self.ops.mul(&sigma(a), &sigma(b)) {
                        return Err(Error::NotAutomorphism(format!(
                            "multiplicativity fails on {a:?}, {b:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of conjugacy classes mapped to themselves by the automorphism
    /// `sigma`. By Brauer's permutation lemma this is also the number of
    /// `sigma`-fixed irreducible characters.
    pub fn fixed_class_count(
        &self,
        classes: &ClassPartition,
        sigma: impl Fn(&O::Elem) -> O::Elem,
    ) -> Result<usize> {
        self.check_automorphism(&sigma)?;
        Ok(classes
            .classes()
            .iter()
            .enumerate()
            .filter(|(c, members)| {
                let image = sigma(&self.elements[members[0]]);
                classes.class_of(self.index_of(&image).expect("checked above")) == *c
            })
            .count())
    }

    /// Irreducible character degrees by Dixon's method, sorted ascending.
    pub fn dixon_degrees(&self) -> Result<Vec<u64>> {
        dixon::degrees(self)
    }
}

/// Greedy generating set: keep any element not yet in the span of the
/// previous choices.
pub fn small_generating_set<O: GroupOps>(ops: &O, set: &HashSet<O::Elem>) -> Result<Vec<O::Elem>> {
    let mut gens: Vec<O::Elem> = Vec::new();
    let mut span = closure(ops, &gens, set.len())?;
    // HashSet order is not deterministic; sort by debug text for stable output.
    let mut items: Vec<&O::Elem> = set.iter().collect();
    items.sort_by_cached_key(|x| format!("{x:?}"));
    for x in items {
        if !span.contains(x) {
            gens.push(x.clone());
            span = closure(ops, &gens, set.len()).map_err(|_| {
                Error::Inconsistent("element set is not closed under multiplication".into())
            })?;
        }
    }
    if span.len() != set.len() || !span.iter().all(|x| set.contains(x)) {
        return Err(Error::Inconsistent("element set is not a subgroup".into()));
    }
    Ok(gens)
}

/// Smallest subgroup containing `seeds` and normalized by `ambient_gens`.
pub fn normal_closure<O: GroupOps>(
    ops: &O,
    seeds: &[O::Elem],
    ambient_gens: &[O::Elem],
    cap: usize,
) -> Result<IndexSet<O::Elem>> {
    let mut gens: Vec<O::Elem> = Vec::new();
    let mut seen_gens: HashSet<O::Elem> = HashSet::new();
    for s in seeds {
        if seen_gens.insert(s.clone()) {
            gens.push(s.clone());
        }
    }
    loop {
        let span = closure(ops, &gens, cap)?;
        let mut extra = Vec::new();
        for k in &gens {
            for g in ambient_gens {
                let c = ops.conjugate(g, k);
                if !span.contains(&c) && seen_gens.insert(c.clone()) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return Ok(span);
        }
        gens.extend(extra);
    }
}

/// Subgroup generated by all commutators of the group generated by
/// `generators`: the normal closure of the pairwise generator commutators.
pub fn derived_subgroup<O: GroupOps>(
    ops: &O,
    generators: &[O::Elem],
    cap: usize,
) -> Result<IndexSet<O::Elem>> {
    let mut seeds = Vec::new();
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i + 1..] {
            seeds.push(ops.commutator(a, b));
        }
    }
    normal_closure(ops, &seeds, generators, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Permutations of {0..k} composed left to right: (a*b)(i) = b(a(i)).
    #[derive(Clone, Copy)]
    pub(crate) struct Perm(pub usize);

    impl GroupOps for Perm {
        type Elem = Vec<u8>;
        fn identity(&self) -> Vec<u8> {
            (0..self.0 as u8).collect()
        }
        fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
            a.iter().map(|&i| b[i as usize]).collect()
        }
        fn inv(&self, a: &Vec<u8>) -> Vec<u8> {
            let mut out = vec![0; a.len()];
            for (i, &j) in a.iter().enumerate() {
                out[j as usize] = i as u8;
            }
            out
        }
    }

    pub(crate) fn symmetric(k: usize) -> ConcreteGroup<Perm> {
        let mut cycle: Vec<u8> = (1..k as u8).collect();
        cycle.push(0);
        let mut swap: Vec<u8> = (0..k as u8).collect();
        swap.swap(0, 1);
        ConcreteGroup::generate(Perm(k), vec![swap, cycle], 100_000).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = ConcreteGroup::generate(Perm(3), vec![vec![0, 1, 2]], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().unwrap().len(), 1);
        assert_eq!(g.dixon_degrees().unwrap(), vec![1]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = ConcreteGroup::generate(Perm(5), symmetric(5).generators().to_vec(), 100);
        assert!(matches!(err, Err(Error::CapExceeded { cap: 100 })));
    }

    #[test]
    fn s4_structure() {
        let g = symmetric(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.exponent(), 12);
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.len(), 5);
        assert_eq!(g.dixon_degrees().unwrap(), vec![1, 1, 2, 3, 3]);
        let derived = derived_subgroup(g.ops(), g.generators(), 100).unwrap();
        assert_eq!(derived.len(), 12);
    }

    #[test]
    fn normalizer_contains_subgroup() {
        let g = symmetric(4);
        // Klein four-group is normal; a transposition subgroup has normalizer of order 4.
        let v4: HashSet<Vec<u8>> =
            [vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]].into();
        assert_eq!(g.normalizer(&v4).unwrap().len(), 24);
        let t: HashSet<Vec<u8>> = [vec![0, 1, 2, 3], vec![1, 0, 2, 3]].into();
        let n = g.normalizer(&t).unwrap();
        assert_eq!(n.len(), 4);
        for x in &t {
            assert!(n.contains(&g.index_of(x).unwrap()));
        }
        let trivial: HashSet<Vec<u8>> = [vec![0, 1, 2, 3]].into();
        assert_eq!(g.normalizer(&trivial).unwrap().len(), 24);
    }

    #[test]
    fn normalizer_rejects_non_subgroups() {
        let g = symmetric(3);
        let bad: HashSet<Vec<u8>> = [vec![0, 1, 2], vec![1, 2, 0]].into();
        assert!(g.normalizer(&bad).is_err());
    }

    #[test]
    fn fixed_classes_identity_and_inner() {
        let g = symmetric(4);
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(g.fixed_class_count(&classes, |x| x.clone()).unwrap(), 5);
        let h = g.element(5).clone();
        let ops = *g.ops();
        assert_eq!(g.fixed_class_count(&classes, |x| ops.conjugate(&h, x)).unwrap(), 5);
    }

    #[test]
    fn non_automorphisms_rejected() {
        let g = symmetric(3);
        let classes = g.conjugacy_classes().unwrap();
        let id = g.ops().identity();
        assert!(g.fixed_class_count(&classes, |_| id.clone()).is_err());
    }
}
