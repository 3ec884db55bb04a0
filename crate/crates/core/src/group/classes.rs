use std::collections::VecDeque;

use super::{ConcreteGroup, GroupOps, CONJUGACY_CAP};
use crate::error::{Error, Result};

/// Partition of a group into conjugacy classes, by element index.
///
/// Classes are ordered by their smallest member index, so class 0 is the
/// identity class, and each class lists its members ascending. The first
/// member is the class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ClassPartition {
    pub(super) fn compute<O: GroupOps>(g: &ConcreteGroup<O>) -> Result<Self> {
        if g.order() > CONJUGACY_CAP {
            return Err(Error::OutOfRange {
                what: "group order for conjugacy classes",
                value: g.order() as u64,
            });
        }
        let ops = g.ops();
        let gens: Vec<(O::Elem, O::Elem)> =
            g.generators().iter().map(|x| (x.clone(), ops.inv(x))).collect();
        let unassigned = usize::MAX;
        let mut class_of = vec![unassigned; g.order()];
        let mut classes = Vec::new();
        for start in 0..g.order() {
            if class_of[start] != unassigned {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let x = g.element(i);
                for (h, h_inv) in &gens {
                    let y = ops.mul(&ops.mul(h, x), h_inv);
                    let j = g.index_of(&y).ok_or_else(|| {
                        Error::Inconsistent(format!("conjugate {y:?} is outside the group"))
                    })?;
                    if class_of[j] == unassigned {
                        class_of[j] = c;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(ClassPartition { classes, class_of })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}
