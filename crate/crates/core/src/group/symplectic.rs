//! `Sp_2n(2)` as a matrix group over F₂.

use std::collections::BTreeMap;

use super::{ConcreteGroup, GroupOps};
use crate::linalg::BitMatrix;

/// Invertible `dim × dim` matrices over F₂ under multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixOps {
    pub dim: usize,
}

impl GroupOps for MatrixOps {
    type Elem = BitMatrix;

    fn identity(&self) -> BitMatrix {
        BitMatrix::identity(self.dim)
    }
    fn mul(&self, a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
        a.mul_unchecked(b)
    }
    fn inv(&self, a: &BitMatrix) -> BitMatrix {
        a.inverse().expect("group elements are invertible")
    }
}

/// The alternating form with Gram matrix `[[0, J], [J, 0]]` on F₂^{2n}, `J`
/// the `n × n` antidiagonal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    n: usize,
    gram: BitMatrix,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Self {
        // [[0, J], [J, 0]] is the 2n × 2n antidiagonal matrix.
        SymplecticForm { n, gram: BitMatrix::antidiagonal(2 * n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &BitMatrix {
        &self.gram
    }

    /// `ᵗu · gram · u = gram`.
    pub fn preserves(&self, u: &BitMatrix) -> bool {
        u.rows() == 2 * self.n
            && u.is_square()
            && u.transpose().mul_unchecked(&self.gram).mul_unchecked(u) == self.gram
    }

    /// Symplectic transvection `x ↦ x + B(x, v) v`, i.e. `I + v ᵗv gram`.
    pub fn transvection(&self, v: &[u8]) -> BitMatrix {
        let dim = 2 * self.n;
        assert_eq!(v.len(), dim);
        let gv: Vec<bool> =
            (0..dim).map(|j| (0..dim).fold(false, |acc, k| acc ^ (v[k] == 1 && self.gram.get(k, j)))).collect();
        let mut t = BitMatrix::identity(dim);
        for i in 0..dim {
            if v[i] == 1 {
                for (j, &g) in gv.iter().enumerate() {
                    if g {
                        t.set(i, j, !t.get(i, j));
                    }
                }
            }
        }
        t
    }
}

/// Transvections along the basis vectors and along `e_i + e_{i+1}`; together
/// they generate `Sp_2n(2)` (confirmed by the order check in the tests).
pub fn sp2n_generators(n: usize) -> Vec<BitMatrix> {
    let form = SymplecticForm::new(n);
    let dim = 2 * n;
    let unit = |i: usize| -> Vec<u8> { (0..dim).map(|k| (k == i) as u8).collect() };
    let mut gens: Vec<BitMatrix> = (0..dim).map(|i| form.transvection(&unit(i))).collect();
    for i in 0..dim - 1 {
        let mut v = unit(i);
        v[i + 1] = 1;
        gens.push(form.transvection(&v));
    }
    gens
}

/// `|Sp_2n(2)| = 2^{n²} Π_{i=1}^{n} (4^i - 1)`.
pub fn sp2n_order(n: u32) -> u128 {
    (1..=n).fold(1u128 << (n * n), |acc, i| acc * ((1u128 << (2 * i)) - 1))
}

/// Characteristic polynomials of the odd-order elements, with multiplicities.
/// Odd-order elements are exactly the semisimple ones in characteristic 2.
pub fn odd_order_charpoly_buckets(g: &ConcreteGroup<MatrixOps>) -> BTreeMap<u64, usize> {
    let mut buckets = BTreeMap::new();
    for x in g.elements() {
        let order = x.order(g.order()).expect("finite group");
        if order % 2 == 1 {
            *buckets.entry(x.charpoly().expect("square")).or_insert(0) += 1;
        }
    }
    buckets
}
