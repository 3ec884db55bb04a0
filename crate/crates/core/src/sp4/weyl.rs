//! The Weyl group of type B₂ as signed permutation matrices, the Coxeter
//! representatives `w_e` and the graph map `φ`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A 2 × 2 integer matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntMat2(pub [[i64; 2]; 2]);

impl IntMat2 {
    pub const IDENTITY: IntMat2 = IntMat2([[1, 0], [0, 1]]);

    pub fn scalar(c: i64) -> Self {
        IntMat2([[c, 0], [0, c]])
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn mul(&self, other: &IntMat2) -> IntMat2 {
        let (a, b) = (&self.0, &other.0);
        IntMat2([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    pub fn scale(&self, c: i64) -> IntMat2 {
        IntMat2(self.0.map(|row| row.map(|x| c * x)))
    }

    pub fn sub(&self, other: &IntMat2) -> IntMat2 {
        let mut out = self.0;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x -= other.0[i][j];
            }
        }
        IntMat2(out)
    }

    pub fn det(&self) -> i64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// `adj(A)` with `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> IntMat2 {
        let a = &self.0;
        IntMat2([[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]])
    }

    pub fn pow(&self, k: u32) -> IntMat2 {
        (0..k).fold(IntMat2::IDENTITY, |acc, _| acc.mul(self))
    }

    /// One nonzero entry, equal to ±1, in each row and column.
    pub fn is_signed_permutation(&self) -> bool {
        let ok = |v: [i64; 2]| v.iter().filter(|&&x| x != 0).count() == 1 && v.iter().all(|x| x.abs() <= 1);
        let a = &self.0;
        ok(a[0]) && ok(a[1]) && ok([a[0][0], a[1][0]]) && ok([a[0][1], a[1][1]])
    }

    /// Inverse of a signed permutation matrix (its transpose).
    pub fn signed_perm_inverse(&self) -> IntMat2 {
        debug_assert!(self.is_signed_permutation());
        let a = &self.0;
        IntMat2([[a[0][0], a[1][0]], [a[0][1], a[1][1]]])
    }

    /// Multiplicative order, if at most `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut p = *self;
        for k in 1..=limit {
            if p == IntMat2::IDENTITY {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

impl fmt::Debug for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1])
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The graph map `φ` on the lattice, with `φ² = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMap {
    pub mat: IntMat2,
}

/// A choice of simple reflections `s₁, s₂` and graph map `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeylConvention {
    pub s1: IntMat2,
    pub s2: IntMat2,
    pub phi: GraphMap,
}

/// Order of the Weyl group of type B₂.
pub const WEYL_ORDER: usize = 8;

pub fn check_e(e: u32) -> Result<()> {
    match e {
        1 | 2 | 4 => Ok(()),
        _ => Err(Error::OutOfRange { what: "e (must be 1, 2 or 4)", value: e as u64 }),
    }
}

impl WeylConvention {
    /// `s₁` swaps coordinates, `s₂ = diag(1, -1)`, `φ = [[1, 1], [1, -1]]`.
    pub fn standard() -> Self {
        WeylConvention {
            s1: IntMat2([[0, 1], [1, 0]]),
            s2: IntMat2([[1, 0], [0, -1]]),
            phi: GraphMap { mat: IntMat2([[1, 1], [1, -1]]) },
        }
    }

    /// A second basis choice, used to check convention independence.
    pub fn alternate() -> Self {
        WeylConvention {
            s1: IntMat2([[0, -1], [-1, 0]]),
            s2: IntMat2([[1, 0], [0, -1]]),
            phi: GraphMap { mat: IntMat2([[1, -1], [-1, -1]]) },
        }
    }

    /// Checks the B₂ relations, `φ² = 2`, `φ s₁ = s₂ φ` and `(s₁φ)² = 2 w₄`.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Inconsistent(format!("convention: {what}")));
        if !self.s1.is_signed_permutation() || !self.s2.is_signed_permutation() {
            return bad("reflections are not signed permutations");
        }
        if self.s1.order(8) != Some(2) || self.s2.order(8) != Some(2) {
            return bad("reflections do not have order 2");
        }
        if self.s1.mul(&self.s2).order(8) != Some(4) {
            return bad("s1 s2 does not have order 4");
        }
        if self.weyl_group().len() != WEYL_ORDER {
            return bad("reflections do not generate a group of order 8");
        }
        let phi = self.phi.mat;
        if phi.mul(&phi) != IntMat2::scalar(2) {
            return bad("phi squared is not 2");
        }
        if phi.mul(&self.s1) != self.s2.mul(&phi) {
            return bad("phi does not conjugate s1 to s2");
        }
        let t = self.s1.mul(&phi);
        if t.mul(&t) != self.w(4)?.scale(2) {
            return bad("(s1 phi)^2 is not 2 w4");
        }
        Ok(())
    }

    /// All eight elements, sorted.
    pub fn weyl_group(&self) -> Vec<IntMat2> {
        closure(&[self.s1, self.s2])
    }

    /// `w₁ = 1`, `w₂ = (s₁s₂)² = -1`, `w₄ = s₁s₂`.
    pub fn w(&self, e: u32) -> Result<IntMat2> {
        check_e(e)?;
        let c = self.s1.mul(&self.s2);
        Ok(match e {
            1 => IntMat2::IDENTITY,
            2 => c.mul(&c),
            _ => c,
        })
    }

    /// `C_W(w_e)`, sorted.
    pub fn relative_weyl(&self, e: u32) -> Result<Vec<IntMat2>> {
        let w = self.w(e)?;
        Ok(self.weyl_group().into_iter().filter(|x| x.mul(&w) == w.mul(x)).collect())
    }

    /// Generators of `C_W(w_e)`: `s₁, s₂` for `e = 1, 2`, and `w₄` for `e = 4`.
    pub fn relative_weyl_generators(&self, e: u32) -> Result<Vec<IntMat2>> {
        check_e(e)?;
        Ok(if e == 4 { vec![self.w(4)?] } else { vec![self.s1, self.s2] })
    }

    /// The lattice map `ψ` with `σ = ψ^a`: `φ` for `e = 1, 2`, `s₁φ` for `e = 4`.
    pub fn twist(&self, e: u32) -> Result<IntMat2> {
        check_e(e)?;
        Ok(if e == 4 { self.s1.mul(&self.phi.mat) } else { self.phi.mat })
    }

    /// `ψ w ψ⁻¹` for `w ∈ W`, found as the `w'` with `ψ w = w' ψ`.
    pub fn conjugate_by(&self, psi: &IntMat2, w: &IntMat2) -> Result<IntMat2> {
        let lhs = psi.mul(w);
        self.weyl_group()
            .into_iter()
            .find(|x| x.mul(psi) == lhs)
            .ok_or_else(|| Error::Inconsistent(format!("{psi} does not normalize W")))
    }
}

fn closure(gens: &[IntMat2]) -> Vec<IntMat2> {
    let mut set: BTreeSet<IntMat2> = BTreeSet::from([IntMat2::IDENTITY]);
    let mut frontier = vec![IntMat2::IDENTITY];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// Conjugacy classes of a finite group of signed permutations.
pub fn classes_of(group: &[IntMat2]) -> Vec<BTreeSet<IntMat2>> {
    let mut out: Vec<BTreeSet<IntMat2>> = Vec::new();
    for x in group {
        if out.iter().any(|c| c.contains(x)) {
            continue;
        }
        out.push(group.iter().map(|g| g.mul(x).mul(&g.signed_perm_inverse())).collect());
    }
    out
}

/// `w_e` in the standard convention.
pub fn coxeter_data(e: u32) -> Result<IntMat2> {
    WeylConvention::standard().w(e)
}

/// `C_W(w_e)` in the standard convention.
pub fn relative_weyl(e: u32) -> Result<Vec<IntMat2>> {
    WeylConvention::standard().relative_weyl(e)
}

/// The standard graph map.
pub fn graph_map() -> GraphMap {
    WeylConvention::standard().phi
}

/// Number of irreducible characters of `C_W(w_e)` fixed by the twist: two of
/// the four linear characters of `W` are swapped by an odd power of `φ`,
/// while `s₁φ` centralizes `C_W(w₄)`.
pub fn weyl_fixed_irr(e: u32, a: u32) -> Result<u64> {
    check_e(e)?;
    Ok(match (e, a % 2) {
        (4, _) => 4,
        (_, 1) => 3,
        _ => 5,
    })
}

/// Classes of `C_W(w_e)` fixed under conjugation by `ψ^a`; equal to
/// [`weyl_fixed_irr`] by Brauer's permutation lemma.
pub fn weyl_fixed_classes(conv: &WeylConvention, e: u32, a: u32) -> Result<u64> {
    let psi = conv.twist(e)?.pow(a);
    let we = conv.relative_weyl(e)?;
    let mut fixed = 0;
    for class in classes_of(&we) {
        let x = class.iter().next().expect("nonempty");
        if class.contains(&conv.conjugate_by(&psi, x)?) {
            fixed += 1;
        }
    }
    Ok(fixed)
}
