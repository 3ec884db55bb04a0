//! Finite tori `T = Z² / (q w_e - 1) Z²` and the maps induced on them.

use serde::Serialize;

use super::weyl::{check_e, IntMat2, WeylConvention};
use crate::error::{Error, Result};
use crate::linalg::{smith_decomposition, IntMatrix};

/// An endomorphism of `Z_{d₁} × Z_{d₂}` written as an integer matrix acting
/// on coordinate columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TorusMap {
    pub mat: [[u64; 2]; 2],
    pub moduli: [u64; 2],
}

impl TorusMap {
    pub fn identity(moduli: [u64; 2]) -> Self {
        TorusMap { mat: [[1 % moduli[0], 0], [0, 1 % moduli[1]]], moduli }
    }

    pub fn apply(&self, t: [u64; 2]) -> [u64; 2] {
        let row = |i: usize| {
            let s = self.mat[i][0] as u128 * t[0] as u128 + self.mat[i][1] as u128 * t[1] as u128;
            (s % self.moduli[i] as u128) as u64
        };
        [row(0), row(1)]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TorusMap) -> TorusMap {
        let mut mat = [[0u64; 2]; 2];
        for (i, row) in mat.iter_mut().enumerate() {
            for (k, x) in row.iter_mut().enumerate() {
                let s: u128 = (0..2).map(|j| self.mat[i][j] as u128 * other.mat[j][k] as u128).sum();
                *x = (s % self.moduli[i] as u128) as u64;
            }
        }
        TorusMap { mat, moduli: self.moduli }
    }

    pub fn pow(&self, k: u32) -> TorusMap {
        (0..k).fold(TorusMap::identity(self.moduli), |acc, _| acc.compose(self))
    }

    /// Pullback `χ ↦ χ ∘ self` on characters, with `χ` written in the dual
    /// coordinates `χ(t) = Σ χ_i t_i / d_i`.
    pub fn pullback(&self, chi: [u64; 2]) -> [u64; 2] {
        let d = self.moduli;
        let col = |k: usize| {
            let mut acc: u128 = 0;
            for i in 0..2 {
                let num = chi[i] as u128 * self.mat[i][k] as u128 * d[k] as u128;
                debug_assert_eq!(num % d[i] as u128, 0);
                acc += num / d[i] as u128;
            }
            (acc % d[k] as u128) as u64
        };
        [col(0), col(1)]
    }
}

/// `T = Z² / (q w_e - 1) Z² ≅ Z_{d₁} × Z_{d₂}`, with the isomorphism
/// `y ↦ left · y` taken from a Smith decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct TorusModel {
    pub q: u64,
    pub e: u32,
    pub invariant_factors: [u64; 2],
    #[serde(skip)]
    relation: IntMat2,
    #[serde(skip)]
    left: IntMat2,
    #[serde(skip)]
    left_inv: IntMat2,
}

/// Checks `q = 2^m` with `m ≥ 2`.
pub fn check_q(q: u64) -> Result<u32> {
    if q < 4 || !q.is_power_of_two() || q > 1 << 20 {
        return Err(Error::OutOfRange { what: "q (must be 2^m with 2 <= m <= 20)", value: q });
    }
    Ok(q.trailing_zeros())
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Multiplicative order of `q` modulo the odd prime `ell`, which must divide
/// `(q⁴ - 1)(q² - 1)`.
pub fn order_of_q_mod_ell(q: u64, ell: u64) -> Result<u32> {
    check_q(q)?;
    if ell % 2 == 0 || !is_prime(ell) {
        return Err(Error::OutOfRange { what: "ell (must be an odd prime)", value: ell });
    }
    let r = q % ell;
    let pow = |k: u32| (0..k).fold(1u64, |acc, _| acc * r % ell);
    if pow(4) != 1 {
        return Err(Error::OutOfRange { what: "ell (must divide (q^4 - 1)(q^2 - 1))", value: ell });
    }
    Ok([1, 2, 4].into_iter().find(|&e| pow(e) == 1).expect("pow(4) == 1"))
}

fn to_mat2(m: &IntMatrix) -> Result<IntMat2> {
    let get = |i, j| m.get_i64(i, j).ok_or_else(|| Error::Inconsistent("entry exceeds i64".into()));
    Ok(IntMat2([[get(0, 0)?, get(0, 1)?], [get(1, 0)?, get(1, 1)?]]))
}

impl TorusModel {
    pub fn new(conv: &WeylConvention, q: u64, e: u32) -> Result<Self> {
        check_q(q)?;
        check_e(e)?;
        let relation = conv.w(e)?.scale(q as i64).sub(&IntMat2::IDENTITY);
        let m = IntMatrix::from_rows(&relation.0)?;
        let snf = smith_decomposition(&m);
        let factors = snf.invariant_factors();
        let d = |i: usize| {
            u64::try_from(&factors[i]).map_err(|_| Error::Inconsistent("invariant factor too large".into()))
        };
        let invariant_factors = [d(0)?, d(1)?];
        if invariant_factors.contains(&0) {
            return Err(Error::Singular);
        }
        Ok(TorusModel {
            q,
            e,
            invariant_factors,
            relation,
            left: to_mat2(&snf.left)?,
            left_inv: to_mat2(&snf.left_inv)?,
        })
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors[0] * self.invariant_factors[1]
    }

    /// The matrix `q w_e - 1`.
    pub fn relation(&self) -> IntMat2 {
        self.relation
    }

    /// The map induced on `T` by a lattice endomorphism `x` preserving
    /// `(q w_e - 1) Z²`.
    pub fn transport(&self, x: &IntMat2) -> Result<TorusMap> {
        let a = self.relation;
        let det = a.det();
        // x A Z² ⊆ A Z²  ⇔  adj(A) x A ≡ 0 mod det(A).
        let test = a.adjugate().mul(x).mul(&a);
        if test.0.iter().flatten().any(|v| v % det != 0) {
            return Err(Error::Inconsistent(format!("{x} does not preserve the relation lattice")));
        }
        let b = self.left.mul(x).mul(&self.left_inv);
        let d = self.invariant_factors;
        let mut mat = [[0u64; 2]; 2];
        for i in 0..2 {
            for k in 0..2 {
                // Well defined on Z_{d_k} only if d_k b_ik ≡ 0 mod d_i.
                if (d[k] as i128 * b.0[i][k] as i128) % d[i] as i128 != 0 {
                    return Err(Error::Inconsistent("transported map is not well defined".into()));
                }
                mat[i][k] = b.0[i][k].rem_euclid(d[i] as i64) as u64;
            }
        }
        Ok(TorusMap { mat, moduli: d })
    }

    /// Every element of `T` (and, dually, every character), in lexicographic order.
    pub fn elements(&self) -> Vec<[u64; 2]> {
        let d = self.invariant_factors;
        (0..d[0]).flat_map(|x| (0..d[1]).map(move |y| [x, y])).collect()
    }

    /// Generators `(1, 0)`, `(0, 1)` of the nontrivial factors.
    pub fn generators(&self) -> Vec<[u64; 2]> {
        let d = self.invariant_factors;
        let mut out = Vec::new();
        if d[0] > 1 {
            out.push([1, 0]);
        }
        if d[1] > 1 {
            out.push([0, 1]);
        }
        out
    }
}

/// Torus model in the standard convention.
pub fn torus_structure(q: u64, e: u32) -> Result<TorusModel> {
    TorusModel::new(&WeylConvention::standard(), q, e)
}

/// `(q - 1)²`, `(q + 1)²` or `q² + 1`.
pub fn expected_torus_order(q: u64, e: u32) -> Result<u64> {
    check_e(e)?;
    Ok(match e {
        1 => (q - 1) * (q - 1),
        2 => (q + 1) * (q + 1),
        _ => q * q + 1,
    })
}
