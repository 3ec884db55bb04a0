//! Character degrees by Dixon's method.
//!
//! The class sums `K_1, …, K_r` span the centre of the group algebra, with
//! `K_i K_j = Σ_k a_ijk K_k`. Each irreducible character `χ` gives a central
//! character `ω_χ(K_k) = |C_k| χ(g_k) / χ(1)`, and the vector
//! `w = (ω_χ(K_k))_k` is a common right eigenvector of the matrices
//! `(M_j)_{ik} = a_ijk` with `M_j w = w_j w`. Working modulo a prime
//! `p ≡ 1 (mod exp G)` the class algebra splits, the common eigenvectors are
//! found by successive eigenspace splitting, and the degree follows from
//!
//! ```text
//! Σ_k ω(K_k) ω(K_k*) / |C_k| = |G| / χ(1)²
//! ```
//!
//! where `k*` is the class of inverses. Since `χ(1) ≤ √|G| < p/2`, the value
//! of `χ(1)² mod p` determines `χ(1)`.

use super::{ConcreteGroup, GroupOps};
use crate::error::{Error, Result};

/// Largest group handled by [`ConcreteGroup::dixon_degrees`].
pub const DIXON_CAP: usize = 5000;

#[derive(Clone, Copy, Debug)]
struct Fp(u64);

impl Fp {
    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }
    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.0 != 0);
        self.pow(a, self.0 - 2)
    }
}

type Mat = Vec<Vec<u64>>;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2√order`.
fn choose_prime(exponent: u64, order: u64) -> Result<u64> {
    let mut p = exponent + 1;
    while p < 1 << 31 {
        if p * p > 4 * order && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::Dixon(format!("no prime found for exponent {exponent}")))
}

/// Characteristic polynomial of a square matrix over F_p, coefficients from
/// degree 0 up, by reduction to upper Hessenberg form.
fn charpoly(f: Fp, a: &Mat) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&r| h[r][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = f.inv(h[k + 1][k]);
        for r in k + 2..n {
            if h[r][k] == 0 {
                continue;
            }
            let c = f.mul(h[r][k], inv);
            // row_r -= c row_{k+1}; col_{k+1} += c col_r
            for col in 0..n {
                let v = f.mul(c, h[k + 1][col]);
                h[r][col] = f.sub(h[r][col], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(c, row[r]);
                row[k + 1] = f.add(row[k + 1], v);
            }
        }
    }
    let mul_linear = |poly: &[u64], root: u64| -> Vec<u64> {
        // (x - root) * poly
        let mut out = vec![0; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            out[i + 1] = f.add(out[i + 1], c);
            out[i] = f.sub(out[i], f.mul(root, c));
        }
        out
    };
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let mut pk = mul_linear(&polys[k], h[k][k]);
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let c = f.mul(h[i][k], prod);
            for (d, &v) in polys[i].iter().enumerate() {
                pk[d] = f.sub(pk[d], f.mul(c, v));
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Basis (as columns, returned as a list of vectors) of the null space of `a`.
fn nullspace(f: Fp, a: &Mat, cols: usize) -> Vec<Vec<u64>> {
    let mut m = a.clone();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]);
        for v in m[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let v = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.sub(0, m[i][fc]);
            }
            v
        })
        .collect()
}

/// Matrix of `m` restricted to the invariant subspace spanned by `basis`:
/// the `d × d` matrix `A` with `m B = B A`.
fn restrict(f: Fp, m: &Mat, basis: &[Vec<u64>]) -> Result<Mat> {
    let r = m.len();
    let d = basis.len();
    // Image vectors m·b.
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..r).map(|i| (0..r).fold(0, |acc, k| f.add(acc, f.mul(m[i][k], b[k])))).collect())
        .collect();
    // Solve B x = image for each image: row-reduce [B | images] (B as r × d).
    let mut aug: Mat = (0..r)
        .map(|i| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
            row.extend(images.iter().map(|v| v[i]));
            row
        })
        .collect();
    let width = 2 * d;
    let mut row = 0;
    for c in 0..d {
        let p = (row..r)
            .find(|&i| aug[i][c] != 0)
            .ok_or_else(|| Error::Dixon("dependent eigenspace basis".into()))?;
        aug.swap(row, p);
        let inv = f.inv(aug[row][c]);
        for v in aug[row].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for i in 0..r {
            if i != row && aug[i][c] != 0 {
                let factor = aug[i][c];
                for j in 0..width {
                    let v = f.mul(factor, aug[row][j]);
                    aug[i][j] = f.sub(aug[i][j], v);
                }
            }
        }
        row += 1;
    }
    if aug[d..].iter().any(|rw| rw[d..].iter().any(|&v| v != 0)) {
        return Err(Error::Dixon("subspace is not invariant".into()));
    }
    // A[k][j] = coefficient of basis k in image j.
    Ok((0..d).map(|k| (0..d).map(|j| aug[k][d + j]).collect()).collect())
}

pub(super) fn degrees<O: GroupOps>(g: &ConcreteGroup<O>) -> Result<Vec<u64>> {
    let order = g.order();
    if order > DIXON_CAP {
        return Err(Error::OutOfRange { what: "group order for Dixon", value: order as u64 });
    }
    let classes = g.conjugacy_classes()?;
    let r = classes.len();
    if r == 1 {
        return Ok(vec![1]);
    }
    let ops = g.ops();
    let sizes = classes.sizes();
    let inverse_class: Vec<usize> = (0..r)
        .map(|c| {
            let x = ops.inv(g.element(classes.representative(c)));
            classes.class_of(g.index_of(&x).expect("closed under inverses"))
        })
        .collect();

    let exponent = g.exponent();
    let p = choose_prime(exponent, order as u64)?;
    let f = Fp(p);

    // coeff[j][i][k] = #{x ∈ C_i : x⁻¹ z_k ∈ C_j}, i.e. a_ijk laid out as M_j.
    let mut coeff = vec![vec![vec![0u64; r]; r]; r];
    let inverses: Vec<O::Elem> = g.elements().iter().map(|x| ops.inv(x)).collect();
    for k in 0..r {
        let z = g.element(classes.representative(k));
        for (xi, x_inv) in inverses.iter().enumerate() {
            let y = ops.mul(x_inv, z);
            let j = classes.class_of(g.index_of(&y).expect("closed"));
            coeff[j][classes.class_of(xi)][k] += 1;
        }
    }
    let matrices: Vec<Mat> = coeff
        .into_iter()
        .map(|m| m.into_iter().map(|row| row.into_iter().map(|v| v % p).collect()).collect())
        .collect();

    let identity_basis: Vec<Vec<u64>> =
        (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut spaces = vec![identity_basis];
    for m in matrices.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let a = restrict(f, m, &space)?;
            let cp = charpoly(f, &a);
            let mut found = 0;
            for lambda in 0..p {
                if eval(f, &cp, lambda) != 0 {
                    continue;
                }
                let shifted: Mat = a
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, &v)| if i == j { f.sub(v, lambda) } else { v })
                            .collect()
                    })
                    .collect();
                let null = nullspace(f, &shifted, a.len());
                found += null.len();
                let sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|i| {
                                space
                                    .iter()
                                    .zip(c)
                                    .fold(0, |acc, (b, &ck)| f.add(acc, f.mul(b[i], ck)))
                            })
                            .collect()
                    })
                    .collect();
                next.push(sub);
            }
            if found != space.len() {
                return Err(Error::Dixon(format!(
                    "class matrix does not diagonalize modulo {p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Dixon(format!("found {} characters, expected {r}", spaces.len())));
    }

    let order_mod = order as u64 % p;
    let max_degree = (order as f64).sqrt() as u64 + 1;
    let mut degrees = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::Dixon("eigenvector vanishes on the identity class".into()));
        }
        let scale = f.inv(v[0]);
        let w: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        let norm = (0..r).fold(0, |acc, k| {
            let term = f.mul(f.mul(w[k], w[inverse_class[k]]), f.inv(sizes[k] as u64 % p));
            f.add(acc, term)
        });
        if norm == 0 {
            return Err(Error::Dixon("zero norm".into()));
        }
        let square = f.mul(order_mod, f.inv(norm));
        let d = (1..=max_degree)
            .find(|&d| d * d % p == square && order as u64 % d == 0)
            .ok_or_else(|| Error::Dixon(format!("no degree with square {square} mod {p}")))?;
        degrees.push(d);
    }
    degrees.sort_unstable();
    let total: u64 = degrees.iter().map(|d| d * d).sum();
    if total != order as u64 {
        return Err(Error::Dixon(format!("sum of squared degrees {total} != {order}")));
    }
    Ok(degrees)
}
