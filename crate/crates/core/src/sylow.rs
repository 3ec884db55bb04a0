//! The Sylow 2-subgroup `U` of `Sp_2n(2)` and its abelianization.
//!
//! With `J` the antidiagonal `n × n` matrix and `x̄ = ᵗx⁻¹`,
//!
//! ```text
//! U = { [[x, x s J], [0, J x̄ J]] : x ∈ V, s ∈ Sym_n }
//! ```
//!
//! where `V` is the group of upper unitriangular matrices and `Sym_n` the
//! symmetric matrices over F₂. `U ≅ Sym_n ⋊ V` for the action
//! `x.s = x s ᵗx`, so `|U^ab| = |Sym_n / S'| · |V^ab|` with `S'` spanned by the
//! images of `θ_x(s) = x s ᵗx - s`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{derived_subgroup, ConcreteGroup, GroupOps, MatrixOps, SymplecticForm};
use crate::linalg::{BitMatrix, BitVector, SpanBasis};

/// Largest `n` for the brute-force commutator oracle (`|U| = 2^{n²}`).
pub const BRUTE_U_LIMIT: usize = 4;
/// Largest `n` for the brute-force abelianization of `V`.
pub const BRUTE_V_LIMIT: usize = 5;

/// An element `(x, s)` of `U`: `x` upper unitriangular, `s` symmetric.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UElement {
    x: BitMatrix,
    s: BitMatrix,
}

impl UElement {
    pub fn new(x: BitMatrix, s: BitMatrix) -> Result<Self> {
        if !x.is_upper_unitriangular() {
            return Err(Error::Inconsistent("x is not upper unitriangular".into()));
        }
        if !s.is_symmetric() || s.rows() != x.rows() {
            return Err(Error::Inconsistent("s is not a symmetric matrix of matching size".into()));
        }
        Ok(UElement { x, s })
    }

    pub fn identity(n: usize) -> Self {
        UElement { x: BitMatrix::identity(n), s: BitMatrix::zeros(n, n) }
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &BitMatrix {
        &self.x
    }

    pub fn s(&self) -> &BitMatrix {
        &self.s
    }
}

/// `[[x, x s J], [0, J ᵗx⁻¹ J]]`.
pub fn embed(e: &UElement) -> BitMatrix {
    let n = e.n();
    let j = BitMatrix::antidiagonal(n);
    let top_right = e.x.mul_unchecked(&e.s).mul_unchecked(&j);
    let x_bar = e.x.inverse().expect("unitriangular").transpose();
    let bottom_right = j.mul_unchecked(&x_bar).mul_unchecked(&j);
    BitMatrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
        (true, true) => e.x.get(r, c),
        (true, false) => top_right.get(r, c - n),
        (false, true) => false,
        (false, false) => bottom_right.get(r - n, c - n),
    })
}

/// Reads `(x, s)` back from an embedded matrix, checking the block shape.
pub fn unembed(u: &BitMatrix) -> Result<UElement> {
    let n = u.rows() / 2;
    let block = |r0: usize, c0: usize| BitMatrix::from_fn(n, n, |i, j| u.get(r0 + i, c0 + j));
    if !block(n, 0).is_zero() {
        return Err(Error::Inconsistent("lower-left block is nonzero".into()));
    }
    let x = block(0, 0);
    let j = BitMatrix::antidiagonal(n);
    let x_inv = x.inverse()?;
    let s = x_inv.mul_unchecked(&block(0, n)).mul_unchecked(&j);
    let e = UElement::new(x, s)?;
    if embed(&e) != *u {
        return Err(Error::Inconsistent("matrix is not of the form of U".into()));
    }
    Ok(e)
}

/// `x.s = x s ᵗx`.
pub fn act(x: &BitMatrix, s: &BitMatrix) -> BitMatrix {
    x.mul_unchecked(s).mul_unchecked(&x.transpose())
}

/// `θ_x(s) = x s ᵗx - s`.
pub fn theta(x: &BitMatrix, s: &BitMatrix) -> BitMatrix {
    act(x, s).add(s).expect("same shape")
}

/// Product in `U`, read off from the block multiplication of the embeddings:
/// `(x_a, s_a)(x_b, s_b) = (x_a x_b, s_b + x_b⁻¹ s_a ᵗx_b⁻¹)`.
pub fn u_multiply(a: &UElement, b: &UElement) -> UElement {
    let xb_inv = b.x.inverse().expect("unitriangular");
    UElement {
        x: a.x.mul_unchecked(&b.x),
        s: b.s.add(&act(&xb_inv, &a.s)).expect("same shape"),
    }
}

/// `(x, s)⁻¹ = (x⁻¹, x s ᵗx)`.
pub fn u_inverse(a: &UElement) -> UElement {
    UElement { x: a.x.inverse().expect("unitriangular"), s: act(&a.x, &a.s) }
}

/// Group law of `U` on `(x, s)` pairs.
#[derive(Clone, Copy, Debug)]
pub struct UOps {
    pub n: usize,
}

impl GroupOps for UOps {
    type Elem = UElement;
    fn identity(&self) -> UElement {
        UElement::identity(self.n)
    }
    fn mul(&self, a: &UElement, b: &UElement) -> UElement {
        u_multiply(a, b)
    }
    fn inv(&self, a: &UElement) -> UElement {
        u_inverse(a)
    }
}

/// Basis of `Sym_n`: `E_ii` then `E_ij + E_ji` for `i < j`.
pub fn sym_basis(n: usize) -> Vec<BitMatrix> {
    let mut out: Vec<BitMatrix> = (0..n).map(|i| BitMatrix::elementary(n, i, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(BitMatrix::from_fn(n, n, |r, c| (r, c) == (i, j) || (r, c) == (j, i)));
        }
    }
    out
}

/// Coordinates of a symmetric matrix on its upper triangle.
fn sym_coords(s: &BitMatrix) -> BitVector {
    let n = s.rows();
    let mut v = BitVector::zeros(n * (n + 1) / 2);
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            if s.get(i, j) {
                v.set(k, true);
            }
            k += 1;
        }
    }
    v
}

/// Transvection generators `I + E_ij`, `i < j`, of `V`.
pub fn v_generators(n: usize) -> Vec<BitMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut x = BitMatrix::identity(n);
            x.set(i, j, true);
            out.push(x);
        }
    }
    out
}

/// Generators of `U`: `(I + E_ij, 0)` and `(I, b)` for `b` in the basis of `Sym_n`.
pub fn u_generators(n: usize) -> Vec<UElement> {
    let zero = BitMatrix::zeros(n, n);
    let mut out: Vec<UElement> =
        v_generators(n).into_iter().map(|x| UElement { x, s: zero.clone() }).collect();
    out.extend(sym_basis(n).into_iter().map(|s| UElement { x: BitMatrix::identity(n), s }));
    out
}

/// `S' = Σ θ_x(Sym_n)` together with its codimension in `Sym_n`.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaSpan {
    pub n: usize,
    pub sym_dim: usize,
    pub span_dim: usize,
    pub codim: usize,
    #[serde(skip)]
    pub basis: SpanBasis,
}

impl ThetaSpan {
    pub fn contains(&self, s: &BitMatrix) -> bool {
        self.basis.contains(&sym_coords(s))
    }
}

fn sym_index(n: usize, a: usize, b: usize) -> usize {
    a * n - a * a.saturating_sub(1) / 2 + (b - a)
}

/// `θ_x(s)` for `x = I + E_ij`, which is `E_ij s + s E_ji + s_jj E_ii`, in
/// upper-triangle coordinates.
fn theta_transvection_coords(i: usize, j: usize, s: &BitMatrix) -> BitVector {
    let n = s.rows();
    let mut v = BitVector::zeros(n * (n + 1) / 2);
    let mut toggle = |a: usize, b: usize| {
        if a <= b {
            let k = sym_index(n, a, b);
            v.set(k, !v.get(k));
        }
    };
    for b in 0..n {
        if s.get(j, b) {
            toggle(i, b);
        }
        if s.get(b, j) {
            toggle(b, i);
        }
    }
    if s.get(j, j) {
        toggle(i, i);
    }
    v
}

fn finish(n: usize, span: SpanBasis) -> ThetaSpan {
    let sym_dim = n * (n + 1) / 2;
    let span_dim = span.dim();
    ThetaSpan { n, sym_dim, span_dim, codim: sym_dim - span_dim, basis: span }
}

/// `S'` from the transvection generators of `V` only.
///
/// This is all of `Σ_{x ∈ V} θ_x(Sym_n)`: from `θ_{xy}(s) = θ_x(y.s) + θ_y(s)`
/// the image of `θ_{xy}` lies in `im θ_x + im θ_y`, and every `x ∈ V` is a
/// product of transvections.
pub fn theta_image_span(n: usize) -> Result<ThetaSpan> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "Sylow rank n (need n >= 2)", value: n as u64 });
    }
    let mut span = SpanBasis::new(n * (n + 1) / 2);
    let basis_s = sym_basis(n);
    for i in 0..n {
        for j in i + 1..n {
            for s in &basis_s {
                span.insert(&theta_transvection_coords(i, j, s))?;
            }
        }
    }
    Ok(finish(n, span))
}

/// Every element of `V`, by closure.
pub fn v_elements(n: usize) -> Result<Vec<BitMatrix>> {
    let cap = 1usize << (n * (n - 1) / 2).min(24);
    let g = ConcreteGroup::generate(MatrixOps { dim: n }, v_generators(n), cap)?;
    Ok(g.elements().iter().cloned().collect())
}

/// `S'` summed over every `x ∈ V`; the cross-check for [`theta_image_span`].
pub fn theta_image_span_full(n: usize) -> Result<ThetaSpan> {
    if !(2..=BRUTE_U_LIMIT).contains(&n) {
        return Err(Error::OutOfRange { what: "n for full-V span", value: n as u64 });
    }
    let mut span = SpanBasis::new(n * (n + 1) / 2);
    let basis_s = sym_basis(n);
    for x in v_elements(n)? {
        for s in &basis_s {
            span.insert(&sym_coords(&theta(&x, s)))?;
        }
    }
    Ok(finish(n, span))
}

/// `V` acts trivially on `Sym_n / S'`: the images of the complement basis
/// `E_{n-1,n-1}`, `E_{n,n}` under each transvection `θ_x` lie in `S'`.
pub fn quotient_action_is_trivial(span: &ThetaSpan) -> bool {
    let n = span.n;
    let complement = [BitMatrix::elementary(n, n - 2, n - 2), BitMatrix::elementary(n, n - 1, n - 1)];
    v_generators(n)
        .iter()
        .all(|x| complement.iter().all(|c| span.contains(&theta(x, c))))
}

/// `E_{n-1,n-1}` and `E_{n,n}` complete `S'` to all of `Sym_n`.
pub fn complement_spans(span: &ThetaSpan) -> bool {
    let n = span.n;
    let mut full = span.basis.clone();
    for c in [BitMatrix::elementary(n, n - 2, n - 2), BitMatrix::elementary(n, n - 1, n - 1)] {
        full.insert(&sym_coords(&c)).expect("lengths agree");
    }
    full.dim() == span.sym_dim
}

/// `|V / [V, V]| = 2^{n-1}`.
pub fn v_abelianization_order(n: usize) -> Result<u64> {
    if !(2..=63).contains(&n) {
        return Err(Error::OutOfRange { what: "Sylow rank n", value: n as u64 });
    }
    Ok(1 << (n - 1))
}

/// `|V / [V, V]|` by closing `V` and its derived subgroup.
pub fn brute_v_abelianization_order(n: usize) -> Result<u64> {
    if !(2..=BRUTE_V_LIMIT).contains(&n) {
        return Err(Error::OutOfRange { what: "n for brute V closure", value: n as u64 });
    }
    let ops = MatrixOps { dim: n };
    let v = v_elements(n)?;
    let derived = derived_subgroup(&ops, &v_generators(n), v.len())?;
    Ok((v.len() / derived.len()) as u64)
}

/// `|U / [U, U]| = 2^{codim S'} · |V^ab|`.
pub fn abelianization_order(n: usize) -> Result<u64> {
    let span = theta_image_span(n)?;
    Ok((1u64 << span.codim) * v_abelianization_order(n)?)
}

/// Order of `[U, U]`, computed as the normal closure in `U` of the
/// commutators of the generators of `U`.
pub fn brute_commutator_order(n: usize) -> Result<u64> {
    if !(2..=BRUTE_U_LIMIT).contains(&n) {
        return Err(Error::OutOfRange { what: "n for brute commutator closure", value: n as u64 });
    }
    let derived = derived_subgroup(&UOps { n }, &u_generators(n), 1 << (n * n))?;
    Ok(derived.len() as u64)
}

/// `|U|` by closure.
pub fn brute_u_order(n: usize) -> Result<u64> {
    if !(2..=BRUTE_U_LIMIT).contains(&n) {
        return Err(Error::OutOfRange { what: "n for brute U closure", value: n as u64 });
    }
    Ok(ConcreteGroup::generate(UOps { n }, u_generators(n), 1 << (n * n))?.order() as u64)
}

/// The embedded elements of `U` inside `Sp_2n(2)`.
pub fn embedded_u(n: usize) -> Result<HashSet<BitMatrix>> {
    if !(2..=BRUTE_U_LIMIT).contains(&n) {
        return Err(Error::OutOfRange { what: "n for embedded U", value: n as u64 });
    }
    let g = ConcreteGroup::generate(UOps { n }, u_generators(n), 1 << (n * n))?;
    let form = SymplecticForm::new(n);
    let out: HashSet<BitMatrix> = g.elements().iter().map(embed).collect();
    if let Some(bad) = out.iter().find(|u| !form.preserves(u)) {
        return Err(Error::Inconsistent(format!("embedded element is not symplectic: {bad:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn m(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_rows(rows).unwrap()
    }

    fn random_element(rng: &mut impl Rng, n: usize) -> UElement {
        let x = BitMatrix::from_fn(n, n, |i, j| i == j || (i < j && rng.gen()));
        let upper = BitMatrix::from_fn(n, n, |i, j| i <= j && rng.gen());
        let s = BitMatrix::from_fn(n, n, |i, j| upper.get(i.min(j), i.max(j)));
        UElement::new(x, s).unwrap()
    }

    #[test]
    fn embed_examples() {
        assert!(embed(&UElement::identity(3)).is_identity());

        let e = UElement::new(BitMatrix::identity(2), BitMatrix::elementary(2, 0, 0)).unwrap();
        let expected = m(&[&[1, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(embed(&e), expected);
        assert!(SymplecticForm::new(2).preserves(&expected));

        let x = m(&[&[1, 1], &[0, 1]]);
        let e = UElement::new(x.clone(), BitMatrix::zeros(2, 2)).unwrap();
        let u = embed(&e);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(u.get(i, j), x.get(i, j));
                assert_eq!(u.get(2 + i, 2 + j), x.get(i, j));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let a = UElement::new(BitMatrix::identity(2), BitMatrix::elementary(2, 1, 1)).unwrap();
        let b = UElement::new(m(&[&[1, 1], &[0, 1]]), BitMatrix::zeros(2, 2)).unwrap();
        let c = u_multiply(&a, &b);
        assert_eq!(c.x(), &m(&[&[1, 1], &[0, 1]]));
        assert_eq!(c.s(), &m(&[&[1, 1], &[1, 1]]));

        let s1 = UElement::new(BitMatrix::identity(3), sym_basis(3)[4].clone()).unwrap();
        let s2 = UElement::new(BitMatrix::identity(3), sym_basis(3)[1].clone()).unwrap();
        let sum = u_multiply(&s1, &s2);
        assert_eq!(sum.s(), &s1.s().add(s2.s()).unwrap());
        assert_eq!(u_multiply(&a, &UElement::identity(2)), a);
    }

    #[test]
    fn multiplication_agrees_with_embedding() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for _ in 0..500 {
            let n = rng.gen_range(2..=8);
            let a = random_element(&mut rng, n);
            let b = random_element(&mut rng, n);
            let form = SymplecticForm::new(n);
            assert!(form.preserves(&embed(&a)));
            let prod = embed(&a).mul_unchecked(&embed(&b));
            assert_eq!(embed(&u_multiply(&a, &b)), prod);
            assert_eq!(unembed(&prod).unwrap(), u_multiply(&a, &b));
            assert!(u_multiply(&a, &u_inverse(&a)) == UElement::identity(n));
        }
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(UElement::new(m(&[&[1, 0], &[1, 1]]), BitMatrix::zeros(2, 2)).is_err());
        assert!(UElement::new(BitMatrix::identity(2), m(&[&[0, 1], &[0, 0]])).is_err());
    }

    #[test]
    fn sparse_theta_matches_matrix_theta() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(2..=9);
            let s = random_element(&mut rng, n).s;
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            let mut x = BitMatrix::identity(n);
            x.set(i, j, true);
            assert_eq!(theta_transvection_coords(i, j, &s), sym_coords(&theta(&x, &s)));
        }
    }

    #[test]
    fn span_rank_two() {
        let span = theta_image_span(2).unwrap();
        assert_eq!((span.sym_dim, span.span_dim, span.codim), (3, 1, 2));
        assert!(span.contains(&m(&[&[1, 1], &[1, 0]])));
    }

    #[test]
    fn span_codimension_two() {
        for n in 2..=12 {
            let span = theta_image_span(n).unwrap();
            assert_eq!(span.codim, 2, "n = {n}");
            assert!(quotient_action_is_trivial(&span));
            assert!(complement_spans(&span));
        }
        assert_eq!(theta_image_span(3).unwrap().span_dim, 4);
    }

    #[test]
    fn transvections_suffice() {
        for n in 2..=4 {
            let small = theta_image_span(n).unwrap();
            let full = theta_image_span_full(n).unwrap();
            assert_eq!(small.span_dim, full.span_dim);
            for b in full.basis.basis() {
                assert!(small.basis.contains(b));
            }
        }
    }

    #[test]
    fn abelianization_orders() {
        assert_eq!(abelianization_order(2).unwrap(), 8);
        assert_eq!(abelianization_order(3).unwrap(), 16);
        assert_eq!(abelianization_order(4).unwrap(), 32);
    }

    #[test]
    fn v_abelianization() {
        assert_eq!(v_abelianization_order(2).unwrap(), 2);
        assert_eq!(v_abelianization_order(3).unwrap(), 4);
        assert_eq!(v_abelianization_order(5).unwrap(), 16);
        for n in 2..=BRUTE_V_LIMIT {
            assert_eq!(brute_v_abelianization_order(n).unwrap(), v_abelianization_order(n).unwrap());
        }
        assert!(brute_v_abelianization_order(6).is_err());
    }

    #[test]
    fn commutator_orders() {
        assert_eq!(brute_commutator_order(2).unwrap(), 2);
        assert_eq!(brute_commutator_order(3).unwrap(), 32);
        assert!(brute_commutator_order(5).is_err());
    }

    // All pairwise commutators, closed under multiplication.
    #[test]
    fn commutator_closure_matches_all_pairs() {
        for n in 2..=3 {
            let ops = UOps { n };
            let u = ConcreteGroup::generate(ops, u_generators(n), 1 << (n * n)).unwrap();
            let mut comms: Vec<UElement> = Vec::new();
            let mut seen = HashSet::new();
            for a in u.elements() {
                for b in u.elements() {
                    let c = ops.commutator(a, b);
                    if seen.insert(c.clone()) {
                        comms.push(c);
                    }
                }
            }
            let closed = ConcreteGroup::generate(ops, comms, 1 << (n * n)).unwrap();
            assert_eq!(closed.order() as u64, brute_commutator_order(n).unwrap());
        }
    }

    #[test]
    fn u_order_is_two_part_of_group_order() {
        for n in 2..=4u32 {
            let two_part = 1u128 << (n * n);
            assert_eq!(crate::group::sp2n_order(n) % two_part, 0);
            assert_eq!((crate::group::sp2n_order(n) / two_part) % 2, 1);
            assert_eq!(brute_u_order(n as usize).unwrap() as u128, two_part);
        }
        for n in 5..=7u32 {
            let order = crate::group::sp2n_order(n);
            assert_eq!(order.trailing_zeros(), n * n);
        }
    }
}
