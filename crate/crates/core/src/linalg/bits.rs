//! Dense matrices and vectors over the two-element field.
//!
//! Rows are packed into `u64` words; bit `c` of a row lives in word `c / 64`
//! at position `c % 64`. Padding bits past `cols` are always zero, so the
//! derived `Eq` and `Hash` compare the packed words directly.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; words_for(len)] }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the lowest set bit.
    pub fn leading_index(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained reduced row-echelon basis of a subspace of F₂^len.
///
/// Each basis vector owns one pivot position, and no other basis vector has
/// a one there. Reducing `v` therefore only touches the pivots where `v`
/// itself is set.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    len: usize,
    basis: Vec<BitVector>,
    owner: Vec<Option<usize>>,
}

impl SpanBasis {
    pub fn new(len: usize) -> Self {
        SpanBasis { len, basis: Vec::new(), owner: vec![None; len] }
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for (w, &word) in v.words().iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let i = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if let Some(k) = self.owner[i] {
                    r.xor_assign(&self.basis[k]);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.len && self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &BitVector) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::DimensionMismatch {
                op: "span insert",
                left: (1, self.len),
                right: (1, v.len()),
            });
        }
        let r = self.reduce(v);
        let Some(lead) = r.leading_index() else {
            return Ok(false);
        };
        for b in &mut self.basis {
            if b.get(lead) {
                b.xor_assign(&r);
            }
        }
        self.owner[lead] = Some(self.basis.len());
        self.basis.push(r);
        Ok(true)
    }
}

/// Rank of the span of `vectors` over F₂. The empty sequence spans `{0}`.
pub fn span_dimension(vectors: &[BitVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let mut span = SpanBasis::new(first.len());
    for v in vectors {
        span.insert(v)?;
    }
    Ok(span.dim())
}

/// A dense matrix over F₂ with rows packed into machine words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, words: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// The antidiagonal involution `J` with `J[i][n-1-i] = 1`.
    pub fn antidiagonal(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, n - 1 - i, true);
        }
        m
    }

    /// Elementary matrix `E_ij` (zero-based indices).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        m.set(i, j, true);
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries. All rows must share a length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (1, cols),
                    right: (1, r.len()),
                });
            }
            for (j, &b) in r.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.words[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        let mask = 1u64 << (j % WORD);
        let w = &mut self.words[i * self.stride + j / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.words.split_at_mut(dst * s);
            (&lo[src * s..src * s + s], &mut hi[..s])
        } else {
            let (lo, hi) = self.words.split_at_mut(src * s);
            (&hi[..s] as &[u64], &mut lo[dst * s..dst * s + s])
        };
        for (d, w) in b.iter_mut().zip(a) {
            *d ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.words.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    /// Row `i` as a vector.
    pub fn row(&self, i: usize) -> BitVector {
        BitVector { len: self.cols, words: self.row_words(i).to_vec() }
    }

    /// All entries read row by row into one vector of length `rows * cols`.
    pub fn flatten(&self) -> BitVector {
        let mut v = BitVector::zeros(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    v.set(i * self.cols + j, true);
                }
            }
        }
        v
    }

    pub fn transpose(&self) -> Self {
        BitMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == BitMatrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| self.get(i, j) == (i == j)))
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(BitMatrix { words, ..*self })
    }

    /// Matrix product mod 2.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let s = out.stride;
        for i in 0..self.rows {
            let dst = i * s;
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let j = wi * WORD + w.trailing_zeros() as usize;
                    w &= w - 1;
                    for (d, src) in out.words[dst..dst + s].iter_mut().zip(other.row_words(j)) {
                        *d ^= src;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product for operands already known to be compatible. Panics otherwise.
    pub fn mul_unchecked(&self, other: &BitMatrix) -> BitMatrix {
        self.mul(other).expect("dimension mismatch in mul_unchecked")
    }

    /// Inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = BitMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col)).ok_or(Error::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            for r in 0..n {
                if r != col && a.get(r, col) {
                    a.xor_row_into(col, r);
                    inv.xor_row_into(col, r);
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| a.get(r, col)) else {
                continue;
            };
            a.swap_rows(rank, pivot);
            for r in rank + 1..self.rows {
                if a.get(r, col) {
                    a.xor_row_into(rank, r);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Multiplicative order of a square invertible matrix, by repeated
    /// multiplication up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let id = BitMatrix::identity(self.rows);
        let mut p = self.clone();
        for k in 1..=limit {
            if p == id {
                return Some(k);
            }
            p = p.mul_unchecked(self);
        }
        None
    }

    /// Characteristic polynomial over F₂, bit `i` holding the coefficient of
    /// `X^i`. Computed by reduction to upper Hessenberg form.
    pub fn charpoly(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > 63 {
            return Err(Error::OutOfRange { what: "charpoly dimension", value: n as u64 });
        }
        let mut h: Vec<Vec<bool>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        // Similarity transforms: eliminate below the subdiagonal.
        for k in 0..n.saturating_sub(2) {
            let Some(p) = (k + 1..n).find(|&r| h[r][k]) else {
                continue;
            };
            if p != k + 1 {
                h.swap(p, k + 1);
                for row in h.iter_mut() {
                    row.swap(p, k + 1);
                }
            }
            for r in k + 2..n {
                if h[r][k] {
                    // row_r += row_{k+1}; then col_{k+1} += col_r.
                    for c in 0..n {
                        let v = h[k + 1][c];
                        h[r][c] ^= v;
                    }
                    for row in h.iter_mut() {
                        let v = row[r];
                        row[k + 1] ^= v;
                    }
                }
            }
        }
        // Recurrence p_k = (x + h_kk) p_{k-1} + sum_i h_ik * prod(subdiag) * p_{i-1}.
        let mut polys: Vec<u64> = vec![1];
        for k in 0..n {
            let prev = polys[k];
            let mut pk = (prev << 1) ^ if h[k][k] { prev } else { 0 };
            let mut prod = true;
            for i in (0..k).rev() {
                prod &= h[i + 1][i];
                if !prod {
                    break;
                }
                if h[i][k] {
                    pk ^= polys[i];
                }
            }
            polys.push(pk);
        }
        Ok(polys[n])
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
