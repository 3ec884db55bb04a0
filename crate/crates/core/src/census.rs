//! Semisimple classes of `Sp_2n(2)` through self-dual polynomials, and the
//! resulting count of odd-degree irreducible characters.
//!
//! A semisimple class corresponds to its characteristic polynomial, a
//! palindromic polynomial of degree `2n` over F₂. Writing the polynomial as
//! `(X + 1)^{2m} g` with `g(1) ≠ 0`, the centralizer is `Sp_2m(2) × C` with `C`
//! a product of general linear groups. The odd-degree characters in the
//! corresponding Lusztig series are then counted by the unipotent ones of the
//! centralizer.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` for which the census is computed by exhausting all `2^n`
/// palindromic polynomials.
pub const ENUMERATION_LIMIT: u64 = 20;

/// A monic palindromic polynomial over F₂ of even degree `2k`; bit `i` of
/// `coeffs` is the coefficient of `X^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfDualPoly {
    degree: u32,
    coeffs: u64,
}

impl SelfDualPoly {
    pub fn new(degree: u32, coeffs: u64) -> Result<Self> {
        if degree % 2 != 0 || degree > 62 {
            return Err(Error::OutOfRange { what: "self-dual degree", value: degree as u64 });
        }
        if coeffs >> (degree + 1) != 0 || coeffs & 1 == 0 || (coeffs >> degree) & 1 == 0 {
            return Err(Error::Inconsistent(format!("{coeffs:#b} is not monic of degree {degree}")));
        }
        if reverse_bits(coeffs, degree) != coeffs {
            return Err(Error::Inconsistent(format!("{coeffs:#b} is not palindromic")));
        }
        Ok(SelfDualPoly { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> u64 {
        self.coeffs
    }

    /// `f(X) ↦ X^deg f(1/X)`, i.e. `a_i ↦ a_{deg - i}`.
    pub fn reversed(&self) -> u64 {
        reverse_bits(self.coeffs, self.degree)
    }
}

impl fmt::Debug for SelfDualPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_to_string(self.coeffs))
    }
}

impl fmt::Display for SelfDualPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_to_string(self.coeffs))
    }
}

fn poly_to_string(coeffs: u64) -> String {
    if coeffs == 0 {
        return "0".into();
    }
    let terms: Vec<String> = (0..64)
        .rev()
        .filter(|i| (coeffs >> i) & 1 == 1)
        .map(|i| match i {
            0 => "1".into(),
            1 => "X".into(),
            _ => format!("X^{i}"),
        })
        .collect();
    terms.join("+")
}

fn reverse_bits(coeffs: u64, degree: u32) -> u64 {
    (0..=degree).filter(|&i| (coeffs >> i) & 1 == 1).fold(0, |acc, i| acc | 1 << (degree - i))
}

/// All palindromic monic polynomials of degree `2k`: the free coefficients
/// are `a_1, …, a_k`.
pub fn enumerate_selfdual(k: u32) -> Vec<SelfDualPoly> {
    assert!(k <= 31, "degree 2k must fit in 63 bits");
    let degree = 2 * k;
    if k == 0 {
        return vec![SelfDualPoly { degree: 0, coeffs: 1 }];
    }
    (0..1u64 << k)
        .map(|free| {
            let mut c = 1u64 | 1 << degree;
            for i in 1..=k {
                if (free >> (i - 1)) & 1 == 1 {
                    c |= 1 << i | 1 << (degree - i);
                }
            }
            SelfDualPoly { degree, coeffs: c }
        })
        .collect()
}

/// Exact division by `X + 1` via the running-XOR recurrence, or `None` when
/// the remainder `f(1)` is nonzero.
fn divide_by_x_plus_one(coeffs: u64, degree: u32) -> Option<u64> {
    if degree == 0 || coeffs.count_ones() % 2 == 1 {
        return None;
    }
    // q_{d-1} = a_d, q_{i-1} = a_i + q_i.
    let mut q = 0u64;
    let mut carry = 0u64;
    for i in (1..=degree).rev() {
        carry ^= (coeffs >> i) & 1;
        q |= carry << (i - 1);
    }
    debug_assert_eq!(carry, coeffs & 1);
    Some(q)
}

/// Largest `e` with `(X + 1)^e | f`.
pub fn x_plus_one_multiplicity(f: &SelfDualPoly) -> u32 {
    let mut coeffs = f.coeffs;
    let mut degree = f.degree;
    let mut e = 0;
    while let Some(q) = divide_by_x_plus_one(coeffs, degree) {
        coeffs = q;
        degree -= 1;
        e += 1;
    }
    e
}

/// Which computation produced a census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusPath {
    Enumeration,
    ClosedForm,
}

impl fmt::Display for CensusPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusPath::Enumeration => "enumeration",
            CensusPath::ClosedForm => "closed form",
        })
    }
}

/// Number of semisimple classes of `Sp_2n(2)` for each `m`, where `2m` is the
/// multiplicity of the eigenvalue 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCensus {
    pub n: u64,
    pub counts: BTreeMap<u64, u64>,
    pub path: CensusPath,
}

impl ClassCensus {
    /// `2^(n-m-1)` classes for `m < n`, and the single central class for `m = n`.
    pub fn closed_form(n: u64) -> Result<Self> {
        if !(2..=62).contains(&n) {
            return Err(Error::OutOfRange { what: "census rank n", value: n });
        }
        let mut counts: BTreeMap<u64, u64> = (0..n).map(|m| (m, 1u64 << (n - m - 1))).collect();
        counts.insert(n, 1);
        Ok(ClassCensus { n, counts, path: CensusPath::ClosedForm })
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Same counts regardless of the path that produced them.
    pub fn same_counts(&self, other: &ClassCensus) -> bool {
        self.n == other.n && self.counts == other.counts
    }
}

/// Census by exhausting the `2^n` self-dual polynomials of degree `2n`.
pub fn semisimple_class_census(n: u64) -> Result<ClassCensus> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "census rank n (need n >= 2)", value: n });
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::OutOfRange { what: "census rank n for enumeration", value: n });
    }
    let mut counts = BTreeMap::new();
    for f in enumerate_selfdual(n as u32) {
        let e = x_plus_one_multiplicity(&f);
        debug_assert!(e % 2 == 0);
        *counts.entry(e as u64 / 2).or_insert(0) += 1;
    }
    Ok(ClassCensus { n, counts, path: CensusPath::Enumeration })
}

/// Odd-degree unipotent characters of `Sp_2m(2) × C` for a product `C` of
/// general linear groups.
///
/// The `Sp_2m(2)` factor contributes 5 for `m >= 2` (see
/// [`crate::symbol::odd_degree_symbols`]) and 1 for `m <= 1`. The linear
/// factors contribute only their trivial character; that fact about type A
/// unipotent degrees is taken as given here.
pub fn unipotent_odd_count_for_centralizer(m: u64) -> u64 {
    if m >= 2 {
        5
    } else {
        1
    }
}

/// One row of the census table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub m: u64,
    pub class_count: u64,
    pub odd_unipotent_count: u64,
    pub contribution: u64,
}

pub fn census_rows(census: &ClassCensus) -> Vec<CensusRow> {
    census
        .counts
        .iter()
        .map(|(&m, &class_count)| {
            let odd = unipotent_odd_count_for_centralizer(m);
            CensusRow { m, class_count, odd_unipotent_count: odd, contribution: class_count * odd }
        })
        .collect()
}

/// `Σ_m counts[m] · unipotent_odd_count_for_centralizer(m)`.
pub fn odd_irr_count_from(census: &ClassCensus) -> u64 {
    census_rows(census).iter().map(|r| r.contribution).sum()
}

/// Number of odd-degree irreducible characters of `Sp_2n(2)`, from the
/// closed-form census.
pub fn odd_irr_count(n: u64) -> Result<u64> {
    Ok(odd_irr_count_from(&ClassCensus::closed_form(n)?))
}
