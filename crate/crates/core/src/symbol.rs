//! Symbols of type B_n and the 2-part of the unipotent character degrees
//! they index.
//!
//! A symbol is a pair of finite sets `(S; T)` of naturals with `0 ∉ S ∩ T`
//! and `|S| - |T|` odd and positive. Its rank is
//!
//! ```text
//! n = Σ S + Σ T - ((|S| + |T| - 1) / 2)²
//! ```
//!
//! Symbols of rank `n` index the unipotent characters of `Sp_2n(q)`. Writing
//! `M = |S| + |T|`, the 2-part of the degree is `2^(φ - δ(M))` where
//!
//! ```text
//! φ(S, T) = |S ∩ T| + Σ_{λ'<λ in S} min(λ, λ') + Σ_{μ'<μ in T} min(μ, μ')
//!         + Σ_{λ ∈ S, μ ∈ T} min(λ, μ)
//! δ(M)    = (M - 1)(2M² - 7M + 15) / 24
//! ```

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced symbol `(S; T)`. Both rows are stored strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol", into = "RawSymbol")]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawSymbol {
    #[serde(rename = "S")]
    top: Vec<u32>,
    #[serde(rename = "T")]
    bottom: Vec<u32>,
}

impl TryFrom<RawSymbol> for Symbol {
    type Error = Error;
    fn try_from(raw: RawSymbol) -> Result<Self> {
        Symbol::new(raw.top, raw.bottom)
    }
}

impl From<Symbol> for RawSymbol {
    fn from(s: Symbol) -> Self {
        RawSymbol { top: s.top, bottom: s.bottom }
    }
}

fn strictly_increasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(Error::MalformedSymbol("rows must be strictly increasing".into()));
        }
        if top.first() == Some(&0) && bottom.first() == Some(&0) {
            return Err(Error::MalformedSymbol("0 lies in both rows".into()));
        }
        if top.len() <= bottom.len() || (top.len() - bottom.len()) % 2 == 0 {
            return Err(Error::MalformedSymbol(format!(
                "defect {} - {} is not odd and positive",
                top.len(),
                bottom.len()
            )));
        }
        let sym = Symbol { top, bottom };
        let k = (sym.entry_count() as u64 - 1) / 2;
        if sym.entry_sum() < k * k {
            return Err(Error::MalformedSymbol("negative rank".into()));
        }
        Ok(sym)
    }

    /// The row `S`.
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// The row `T`.
    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// `M = |S| + |T|`, always odd.
    pub fn entry_count(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn defect(&self) -> usize {
        self.top.len() - self.bottom.len()
    }

    fn entry_sum(&self) -> u64 {
        self.top.iter().chain(&self.bottom).map(|&v| v as u64).sum()
    }

    pub fn rank(&self) -> u64 {
        let k = (self.entry_count() as u64 - 1) / 2;
        self.entry_sum() - k * k
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.top), join(&self.bottom))
    }
}

/// Rank of a symbol; see [`Symbol::rank`].
pub fn rank(sym: &Symbol) -> u64 {
    sym.rank()
}

/// `φ(S, T)`, the exponent of the numerator 2-part.
pub fn phi(sym: &Symbol) -> u64 {
    let pairs_within = |row: &[u32]| -> u64 {
        // Sorted ascending: element i is the minimum in every pair with a later one.
        let len = row.len() as u64;
        row.iter().enumerate().map(|(i, &v)| v as u64 * (len - 1 - i as u64)).sum()
    };
    let top = &sym.top;
    let bottom = &sym.bottom;
    let intersection = top.iter().filter(|v| bottom.binary_search(v).is_ok()).count() as u64;
    let cross: u64 = top
        .iter()
        .flat_map(|&l| bottom.iter().map(move |&m| l.min(m) as u64))
        .sum();
    let total = intersection + pairs_within(top) + pairs_within(bottom) + cross;
    debug_assert!(total < u64::MAX / 2);
    total
}

/// `(m - 1)(2m² - 7m + 15) / 24`, the exponent of the denominator 2-part.
pub fn denominator_exponent(m: u64) -> Result<u64> {
    if m % 2 == 0 {
        return Err(Error::OutOfRange { what: "even entry count", value: m });
    }
    let m = m as u128;
    let num = (m - 1) * (2 * m * m + 15 - 7 * m);
    assert_eq!(num % 24, 0, "denominator exponent must be integral");
    Ok((num / 24) as u64)
}

/// `Σ_{i=1}^{(m-1)/2} i(2m - 4i - 1)`: the value of `φ - |S ∩ T|` for the
/// entry-wise smallest admissible sequence `0, 1, 1, 2, 2, …`.
pub fn merged_sequence_bound(m: u64) -> i128 {
    let m = m as i128;
    (1..=(m - 1) / 2).map(|i| i * (2 * m - 4 * i - 1)).sum()
}

/// `(m - 1)(m - 3) / 4`, a lower bound on the valuation for `m > 3`.
pub fn valuation_lower_bound(m: u64) -> u64 {
    debug_assert!(m % 2 == 1 && m >= 3);
    (m - 1) * (m - 3) / 4
}

/// `φ`, `δ(M)` and the valuation `v₂(χ_Λ(1)) = φ - δ(M)` of one symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationReport {
    pub symbol: Symbol,
    pub phi: u64,
    pub denom_exponent: u64,
    pub valuation: i64,
}

pub fn degree_2_valuation(sym: &Symbol) -> ValuationReport {
    let phi = phi(sym);
    let denom_exponent =
        denominator_exponent(sym.entry_count() as u64).expect("symbols have odd entry count");
    ValuationReport {
        symbol: sym.clone(),
        phi,
        denom_exponent,
        valuation: phi as i64 - denom_exponent as i64,
    }
}

/// All strictly increasing sequences of `len` naturals `>= start` summing to `sum`.
fn increasing_with_sum(len: usize, sum: u64, start: u64, out: &mut Vec<Vec<u32>>) {
    fn go(len: usize, sum: u64, start: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let rest = (len - 1) as u64;
        let mut x = start;
        // x, x+1, ..., x+len-1 is the smallest tail starting at x.
        while x * len as u64 + rest * (rest + 1) / 2 <= sum {
            if len == 1 && x != sum {
                x += 1;
                continue;
            }
            prefix.push(x as u32);
            go(len - 1, sum - x, x + 1, prefix, out);
            prefix.pop();
            x += 1;
        }
    }
    go(len, sum, start, &mut Vec::with_capacity(len), out);
}

/// Every symbol of rank `n`.
///
/// A symbol with `M = 2k + 1` entries has rank at least `k` (its entries are
/// bounded below by `0, 1, 1, 2, 2, …, k, k`), so `M` runs over `1, 3, …, 2n + 1`
/// and, for each `M` and defect, rows are enumerated with the exact entry sum
/// `n + k²`.
pub fn enumerate_symbols(n: u64) -> BTreeSet<Symbol> {
    let mut out = BTreeSet::new();
    for k in 0..=n {
        let m = 2 * k + 1;
        let target = n + k * k;
        for defect in (1..=m).step_by(2) {
            let a = ((m + defect) / 2) as usize;
            let b = ((m - defect) / 2) as usize;
            // Each row is at least 0, 1, 2, ….
            let min_sum = |len: usize| (len * len.saturating_sub(1) / 2) as u64;
            for top_sum in min_sum(a)..=target.saturating_sub(min_sum(b)) {
                let mut tops = Vec::new();
                increasing_with_sum(a, top_sum, 0, &mut tops);
                if tops.is_empty() {
                    continue;
                }
                let mut bottoms = Vec::new();
                increasing_with_sum(b, target - top_sum, 0, &mut bottoms);
                for t in &tops {
                    for s in &bottoms {
                        if let Ok(sym) = Symbol::new(t.clone(), s.clone()) {
                            debug_assert_eq!(sym.rank(), n);
                            out.insert(sym);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Symbols of rank `n` whose unipotent degree is odd, found by filtering
/// [`enumerate_symbols`] on valuation zero.
pub fn odd_degree_symbols(n: u64) -> Result<BTreeSet<Symbol>> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "rank n (need n >= 2)", value: n });
    }
    Ok(enumerate_symbols(n)
        .into_iter()
        .filter(|s| degree_2_valuation(s).valuation == 0)
        .collect())
}

/// The five symbols `(n;)`, `(0,1,n;)`, `(0,1;n)`, `(1,n;0)`, `(0,n;1)`
/// written out directly, for comparison against [`odd_degree_symbols`].
pub fn reference_odd_symbols(n: u64) -> Result<BTreeSet<Symbol>> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "rank n (need n >= 2)", value: n });
    }
    let n = n as u32;
    [
        (vec![n], vec![]),
        (vec![0, 1, n], vec![]),
        (vec![0, 1], vec![n]),
        (vec![1, n], vec![0]),
        (vec![0, n], vec![1]),
    ]
    .into_iter()
    .map(|(s, t)| Symbol::new(s, t))
    .collect()
}

/// Number of bipartitions of `k`, `Σ_i p(i) p(k - i)`.
pub fn bipartition_count(k: u64) -> u64 {
    let k = k as usize;
    let mut p = vec![0u64; k + 1];
    p[0] = 1;
    for part in 1..=k {
        for total in part..=k {
            p[total] += p[total - part];
        }
    }
    (0..=k).map(|i| p[i] * p[k - i]).sum()
}

/// Number of symbols of rank `n`: those of defect `2s + 1` correspond to the
/// bipartitions of `n - s(s + 1)`.
pub fn symbol_count(n: u64) -> u64 {
    (0..).take_while(|s| s * (s + 1) <= n).map(|s| bipartition_count(n - s * (s + 1))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &[u32], t: &[u32]) -> Symbol {
        Symbol::new(s.to_vec(), t.to_vec()).unwrap()
    }

    #[test]
    fn symbol_counts() {
        assert_eq!(bipartition_count(2), 5);
        assert_eq!(bipartition_count(12), 1165);
        assert_eq!(symbol_count(2), 6);
        assert_eq!(symbol_count(3), 12);
        for n in 0..=8 {
            assert_eq!(symbol_count(n), enumerate_symbols(n).len() as u64);
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&sym(&[2], &[])), 2);
        assert_eq!(rank(&sym(&[1], &[])), 1);
        assert_eq!(rank(&sym(&[0, 1, 2], &[1, 2])), 2);
    }

    #[test]
    fn malformed_symbols_rejected() {
        assert!(Symbol::new(vec![0, 1], vec![0]).is_err());
        assert!(Symbol::new(vec![1, 2], vec![3, 4]).is_err());
        assert!(Symbol::new(vec![2, 1], vec![]).is_err());
        assert!(Symbol::new(vec![1, 2], vec![]).is_err());
        assert!(Symbol::new(vec![], vec![]).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&sym(&[7], &[])), 0);
        for n in 2..10 {
            assert_eq!(phi(&sym(&[0, 1, n], &[])), 1);
        }
        assert_eq!(phi(&sym(&[0, 1, 2], &[1, 2])), 9);
    }

    #[test]
    fn denominator_examples() {
        assert_eq!(denominator_exponent(1).unwrap(), 0);
        assert_eq!(denominator_exponent(3).unwrap(), 1);
        assert_eq!(denominator_exponent(5).unwrap(), 5);
        assert_eq!(denominator_exponent(7).unwrap(), 16);
        assert!(denominator_exponent(4).is_err());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(degree_2_valuation(&sym(&[2], &[])).valuation, 0);
        let r = degree_2_valuation(&sym(&[0, 1, 2], &[1, 2]));
        assert_eq!((r.phi, r.denom_exponent, r.valuation), (9, 5, 4));
        let r = degree_2_valuation(&sym(&[1, 2], &[1]));
        assert_eq!(r.symbol.rank(), 3);
        assert_eq!((r.phi, r.valuation), (4, 3));
    }

    #[test]
    fn small_enumerations() {
        let one: Vec<_> = enumerate_symbols(1).into_iter().collect();
        assert_eq!(one, vec![sym(&[0, 1], &[1]), sym(&[1], &[])]);
        assert_eq!(enumerate_symbols(2).len(), 6);
        assert_eq!(enumerate_symbols(3).len(), 12);
    }

    #[test]
    fn odd_symbols_rank_two() {
        let odd = odd_degree_symbols(2).unwrap();
        assert_eq!(odd.len(), 5);
        assert!(!odd.contains(&sym(&[0, 1, 2], &[1, 2])));
        assert_eq!(odd, reference_odd_symbols(2).unwrap());
    }

    #[test]
    fn odd_symbols_larger_ranks() {
        let odd = odd_degree_symbols(5).unwrap();
        assert!(odd.contains(&sym(&[0, 5], &[1])));
        assert_eq!(odd_degree_symbols(12).unwrap().len(), 5);
        assert!(odd_degree_symbols(1).is_err());
    }

    #[test]
    fn denominator_identity() {
        for m in (3..=99u64).step_by(2) {
            let lhs = merged_sequence_bound(m) - denominator_exponent(m).unwrap() as i128;
            assert_eq!(lhs, valuation_lower_bound(m) as i128, "M = {m}");
        }
    }

    #[test]
    fn json_shape() {
        let s = sym(&[0, 1, 5], &[]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"S":[0,1,5],"T":[]}"#);
        let back: Symbol = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Symbol>(r#"{"S":[0,1],"T":[0]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(sym(&[0, 1], &[5]).to_string(), "(0,1;5)");
        assert_eq!(sym(&[5], &[]).to_string(), "(5;)");
    }
}
