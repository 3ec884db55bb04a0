//! Local-side analysis for `Sp_4(q)`, `q = 2^m ≥ 4`.
//!
//! For a prime `ℓ` with `q` of order `e ∈ {1, 2, 4}` modulo `ℓ`, the local
//! group is `N = T ⋊ C_W(w_e)` with `T = Z² / (q w_e - 1) Z²`. The graph
//! automorphism acts through the lattice map `ψ` (`φ`, or `s₁φ` when
//! `e = 4`). Fixed characters are counted twice: as fixed classes of `ψ^a`
//! on `N`, and orbit by orbit over `Irr(T)`.
//!
//! ```
//! use mckay_core::sp4::analyze;
//!
//! let report = analyze(4, 17).unwrap();
//! assert_eq!(report.e, 4);
//! assert_eq!(report.local_order, 68);
//! assert_eq!(report.class_count, 8);
//! ```

mod local;
mod torus;
mod weyl;

use std::collections::BTreeMap;

use serde::Serialize;

pub use local::{
    build_local_group, orbit_summary, unipotent_side_summary, weyl_irr_count, LocalElem, LocalGroup,
    LocalOps, ThetaOrbit, UnipotentSummary, LOCAL_CAP,
};
pub use torus::{
    check_q, expected_torus_order, order_of_q_mod_ell, torus_structure, TorusMap, TorusModel,
};
pub use weyl::{
    classes_of, coxeter_data, graph_map, relative_weyl, weyl_fixed_classes, weyl_fixed_irr, GraphMap,
    IntMat2, WeylConvention, WEYL_ORDER,
};

use crate::error::Result;
use crate::group::DIXON_CAP;

/// Fixed-character counts for one power `a` of the twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedRow {
    pub a: u32,
    pub brauer: u64,
    pub predicted: u64,
    pub weyl_fixed: u64,
}

/// Dixon degrees of `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub degrees: Vec<u64>,
    pub sum_of_squares: u64,
}

/// Everything computed for one `(q, e)`.
#[derive(Clone, Debug, Serialize)]
pub struct Sp4Analysis {
    pub q: u64,
    pub e: u32,
    pub invariant_factors: [u64; 2],
    pub torus_order: u64,
    pub expected_torus_order: u64,
    pub local_order: u64,
    /// Nontrivial `θ`-orbit counts keyed by stabilizer order.
    pub orbits: BTreeMap<usize, usize>,
    pub stabilizer_dichotomy: bool,
    pub predicted_irr: u64,
    pub class_count: u64,
    /// `None` when `|N|` exceeds the Dixon cap.
    pub dixon: Option<DegreeSummary>,
    pub fixed: Vec<FixedRow>,
}

/// Analysis for the prime `ell`; the twist powers run over `a = 1..=2m`.
pub fn analyze(q: u64, ell: u64) -> Result<Sp4Analysis> {
    let e = order_of_q_mod_ell(q, ell)?;
    let m = check_q(q)?;
    analyze_e(&WeylConvention::standard(), q, e, 1..=2 * m)
}

/// Analysis for `(q, e)` under a given convention and range of twist powers.
pub fn analyze_e(
    conv: &WeylConvention,
    q: u64,
    e: u32,
    powers: impl IntoIterator<Item = u32>,
) -> Result<Sp4Analysis> {
    let n = LocalGroup::new(conv, q, e)?;
    let census = n.theta_census();
    let classes = n.group.conjugacy_classes()?;
    let dixon = if n.order() <= DIXON_CAP {
        let degrees = n.group.dixon_degrees()?;
        let sum_of_squares = degrees.iter().map(|d| d * d).sum();
        Some(DegreeSummary { degrees, sum_of_squares })
    } else {
        None
    };
    let mut fixed = Vec::new();
    for a in powers {
        fixed.push(FixedRow {
            a,
            brauer: n.group.fixed_class_count(&classes, n.sigma(a)?)? as u64,
            predicted: n.predicted_fixed_count(a)?,
            weyl_fixed: weyl_fixed_irr(e, a)?,
        });
    }
    Ok(Sp4Analysis {
        q,
        e,
        invariant_factors: n.torus.invariant_factors,
        torus_order: n.torus.order(),
        expected_torus_order: expected_torus_order(q, e)?,
        local_order: n.order() as u64,
        orbits: orbit_summary(&census),
        stabilizer_dichotomy: n.stabilizer_dichotomy_holds(),
        predicted_irr: census.iter().map(|o| o.stabilizer_irr).sum(),
        class_count: classes.len() as u64,
        dixon,
        fixed,
    })
}
