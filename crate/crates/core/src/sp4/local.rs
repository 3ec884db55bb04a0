//! The local group `N = T ⋊ C_W(w_e)`, its twisting automorphism `σ` and the
//! character census over the `C_W(w_e)`-orbits on `Irr(T)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::torus::{TorusMap, TorusModel};
use super::weyl::{check_e, classes_of, weyl_fixed_irr, IntMat2, WeylConvention};
use crate::error::{Error, Result};
use crate::group::{ConcreteGroup, GroupOps};

/// `(t, w)` with `t ∈ T` and `w ∈ C_W(w_e)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LocalElem {
    pub t: [u64; 2],
    pub w: IntMat2,
}

/// `(t, w)(t', w') = (t + w.t', w w')`.
#[derive(Clone, Debug)]
pub struct LocalOps {
    moduli: [u64; 2],
    action: HashMap<IntMat2, TorusMap>,
}

impl LocalOps {
    fn act(&self, w: &IntMat2, t: [u64; 2]) -> [u64; 2] {
        self.action[w].apply(t)
    }

    fn add(&self, a: [u64; 2], b: [u64; 2]) -> [u64; 2] {
        [(a[0] + b[0]) % self.moduli[0], (a[1] + b[1]) % self.moduli[1]]
    }

    fn neg(&self, a: [u64; 2]) -> [u64; 2] {
        [(self.moduli[0] - a[0]) % self.moduli[0], (self.moduli[1] - a[1]) % self.moduli[1]]
    }
}

impl GroupOps for LocalOps {
    type Elem = LocalElem;

    fn identity(&self) -> LocalElem {
        LocalElem { t: [0, 0], w: IntMat2::IDENTITY }
    }
    fn mul(&self, a: &LocalElem, b: &LocalElem) -> LocalElem {
        LocalElem { t: self.add(a.t, self.act(&a.w, b.t)), w: a.w.mul(&b.w) }
    }
    fn inv(&self, a: &LocalElem) -> LocalElem {
        let w_inv = a.w.signed_perm_inverse();
        LocalElem { t: self.neg(self.act(&w_inv, a.t)), w: w_inv }
    }
}

/// `N = T ⋊ C_W(w_e)` together with the data defining `σ`.
#[derive(Clone, Debug)]
pub struct LocalGroup {
    pub convention: WeylConvention,
    pub torus: TorusModel,
    pub weyl: Vec<IntMat2>,
    pub group: ConcreteGroup<LocalOps>,
    psi: IntMat2,
    psi_torus: TorusMap,
    weyl_action: HashMap<IntMat2, TorusMap>,
}

/// Largest `|N|` built explicitly.
pub const LOCAL_CAP: usize = 50_000;

impl LocalGroup {
    pub fn new(conv: &WeylConvention, q: u64, e: u32) -> Result<Self> {
        conv.validate()?;
        let torus = TorusModel::new(conv, q, e)?;
        let weyl = conv.relative_weyl(e)?;
        let mut action = HashMap::new();
        for w in &weyl {
            action.insert(*w, torus.transport(w)?);
        }
        let psi = conv.twist(e)?;
        let psi_torus = torus.transport(&psi)?;
        let ops = LocalOps { moduli: torus.invariant_factors, action: action.clone() };
        let mut gens: Vec<LocalElem> =
            torus.generators().into_iter().map(|t| LocalElem { t, w: IntMat2::IDENTITY }).collect();
        gens.extend(conv.relative_weyl_generators(e)?.into_iter().map(|w| LocalElem { t: [0, 0], w }));
        let group = ConcreteGroup::generate(ops, gens, LOCAL_CAP)?;
        let expected = torus.order() as usize * weyl.len();
        if group.order() != expected {
            return Err(Error::Inconsistent(format!(
                "local group has order {}, expected {expected}",
                group.order()
            )));
        }
        Ok(LocalGroup { convention: *conv, torus, weyl, group, psi, psi_torus, weyl_action: action })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn e(&self) -> u32 {
        self.torus.e
    }

    /// `σ = ψ^a` on `N`: `(t, w) ↦ (ψ^a t, ψ^a w ψ^{-a})`.
    pub fn sigma(&self, a: u32) -> Result<impl Fn(&LocalElem) -> LocalElem + '_> {
        let on_torus = self.psi_torus.pow(a);
        let psi_a = self.psi.pow(a);
        let mut on_weyl = HashMap::new();
        for w in &self.weyl {
            let image = self.convention.conjugate_by(&psi_a, w)?;
            if !self.weyl.contains(&image) {
                return Err(Error::NotAutomorphism(format!("twist moves {w} out of C_W(w_e)")));
            }
            on_weyl.insert(*w, image);
        }
        Ok(move |x: &LocalElem| LocalElem { t: on_torus.apply(x.t), w: on_weyl[&x.w] })
    }

    /// Number of `σ`-fixed irreducible characters of `N`, counted as
    /// `σ`-fixed conjugacy classes.
    pub fn fixed_irr_count(&self, a: u32) -> Result<u64> {
        let classes = self.group.conjugacy_classes()?;
        Ok(self.group.fixed_class_count(&classes, self.sigma(a)?)? as u64)
    }

    /// Orbits of `C_W(w_e)` on `Irr(T)`.
    pub fn theta_census(&self) -> Vec<ThetaOrbit> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for chi in self.torus.elements() {
            if seen.contains(&chi) {
                continue;
            }
            let orbit: BTreeSet<[u64; 2]> =
                self.weyl.iter().map(|w| self.weyl_action[w].pullback(chi)).collect();
            let stabilizer: Vec<IntMat2> =
                self.weyl.iter().copied().filter(|w| self.weyl_action[w].pullback(chi) == chi).collect();
            seen.extend(orbit.iter().copied());
            out.push(ThetaOrbit {
                representative: chi,
                size: orbit.len(),
                stabilizer_order: stabilizer.len(),
                stabilizer_irr: classes_of(&stabilizer).len() as u64,
                members: orbit,
            });
        }
        out
    }

    /// `Σ |Irr(stabilizer)|` over the orbits.
    pub fn predicted_irr_count(&self) -> u64 {
        self.theta_census().iter().map(|o| o.stabilizer_irr).sum()
    }

    /// Fixed characters predicted orbit by orbit: only `σ`-stable orbits
    /// contribute, the trivial one with the fixed characters of `C_W(w_e)`,
    /// a regular one with 1 and one with stabilizer of order 2 with 2.
    pub fn predicted_fixed_count(&self, a: u32) -> Result<u64> {
        let sigma = self.psi_torus.pow(a);
        let mut total = 0;
        for orbit in self.theta_census() {
            if !orbit.members.contains(&sigma.pullback(orbit.representative)) {
                continue;
            }
            total += match (orbit.is_trivial(), orbit.stabilizer_order) {
                (true, _) => weyl_fixed_irr(self.e(), a)?,
                (false, 1) => 1,
                (false, 2) => 2,
                (false, s) => {
                    return Err(Error::Inconsistent(format!("unexpected stabilizer order {s}")))
                }
            };
        }
        Ok(total)
    }

    /// Nontrivial characters have stabilizer of order at most 2, and
    /// trivial stabilizer when `e = 4`.
    pub fn stabilizer_dichotomy_holds(&self) -> bool {
        let bound = if self.e() == 4 { 1 } else { 2 };
        self.theta_census().iter().filter(|o| !o.is_trivial()).all(|o| o.stabilizer_order <= bound)
    }
}

/// One orbit of `C_W(w_e)` on `Irr(T)`.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaOrbit {
    pub representative: [u64; 2],
    pub size: usize,
    pub stabilizer_order: usize,
    pub stabilizer_irr: u64,
    #[serde(skip)]
    pub members: BTreeSet<[u64; 2]>,
}

impl ThetaOrbit {
    pub fn is_trivial(&self) -> bool {
        self.representative == [0, 0]
    }
}

/// Orbit counts keyed by stabilizer order.
pub fn orbit_summary(orbits: &[ThetaOrbit]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for o in orbits.iter().filter(|o| !o.is_trivial()) {
        *out.entry(o.stabilizer_order).or_insert(0) += 1;
    }
    out
}

/// `N` in the standard convention.
pub fn build_local_group(q: u64, e: u32) -> Result<LocalGroup> {
    LocalGroup::new(&WeylConvention::standard(), q, e)
}

/// Unipotent characters moved by `σ`, per `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnipotentSummary {
    pub e1: u64,
    pub e2: u64,
    pub e4: u64,
}

/// Two unipotent characters of equal degree are swapped by odd powers of
/// the graph map; they have degree prime to `ℓ` only for `e = 1, 2`.
pub fn unipotent_side_summary(a: u32) -> UnipotentSummary {
    let moved = if a % 2 == 1 { 2 } else { 0 };
    UnipotentSummary { e1: moved, e2: moved, e4: 0 }
}

/// `|Irr(C_W(w_e))|`.
pub fn weyl_irr_count(e: u32) -> Result<u64> {
    check_e(e)?;
    Ok(if e == 4 { 4 } else { 5 })
}
