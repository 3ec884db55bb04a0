//! Exact, desk-scale verification of odd-degree character counts for the
//! symplectic groups `Sp_2n(2)` and of the local fixed-character analysis
//! for `Sp_4(2^m)`.
//!
//! The crate is organized bottom-up:
//!
//! * [`linalg`]: packed F₂ matrices, span computations, integer Smith form.
//! * [`symbol`]: type-B symbols, their ranks and the 2-adic valuation of the
//!   attached unipotent degrees.
//! * [`census`]: self-dual polynomials over F₂ and the semisimple class census.
//! * [`sylow`]: the explicit Sylow 2-subgroup `U ≅ Sym_n ⋊ V` and its
//!   abelianization.
//! * [`group`]: a small finite-group engine (closure, classes, normalizers,
//!   fixed classes, Dixon degrees).
//! * [`sp4`]: Weyl group of type B₂, torus models and the local groups
//!   `N = T ⋊ W_e` with their graph-automorphism action.
//!
//! The `book/` directory next to the workspace walks through each part; its
//! code snippets are compiled as doctests of this crate.

pub mod census;
pub mod error;
pub mod group;
pub mod linalg;
pub mod sp4;
pub mod sylow;
pub mod symbol;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    mod symbols {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/sylow.md")]
    mod sylow {}
    #[doc = include_str!("../../../book/src/engine.md")]
    mod engine {}
    #[doc = include_str!("../../../book/src/sp4.md")]
    mod sp4 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
