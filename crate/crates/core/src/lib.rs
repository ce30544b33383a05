//! Exact computation with twisted Drinfel'd doubles of finite groups.
//!
//! The crate builds the double `D^beta(k[G])` of a finite group `G` twisted by a
//! 3-cocycle `beta`, enumerates its simple modules by DPR induction, computes
//! fusion rings, braiding and associator matrices, and checks the axioms of
//! G-Frobenius algebras — all over cyclotomic fields with exact arithmetic.
//!
//! Modules follow the pipeline bottom-up:
//!
//! * [`cyclo`] — rationals, cyclotomic fields `Q(zeta_n)`, prime fields.
//! * [`linalg`] — dense exact matrices over `Q(zeta_n)` and over `F_p`.
//! * [`group`] — finite groups by multiplication table, classes, centralizers.
//! * [`cocycle`] — group cochains in exponent form, transgressions, discrete torsion.
//! * [`algebra`] — structure-constant algebras, twisted group rings, the double.
//! * [`rep`] — modules, character tables, DPR induction, fusion, coherence.
//! * [`gfa`] — G-Frobenius algebras, F-traces, twists, point models.

pub mod algebra;
pub mod cocycle;
pub mod cyclo;
pub mod gfa;
pub mod group;
pub mod linalg;
pub mod rep;

mod error;

pub use error::{Error, Result};
