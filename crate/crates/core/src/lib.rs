//! Construction and exact verification of partial difference sets (PDSs)
//! with Denniston parameters in elementary abelian groups of order `p^{3m}`,
//! `p` an odd prime.
//!
//! The pipeline runs over the field tower `GF(p) ⊂ GF(p^m) ⊂ GF(p^{2m})`:
//!
//! * [`field`] — exact tower arithmetic (discrete logs, Frobenius, traces);
//! * [`quadform`] — the quadratic form `Q(x) = x^{p^m+1}`, its bilinear
//!   polarization, and the quadric PDS `X` cut out by `Tr(Q(x)) = 0`;
//! * [`cyclotomy`] — cyclotomic classes, the trace-zero Singer difference
//!   set, and the cyclotomic reconstruction of `X` and its shifts;
//! * [`pds`] — parameter algebra, the main construction `D` in
//!   `GF(p^m)⁺ × GF(p^{2m})⁺`, and character-theoretic duals;
//! * [`verify`] — independent certification by exhaustive difference
//!   counting, exact character sums over `Z[ζ_p]`, and the strongly
//!   regular graph matrix identity;
//! * [`document`] — JSON persistence with deterministic bytes;
//! * [`graph`] — Cayley graph construction and graph6/edge-list export.
//!
//! Everything is exact integer / finite-field arithmetic; there is no
//! floating point anywhere.

mod arith;
pub mod cyclotomy;
pub mod document;
mod error;
pub mod field;
pub mod graph;
pub mod pds;
pub mod quadform;
pub mod verify;

pub use cyclotomy::{construct_x_cyclo, shift_xk, singer_set, CycClass, IndexSet};
pub use document::{DocElements, PdsDocument, SetKind};
pub use error::Error;
pub use field::{FieldElem, FieldTower, TowerKey, DEFAULT_SIZE_GUARD};
pub use pds::{
    construct_d, denniston_params, dual_params, dual_set, x_params, GroupElem, GroupSet, PdsParams,
};
pub use quadform::{construct_x_quadform, ElementSet};
pub use verify::{CycIntSum, Method, VerificationReport};
