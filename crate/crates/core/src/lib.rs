//! Explicit finite presentations of Sylow p-subgroups of rank-2 Chevalley
//! groups over finite fields and of the positive unipotent subgroup `U₊` of
//! untwisted affine Kac-Moody groups, together with the machinery to check
//! them: matrix models over `F_q`, brute-force closure, Frattini quotients,
//! and Todd-Coxeter coset enumeration.
//!
//! The crate is organized bottom-up:
//!
//! * [`ffield`]: arithmetic in `F_{p^a}` with the power basis `1, x, …, x^{a-1}`.
//! * [`rootsys`]: finite and affine Dynkin diagrams, rank-2 pair types.
//! * [`presentations`]: generator/relator builders and relation counting.
//! * [`verify`]: matrix models, word evaluation, closure, coset enumeration.
//! * [`cover`]: three-part covers of rank ≥ 6 Dynkin diagrams.

pub mod cover;
pub mod error;
pub mod ffield;
pub mod linalg;
pub mod presentations;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
