//! Exact decision procedures for morphisms of affine varieties over the rationals.
//!
//! An affine variety `X` is handled through its coordinate ring
//! `QQ[u1..un]/I`, and a dominant morphism `Y -> X` through the ring extension
//! `k[X] -> k[Y]` it induces. The crate decides, with exact arithmetic only:
//!
//! * ideal and radical membership, elimination, kernels of ring maps
//!   ([`ideal`]);
//! * extension, integrality, generic degree and birationality of a morphism
//!   ([`algebra`]);
//! * membership in the saturation `A^_B = { b : b⊗1 - 1⊗b nilpotent in B⊗_A B }`
//!   and radiciality ([`saturation`]);
//! * subintegrality, seminormality status, isomorphism and continuity of
//!   rational functions, gathered by [`classify::classify`].
//!
//! Everything here is `no_std` with `alloc`; parsing of scripts, reports and
//! the command line live in the companion `satura` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod classify;
mod error;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod saturation;

pub use crate::algebra::{AffineAlgebra, AlgebraMorphism};
pub use crate::classify::{classify, ClassificationReport, SeminormalStatus};
pub use crate::error::{Error, Result};
pub use crate::groebner::{GbConfig, GroebnerBasis, PairStrategy};
pub use crate::ideal::Ideal;
pub use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};
pub use crate::saturation::{SaturationCertificate, ScanReport, TensorSquare};
