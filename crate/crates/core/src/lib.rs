//! Hyponormality of Bergman-space Toeplitz operators with symbols
//! `z^n |z|^{2s} + a zbar^m |z|^{2t}`, and the spectrum of the self-commutator of
//! `T_{z^m zbar^n}`.
//!
//! Everything that decides a yes/no answer runs in exact rational arithmetic.
//! Floating point is used only to find candidate vectors, which are then
//! rounded and re-checked exactly.

pub mod cli;
pub mod commutator;
pub mod error;
pub mod hypotest;
pub mod numerics;
pub mod sequences;

pub use error::{Error, Result};
