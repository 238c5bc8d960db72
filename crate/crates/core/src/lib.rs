//! Exact construction and verification of Lie brackets on `n` copies of a
//! Lie algebra defined by three-index W-tensors.
//!
//! `([x, y]_W)_s = sum_{i,j} W^{ij}_s [x_i, y_j]`
//!
//! The crate covers the structure-constant layer ([`algebra`]), W-tensor
//! families and their induced brackets ([`wtensor`]), the circulant
//! spectrum and canonical-form detectors ([`spectral`]), the block-circulant
//! matrix realization ([`matrix_bundle`]) and Lie–Poisson brackets
//! ([`poisson`]). All identity checks run over exact rationals; floating
//! point only appears in [`spectral`].

pub mod algebra;
pub mod error;
pub mod formats;
pub mod linalg;
pub mod matrix_bundle;
pub mod poisson;
pub mod rational;
pub mod sampling;
pub mod spectral;
pub mod wtensor;

pub use error::{Error, Result};
pub use rational::Rational;
