//! Exact rational scalars and sparse formal linear combinations.
//!
//! Everything algebraic in this crate is computed over ℚ, so two sides of an
//! identity are either equal or they are not; no tolerances are involved.

mod lincomb;
mod matrix;
mod rational;

pub use lincomb::{
    add, apply_linear, scale, tensor, tensor_labels, BasisLabel, LinComb, TensorKey, UndefinedLabel,
};
pub use matrix::rank;
pub use rational::{ParseRationalError, Rational};
