//! Minimal dense linear algebra, activations, and seeded randomness.

mod activations;
mod matrix;
mod rng;

pub use activations::{activation, activation_grad, sigmoid, Activation};
pub use matrix::{dot, Matrix};
pub use rng::{init_weights, Rng};
