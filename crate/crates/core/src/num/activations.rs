use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Activation {
    Sigmoid,
    Tanh,
}

/// Numerically stable logistic function; no overflow for any finite input.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Checked activation evaluation. Rejects non-finite inputs.
pub fn activation(x: f64, kind: Activation) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("activation input must be finite, got {x}")));
    }
    Ok(match kind {
        Activation::Sigmoid => sigmoid(x),
        Activation::Tanh => x.tanh(),
    })
}

/// Derivative expressed through the activation *output* `y`:
/// sigmoid → y(1−y), tanh → 1−y².
pub fn activation_grad(y: f64, kind: Activation) -> Result<f64> {
    if !y.is_finite() {
        return Err(Error::domain(format!("activation output must be finite, got {y}")));
    }
    Ok(match kind {
        Activation::Sigmoid => y * (1.0 - y),
        Activation::Tanh => 1.0 - y * y,
    })
}
