use serde::{Deserialize, Serialize};

use crate::num::{init_weights, Matrix, Rng};

/// Weights of one gate: input projection `w` (hidden x input), recurrent
/// projection `u` (hidden x hidden), and bias `b` (hidden).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateBlock {
    pub w: Matrix,
    pub u: Matrix,
    pub b: Vec<f64>,
}

impl GateBlock {
    fn glorot(hidden: usize, input: usize, rng: &mut Rng) -> Self {
        GateBlock {
            w: init_weights(hidden, input, rng),
            u: init_weights(hidden, hidden, rng),
            b: vec![0.0; hidden],
        }
    }

    fn zeros(hidden: usize, input: usize) -> Self {
        GateBlock {
            w: Matrix::zeros(hidden, input),
            u: Matrix::zeros(hidden, hidden),
            b: vec![0.0; hidden],
        }
    }

    pub fn param_count(&self) -> usize {
        self.w.rows() * self.w.cols() + self.u.rows() * self.u.cols() + self.b.len()
    }
}

/// Parameters of one LSTM layer: four gates of identical shape.
///
/// Biases are included for every gate; without them the per-layer parameter
/// count 4·(h·(h+i) + h) would not hold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LstmLayerParams {
    pub input_dim: usize,
    pub hidden_dim: usize,
    pub input_gate: GateBlock,
    pub forget_gate: GateBlock,
    pub cell_gate: GateBlock,
    pub output_gate: GateBlock,
}

impl LstmLayerParams {
    pub fn glorot(input_dim: usize, hidden_dim: usize, rng: &mut Rng) -> Self {
        LstmLayerParams {
            input_dim,
            hidden_dim,
            input_gate: GateBlock::glorot(hidden_dim, input_dim, rng),
            forget_gate: GateBlock::glorot(hidden_dim, input_dim, rng),
            cell_gate: GateBlock::glorot(hidden_dim, input_dim, rng),
            output_gate: GateBlock::glorot(hidden_dim, input_dim, rng),
        }
    }

    pub fn zeros(input_dim: usize, hidden_dim: usize) -> Self {
        LstmLayerParams {
            input_dim,
            hidden_dim,
            input_gate: GateBlock::zeros(hidden_dim, input_dim),
            forget_gate: GateBlock::zeros(hidden_dim, input_dim),
            cell_gate: GateBlock::zeros(hidden_dim, input_dim),
            output_gate: GateBlock::zeros(hidden_dim, input_dim),
        }
    }

    /// Gates in their canonical order: input, forget, cell, output.
    pub fn gates(&self) -> [&GateBlock; 4] {
        [
            &self.input_gate,
            &self.forget_gate,
            &self.cell_gate,
            &self.output_gate,
        ]
    }

    pub fn gates_mut(&mut self) -> [&mut GateBlock; 4] {
        [
            &mut self.input_gate,
            &mut self.forget_gate,
            &mut self.cell_gate,
            &mut self.output_gate,
        ]
    }

    /// Number of scalar parameters, counted by traversal.
    pub fn param_count(&self) -> usize {
        self.gates().iter().map(|g| g.param_count()).sum()
    }
}

/// Dense sigmoid head mapping the top layer's final hidden state to one
/// probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseHead {
    pub w: Vec<f64>,
    pub b: f64,
}

impl DenseHead {
    pub fn glorot(hidden: usize, rng: &mut Rng) -> Self {
        let m = init_weights(1, hidden, rng);
        DenseHead {
            w: m.data().to_vec(),
            b: 0.0,
        }
    }

    pub fn zeros(hidden: usize) -> Self {
        DenseHead {
            w: vec![0.0; hidden],
            b: 0.0,
        }
    }

    pub fn param_count(&self) -> usize {
        self.w.len() + 1
    }
}
