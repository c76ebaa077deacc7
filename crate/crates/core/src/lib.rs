//! Sequence-classification toolkit for credit-risk scoring.
//!
//! Everything is built on `f64` and a seeded ChaCha8 generator, so any run is
//! reproducible from its configuration alone.
//!
//! - `num` — dense matrices, activations, seeded RNG
//! - `data` — dataset contract, CSV ingestion, normalization, synthetic generators
//! - `lstm` — stacked LSTM with a dense sigmoid head
//! - `train` — losses, BPTT, Adam, training loop, k-fold cross-validation
//! - `metrics` — confusion counts, accuracy/precision/recall/F, ROC/AUC, P-R
//! - `econ` — vector autoregression and the CAPM beta coefficient
//! - `baselines` — feed-forward net, logistic regression, random forest,
//!   externally produced score files
//! - `scorer` — the common scoring interface plus the on-disk model container

pub mod baselines;
pub mod data;
pub mod econ;
pub mod error;
pub mod lstm;
pub mod metrics;
pub mod num;
pub mod scorer;
pub mod train;

pub use error::{Error, Result};
