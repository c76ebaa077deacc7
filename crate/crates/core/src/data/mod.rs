//! Dataset contract, ingestion, normalization, and synthetic generators.
//!
//! A [`Dataset`] is an `n x T x d` feature tensor with binary labels. `T = 1`
//! is the common tabular case; `T > 1` carries ordered timesteps. No public
//! labeled credit-risk corpus ships with this crate: the CSV contract and the
//! generators in [`synth`] stand in for proprietary data.

mod loader;
mod normalize;
mod synth;

pub use loader::{load_csv, save_csv};
pub use normalize::{fit_normalizer, Normalizer};
pub use synth::{sequence_step_weights, synth_sequence, synth_tabular, TabularSpec};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Rng;

/// Feature tensor (samples x timesteps x features) with {0,1} labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    timesteps: usize,
    features: usize,
    /// Row-major: sample-major, then timestep, then feature.
    data: Vec<f64>,
    labels: Vec<u8>,
    feature_names: Vec<String>,
    provenance: String,
}

impl Dataset {
    pub fn new(
        timesteps: usize,
        features: usize,
        data: Vec<f64>,
        labels: Vec<u8>,
        feature_names: Vec<String>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        if timesteps == 0 || features == 0 {
            return Err(Error::domain("dataset needs timesteps >= 1 and features >= 1"));
        }
        if labels.is_empty() {
            return Err(Error::domain("dataset needs at least one sample"));
        }
        if data.len() != labels.len() * timesteps * features {
            return Err(Error::shape(
                "Dataset::new",
                format!("{} samples x {timesteps} x {features}", labels.len()),
                format!("{} values", data.len()),
            ));
        }
        if feature_names.len() != features {
            return Err(Error::shape(
                "Dataset::new",
                format!("{features} features"),
                format!("{} names", feature_names.len()),
            ));
        }
        if let Some(bad) = labels.iter().position(|&l| l > 1) {
            return Err(Error::domain(format!(
                "label at sample {bad} is {}, expected 0 or 1",
                labels[bad]
            )));
        }
        if let Some(bad) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::domain(format!(
                "non-finite feature value at flat index {bad}"
            )));
        }
        Ok(Dataset {
            timesteps,
            features,
            data,
            labels,
            feature_names,
            provenance: provenance.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn timesteps(&self) -> usize {
        self.timesteps
    }

    pub fn features(&self) -> usize {
        self.features
    }

    /// Features per sample once the time axis is flattened.
    pub fn flat_features(&self) -> usize {
        self.timesteps * self.features
    }

    /// Full `T*d` feature slice of one sample.
    pub fn sample(&self, i: usize) -> &[f64] {
        let w = self.flat_features();
        &self.data[i * w..(i + 1) * w]
    }

    /// The `d` features of sample `i` at timestep `t`.
    pub fn step(&self, i: usize, t: usize) -> &[f64] {
        let w = self.flat_features();
        let base = i * w + t * self.features;
        &self.data[base..base + self.features]
    }

    pub fn label(&self, i: usize) -> u8 {
        self.labels[i]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn labels_f64(&self) -> Vec<f64> {
        self.labels.iter().map(|&l| l as f64).collect()
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn positive_fraction(&self) -> f64 {
        self.labels.iter().filter(|&&l| l == 1).count() as f64 / self.labels.len() as f64
    }

    /// Gather the given sample indices into a new dataset (fold extraction).
    pub fn subset(&self, idx: &[usize]) -> Result<Dataset> {
        if idx.is_empty() {
            return Err(Error::domain("subset needs at least one index"));
        }
        let mut data = Vec::with_capacity(idx.len() * self.flat_features());
        let mut labels = Vec::with_capacity(idx.len());
        for &i in idx {
            if i >= self.len() {
                return Err(Error::usage(format!("subset index {i} out of range")));
            }
            data.extend_from_slice(self.sample(i));
            labels.push(self.labels[i]);
        }
        Dataset::new(
            self.timesteps,
            self.features,
            data,
            labels,
            self.feature_names.clone(),
            self.provenance.clone(),
        )
    }

    /// Independent per-sample random permutation of the timestep blocks.
    /// Destroys time ordering while preserving every per-step feature vector.
    pub fn shuffle_timesteps(&self, seed: u64) -> Dataset {
        let mut rng = Rng::new(seed);
        let mut out = self.clone();
        let w = self.flat_features();
        for i in 0..self.len() {
            let mut order: Vec<usize> = (0..self.timesteps).collect();
            rng.shuffle(&mut order);
            for (t_new, &t_old) in order.iter().enumerate() {
                let src = i * w + t_old * self.features;
                let dst = i * w + t_new * self.features;
                for f in 0..self.features {
                    out.data[dst + f] = self.data[src + f];
                }
            }
        }
        out.provenance = format!("{} (timestep-shuffled)", self.provenance);
        out
    }

    /// Dataset summary as a JSON object (n, T, d, class balance).
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "risklab.dataset_summary.v1",
            "n": self.len(),
            "timesteps": self.timesteps,
            "features": self.features,
            "positive_fraction": self.positive_fraction(),
            "provenance": self.provenance,
        })
    }
}

/// Engineered column produced by the econometrics layer.
#[derive(Debug, Clone)]
pub struct EconFeature {
    pub name: String,
    pub kind: EconFeatureKind,
    /// One value per sample; broadcast across timesteps.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EconFeatureKind {
    Beta,
    VarResidual,
}

impl EconFeatureKind {
    pub fn suffix(&self) -> &'static str {
        match self {
            EconFeatureKind::Beta => "beta",
            EconFeatureKind::VarResidual => "var_resid",
        }
    }
}

/// Append engineered per-sample columns; names get a `:beta` / `:var_resid`
/// suffix. An empty slice returns the dataset unchanged.
pub fn augment_with_econ_features(ds: &Dataset, feats: &[EconFeature]) -> Result<Dataset> {
    if feats.is_empty() {
        return Ok(ds.clone());
    }
    for f in feats {
        if f.values.len() != ds.len() {
            return Err(Error::shape(
                "augment_with_econ_features",
                format!("{} samples", ds.len()),
                format!("column `{}` has {} values", f.name, f.values.len()),
            ));
        }
    }
    let d_new = ds.features + feats.len();
    let mut data = Vec::with_capacity(ds.len() * ds.timesteps * d_new);
    for i in 0..ds.len() {
        for t in 0..ds.timesteps {
            data.extend_from_slice(ds.step(i, t));
            for f in feats {
                data.push(f.values[i]);
            }
        }
    }
    let mut names = ds.feature_names.clone();
    for f in feats {
        names.push(format!("{}:{}", f.name, f.kind.suffix()));
    }
    Dataset::new(
        ds.timesteps,
        d_new,
        data,
        ds.labels.clone(),
        names,
        format!("{} + econ features", ds.provenance),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Dataset {
        Dataset::new(
            2,
            2,
            vec![
                1.0, 2.0, 3.0, 4.0, // sample 0: t0=(1,2) t1=(3,4)
                5.0, 6.0, 7.0, 8.0,
            ],
            vec![0, 1],
            vec!["a".into(), "b".into()],
            "test",
        )
        .unwrap()
    }

    #[test]
    fn step_layout_is_time_major() {
        let ds = tiny();
        assert_eq!(ds.step(0, 0), &[1.0, 2.0]);
        assert_eq!(ds.step(0, 1), &[3.0, 4.0]);
        assert_eq!(ds.step(1, 0), &[5.0, 6.0]);
    }

    #[test]
    fn rejects_bad_labels_and_nan() {
        let bad_label = Dataset::new(
            1,
            1,
            vec![0.0, 1.0],
            vec![0, 2],
            vec!["a".into()],
            "t",
        );
        assert!(bad_label.is_err());
        let bad_value = Dataset::new(1, 1, vec![f64::NAN], vec![0], vec!["a".into()], "t");
        assert!(bad_value.is_err());
    }

    #[test]
    fn augment_empty_is_identity() {
        let ds = tiny();
        let out = augment_with_econ_features(&ds, &[]).unwrap();
        assert_eq!(out, ds);
    }

    #[test]
    fn augment_grows_feature_count_and_appends_values() {
        let ds = tiny();
        let feats = vec![
            EconFeature {
                name: "mkt".into(),
                kind: EconFeatureKind::Beta,
                values: vec![0.5, -0.5],
            },
            EconFeature {
                name: "gdp".into(),
                kind: EconFeatureKind::VarResidual,
                values: vec![9.0, 10.0],
            },
        ];
        let out = augment_with_econ_features(&ds, &feats).unwrap();
        assert_eq!(out.features(), ds.features() + 2);
        assert_eq!(out.feature_names()[2], "mkt:beta");
        assert_eq!(out.feature_names()[3], "gdp:var_resid");
        // broadcast across both timesteps, elementwise equal to the inputs
        assert_eq!(out.step(0, 0), &[1.0, 2.0, 0.5, 9.0]);
        assert_eq!(out.step(0, 1), &[3.0, 4.0, 0.5, 9.0]);
        assert_eq!(out.step(1, 1), &[7.0, 8.0, -0.5, 10.0]);
    }

    #[test]
    fn augment_length_mismatch_is_shape_error() {
        let ds = tiny();
        let feats = vec![EconFeature {
            name: "x".into(),
            kind: EconFeatureKind::Beta,
            values: vec![1.0],
        }];
        assert!(augment_with_econ_features(&ds, &feats).is_err());
    }

    #[test]
    fn timestep_shuffle_preserves_step_vectors() {
        let ds = tiny();
        let sh = ds.shuffle_timesteps(99);
        for i in 0..ds.len() {
            let mut orig: Vec<Vec<f64>> = (0..2).map(|t| ds.step(i, t).to_vec()).collect();
            let mut got: Vec<Vec<f64>> = (0..2).map(|t| sh.step(i, t).to_vec()).collect();
            orig.sort_by(|a, b| a.partial_cmp(b).unwrap());
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert_eq!(orig, got);
        }
    }
}
