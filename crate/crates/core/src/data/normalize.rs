use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::error::{Error, Result};

/// Per-feature, per-timestep z-score statistics, fit on training rows only.
///
/// Features that are constant on the training rows (at any timestep) cannot
/// be scaled; they are dropped from the output and listed in `dropped`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalizer {
    timesteps: usize,
    features_in: usize,
    /// Retained feature indices, ascending.
    kept: Vec<usize>,
    /// Means, laid out timestep-major over the retained features.
    mean: Vec<f64>,
    /// Standard deviations, same layout; all strictly positive.
    sd: Vec<f64>,
    /// Names of dropped (constant) features.
    pub dropped: Vec<String>,
}

const CONSTANT_SD_TOL: f64 = 1e-12;

/// Fit z-score statistics from `train_idx` rows of `ds` (at least 2 rows).
pub fn fit_normalizer(ds: &Dataset, train_idx: &[usize]) -> Result<Normalizer> {
    if train_idx.len() < 2 {
        return Err(Error::domain("normalizer needs at least 2 training rows"));
    }
    let (t_count, f_count) = (ds.timesteps(), ds.features());
    let n = train_idx.len() as f64;

    // Two passes per (t, f) cell: mean, then variance.
    let mut mean_all = vec![0.0; t_count * f_count];
    for &i in train_idx {
        for t in 0..t_count {
            for (f, v) in ds.step(i, t).iter().enumerate() {
                mean_all[t * f_count + f] += v;
            }
        }
    }
    for m in &mut mean_all {
        *m /= n;
    }
    let mut var_all = vec![0.0; t_count * f_count];
    for &i in train_idx {
        for t in 0..t_count {
            for (f, v) in ds.step(i, t).iter().enumerate() {
                let d = v - mean_all[t * f_count + f];
                var_all[t * f_count + f] += d * d;
            }
        }
    }

    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    'feature: for f in 0..f_count {
        for t in 0..t_count {
            let sd = (var_all[t * f_count + f] / (n - 1.0)).sqrt();
            if sd <= CONSTANT_SD_TOL * (1.0 + mean_all[t * f_count + f].abs()) {
                dropped.push(ds.feature_names()[f].clone());
                continue 'feature;
            }
        }
        kept.push(f);
    }
    if kept.is_empty() {
        return Err(Error::domain("every feature is constant; nothing to normalize"));
    }

    let mut mean = Vec::with_capacity(t_count * kept.len());
    let mut sd = Vec::with_capacity(t_count * kept.len());
    for t in 0..t_count {
        for &f in &kept {
            mean.push(mean_all[t * f_count + f]);
            sd.push((var_all[t * f_count + f] / (n - 1.0)).sqrt());
        }
    }
    Ok(Normalizer {
        timesteps: t_count,
        features_in: f_count,
        kept,
        mean,
        sd,
        dropped,
    })
}

impl Normalizer {
    pub fn features_out(&self) -> usize {
        self.kept.len()
    }

    /// Apply the training statistics to any dataset with matching shape.
    pub fn apply(&self, ds: &Dataset) -> Result<Dataset> {
        if ds.timesteps() != self.timesteps || ds.features() != self.features_in {
            return Err(Error::shape(
                "Normalizer::apply",
                format!("{}x{}", self.timesteps, self.features_in),
                format!("{}x{}", ds.timesteps(), ds.features()),
            ));
        }
        let d_out = self.kept.len();
        let mut data = Vec::with_capacity(ds.len() * self.timesteps * d_out);
        for i in 0..ds.len() {
            for t in 0..self.timesteps {
                let step = ds.step(i, t);
                for (k, &f) in self.kept.iter().enumerate() {
                    let idx = t * d_out + k;
                    data.push((step[f] - self.mean[idx]) / self.sd[idx]);
                }
            }
        }
        let names: Vec<String> = self
            .kept
            .iter()
            .map(|&f| ds.feature_names()[f].clone())
            .collect();
        Dataset::new(
            self.timesteps,
            d_out,
            data,
            ds.labels().to_vec(),
            names,
            format!("{} (z-scored)", ds.provenance()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn make(rows: &[(Vec<f64>, u8)]) -> Dataset {
        let d = rows[0].0.len();
        let data: Vec<f64> = rows.iter().flat_map(|(r, _)| r.clone()).collect();
        let labels: Vec<u8> = rows.iter().map(|&(_, l)| l).collect();
        let names = (0..d).map(|i| format!("f{i}")).collect();
        Dataset::new(1, d, data, labels, names, "test").unwrap()
    }

    #[test]
    fn constant_feature_dropped_with_name() {
        let ds = make(&[
            (vec![1.0, 7.0], 0),
            (vec![2.0, 7.0], 1),
            (vec![3.0, 7.0], 0),
        ]);
        let norm = fit_normalizer(&ds, &[0, 1, 2]).unwrap();
        assert_eq!(norm.features_out(), 1);
        assert_eq!(norm.dropped, vec!["f1".to_string()]);
        let out = norm.apply(&ds).unwrap();
        assert_eq!(out.features(), 1);
        assert_eq!(out.feature_names(), &["f0".to_string()]);
    }

    #[test]
    fn train_rows_post_apply_have_zero_mean_unit_sd() {
        let ds = make(&[
            (vec![1.0, -4.0], 0),
            (vec![2.0, 0.0], 1),
            (vec![4.0, 5.0], 0),
            (vec![8.0, 9.0], 1),
        ]);
        let norm = fit_normalizer(&ds, &[0, 1, 2, 3]).unwrap();
        let out = norm.apply(&ds).unwrap();
        for f in 0..2 {
            let col: Vec<f64> = (0..4).map(|i| out.sample(i)[f]).collect();
            let mean = col.iter().sum::<f64>() / 4.0;
            let var = col.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / 3.0;
            assert!(mean.abs() < 1e-10, "mean {mean}");
            assert!((var - 1.0).abs() < 1e-10, "var {var}");
        }
    }

    #[test]
    fn test_rows_transformed_with_train_statistics_only() {
        // Train stats: mean 2, sd 1 (hand computation on {1,2,3}).
        let ds = make(&[
            (vec![1.0], 0),
            (vec![2.0], 1),
            (vec![3.0], 0),
            (vec![10.0], 1), // test row
        ]);
        let norm = fit_normalizer(&ds, &[0, 1, 2]).unwrap();
        let out = norm.apply(&ds).unwrap();
        assert!((out.sample(3)[0] - 8.0).abs() < 1e-12, "(10-2)/1 = 8");
    }

    #[test]
    fn changing_test_rows_never_changes_the_normalizer() {
        let base = vec![
            (vec![1.0, 2.0], 0),
            (vec![2.0, 1.0], 1),
            (vec![3.0, 5.0], 0),
        ];
        let mut with_a = base.clone();
        with_a.push((vec![100.0, -100.0], 1));
        let mut with_b = base.clone();
        with_b.push((vec![-3.0, 12.0], 0));
        let norm_a = fit_normalizer(&make(&with_a), &[0, 1, 2]).unwrap();
        let norm_b = fit_normalizer(&make(&with_b), &[0, 1, 2]).unwrap();
        assert_eq!(norm_a, norm_b);
    }

    #[test]
    fn too_few_rows_rejected() {
        let ds = make(&[(vec![1.0], 0), (vec![2.0], 1)]);
        assert!(fit_normalizer(&ds, &[0]).is_err());
    }
}
