use crate::data::Dataset;
use crate::num::Rng;

/// Parameters for the two-cluster tabular generator.
#[derive(Debug, Clone)]
pub struct TabularSpec {
    pub n: usize,
    pub features: usize,
    /// Distance between the class centroids along a random direction.
    pub separation: f64,
    pub positive_fraction: f64,
    pub seed: u64,
}

/// Two Gaussian clusters at ±separation/2 along a seeded random unit
/// direction, labels by cluster, `T = 1`. Class balance is exact:
/// `round(n * positive_fraction)` positives, positions shuffled.
pub fn synth_tabular(spec: &TabularSpec) -> Dataset {
    assert!(spec.n >= 2 && spec.features >= 1);
    assert!((0.0..=1.0).contains(&spec.positive_fraction));
    let mut rng = Rng::new(spec.seed);
    let d = spec.features;

    let mut direction: Vec<f64> = (0..d).map(|_| rng.normal()).collect();
    let norm = direction.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-12);
    for v in &mut direction {
        *v /= norm;
    }

    let n_pos = (spec.n as f64 * spec.positive_fraction).round() as usize;
    let mut labels: Vec<u8> = (0..spec.n).map(|i| u8::from(i < n_pos)).collect();
    rng.shuffle(&mut labels);

    let mut data = Vec::with_capacity(spec.n * d);
    for &label in &labels {
        let offset = if label == 1 { 0.5 } else { -0.5 } * spec.separation;
        for dir in direction.iter().take(d) {
            data.push(rng.normal() + offset * dir);
        }
    }
    let names = (0..d).map(|i| format!("f{i}")).collect();
    Dataset::new(
        1,
        d,
        data,
        labels,
        names,
        format!(
            "synth_tabular(n={}, d={}, separation={}, seed={})",
            spec.n, d, spec.separation, spec.seed
        ),
    )
    .expect("generator produces a valid dataset")
}

/// Per-step weights of the sequence generator: a descending ramp from +1 to
/// −1, distinct at every step and summing to zero. For `T = 2` this is
/// `(1, −1)`, so the label reduces to `step-0 mean > step-1 mean`.
pub fn sequence_step_weights(timesteps: usize) -> Vec<f64> {
    assert!(timesteps >= 2);
    (0..timesteps)
        .map(|t| 1.0 - 2.0 * t as f64 / (timesteps - 1) as f64)
        .collect()
}

/// Order-sensitive sequence dataset: features are i.i.d. standard normal and
/// the label is the sign of the step-weighted sum of per-step feature means.
/// Because the weights are distinct per step and sum to zero, the label is
/// not recoverable once timesteps are shuffled.
pub fn synth_sequence(n: usize, timesteps: usize, features: usize, seed: u64) -> Dataset {
    assert!(n >= 2 && timesteps >= 2 && features >= 1);
    let mut rng = Rng::new(seed);
    let weights = sequence_step_weights(timesteps);

    let mut data = Vec::with_capacity(n * timesteps * features);
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n {
        let start = data.len();
        for _ in 0..timesteps * features {
            data.push(rng.normal());
        }
        let mut score = 0.0;
        for (t, w) in weights.iter().enumerate() {
            let step = &data[start + t * features..start + (t + 1) * features];
            let mean = step.iter().sum::<f64>() / features as f64;
            score += w * mean;
        }
        labels.push(u8::from(score > 0.0));
    }
    let names = (0..features).map(|i| format!("f{i}")).collect();
    Dataset::new(
        timesteps,
        features,
        data,
        labels,
        names,
        format!("synth_sequence(n={n}, T={timesteps}, d={features}, seed={seed})"),
    )
    .expect("generator produces a valid dataset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabular_deterministic_under_seed() {
        let spec = TabularSpec {
            n: 50,
            features: 4,
            separation: 2.0,
            positive_fraction: 0.3,
            seed: 11,
        };
        assert_eq!(synth_tabular(&spec), synth_tabular(&spec));
    }

    #[test]
    fn tabular_class_balance_is_exact() {
        let ds = synth_tabular(&TabularSpec {
            n: 200,
            features: 3,
            separation: 1.0,
            positive_fraction: 0.25,
            seed: 2,
        });
        let pos = ds.labels().iter().filter(|&&l| l == 1).count();
        assert_eq!(pos, 50);
    }

    #[test]
    fn sequence_label_matches_direct_recomputation() {
        let ds = synth_sequence(100, 2, 3, 7);
        // T=2 weights are (1, -1): label = 1 iff step-0 mean > step-1 mean.
        for i in 0..ds.len() {
            let m0 = ds.step(i, 0).iter().sum::<f64>() / 3.0;
            let m1 = ds.step(i, 1).iter().sum::<f64>() / 3.0;
            assert_eq!(ds.label(i), u8::from(m0 > m1), "sample {i}");
        }
    }

    #[test]
    fn sequence_weights_distinct_and_zero_sum() {
        for t in [2, 3, 4, 7] {
            let w = sequence_step_weights(t);
            assert!(w.iter().sum::<f64>().abs() < 1e-12);
            for i in 1..w.len() {
                assert!(w[i] < w[i - 1]);
            }
        }
    }

    #[test]
    fn sequence_deterministic_under_seed() {
        assert_eq!(synth_sequence(30, 4, 5, 9), synth_sequence(30, 4, 5, 9));
    }
}
