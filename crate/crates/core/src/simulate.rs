//! Labelled mixture datasets for benchmarking the selectors, and the
//! replicated scenario runner that summarises them.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal, StudentT};
use rayon::prelude::*;
use serde::Serialize;

use crate::data::DataMatrix;
use crate::error::{invalid, Error, Result};
use crate::evaluate::{adjusted_rand_index, summarize, Summary};
use crate::kmeans::{fit_series, sq_dist, LloydOptions};
use crate::rng::{derive_seed, task_rng, TaskRng};
use crate::selection::{select_all, Method, SelectorConfig};

/// Attempts allowed when placing component means.
pub const MAX_MEAN_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Spherical Gaussian components with a common variance.
    AssumptionsMet,
    /// Spherical Gaussians with per-component scale.
    VaryingScale,
    /// Gaussians with random full covariance.
    VaryingShape,
    /// Independent t(3) coordinates.
    TTails,
    /// Independent uniform coordinates with unit-variance scaling.
    UniformClusters,
    /// Gaussian components pushed apart where they approach each other.
    Nonconvex,
}

impl Scheme {
    pub const ALL: [Scheme; 6] = [
        Scheme::AssumptionsMet,
        Scheme::VaryingScale,
        Scheme::VaryingShape,
        Scheme::TTails,
        Scheme::UniformClusters,
        Scheme::Nonconvex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::AssumptionsMet => "assumptions_met",
            Scheme::VaryingScale => "varying_scale",
            Scheme::VaryingShape => "varying_shape",
            Scheme::TTails => "t_tails",
            Scheme::UniformClusters => "uniform_clusters",
            Scheme::Nonconvex => "nonconvex",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown scheme '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixtureSpec {
    pub scheme: Scheme,
    pub k: usize,
    pub d: usize,
    pub n: usize,
    pub seed: u64,
    /// Minimum distance between component means, in units of `base_sigma`.
    pub separation: f64,
    pub base_sigma: f64,
}

impl MixtureSpec {
    pub fn new(scheme: Scheme, k: usize, d: usize, n: usize, seed: u64) -> Self {
        Self { scheme, k, d, n, seed, separation: 6.0, base_sigma: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.d == 0 {
            return Err(invalid("k and d must be positive"));
        }
        if self.n < self.k {
            return Err(invalid(format!("n = {} is smaller than k = {}", self.n, self.k)));
        }
        if !(self.separation >= 0.0 && self.separation.is_finite()) {
            return Err(invalid("separation must be finite and nonnegative"));
        }
        if !(self.base_sigma > 0.0 && self.base_sigma.is_finite()) {
            return Err(invalid("base_sigma must be positive"));
        }
        Ok(())
    }

    /// Balanced component sizes, differing by at most one.
    pub fn component_sizes(&self) -> Vec<usize> {
        (0..self.k)
            .map(|c| self.n / self.k + usize::from(c < self.n % self.k))
            .collect()
    }
}

/// Generated data with its ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pub x: DataMatrix,
    /// Zero-based generating component of each row.
    pub labels: Vec<usize>,
    /// `k x d` component means.
    pub means: DataMatrix,
    pub spec: MixtureSpec,
}

impl LabeledDataset {
    /// Row `i` is the mean of the component that generated row `i`.
    pub fn mean_matrix(&self) -> DataMatrix {
        let values = self
            .labels
            .iter()
            .flat_map(|&c| self.means.row(c).iter().copied())
            .collect();
        DataMatrix::from_vec(self.x.n(), self.x.d(), values).expect("finite means")
    }
}

/// Side of the hypercube the means are drawn from.
fn cube_side(spec: &MixtureSpec) -> f64 {
    let sep = spec.separation.max(1.0) * spec.base_sigma;
    2.0 * sep * (spec.k as f64).powf(1.0 / spec.d as f64)
}

fn place_means(spec: &MixtureSpec, side: f64, rng: &mut TaskRng) -> Result<Vec<Vec<f64>>> {
    let min_sq = (spec.separation * spec.base_sigma).powi(2);
    let mut means: Vec<Vec<f64>> = Vec::with_capacity(spec.k);
    let mut attempts = 0;
    while means.len() < spec.k {
        if attempts == MAX_MEAN_ATTEMPTS {
            return Err(Error::RejectionFailure(MAX_MEAN_ATTEMPTS));
        }
        attempts += 1;
        let candidate: Vec<f64> = (0..spec.d).map(|_| rng.random_range(0.0..side)).collect();
        if means.iter().all(|m| sq_dist(m, &candidate) >= min_sq) {
            means.push(candidate);
        }
    }
    Ok(means)
}

fn normal(rng: &mut TaskRng) -> f64 {
    StandardNormal.sample(rng)
}

/// Haar-random orthogonal matrix by Gram-Schmidt on Gaussian columns.
fn random_rotation(d: usize, rng: &mut TaskRng) -> Vec<Vec<f64>> {
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(d);
    while q.len() < d {
        let mut v: Vec<f64> = (0..d).map(|_| normal(rng)).collect();
        for b in &q {
            let dot: f64 = v.iter().zip(b).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(b).for_each(|(a, b)| *a -= dot * b);
        }
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-8 {
            v.iter_mut().for_each(|a| *a /= norm);
            q.push(v);
        }
    }
    q
}

/// Draws a labelled dataset. Rows are ordered by component.
pub fn generate(spec: &MixtureSpec) -> Result<LabeledDataset> {
    spec.validate()?;
    let mut rng = task_rng(spec.seed, &[0x51e]);
    let means = place_means(spec, cube_side(spec), &mut rng)?;
    let sigma = spec.base_sigma;
    let d = spec.d;
    let t3 = StudentT::new(3.0).expect("valid degrees of freedom");
    let root3 = 3f64.sqrt();

    let mut values = Vec::with_capacity(spec.n * d);
    let mut labels = Vec::with_capacity(spec.n);
    for (c, size) in spec.component_sizes().into_iter().enumerate() {
        let mean = &means[c];
        // per-component residual transform
        let scale = match spec.scheme {
            Scheme::VaryingScale => rng.random_range(0.5..2.0) * sigma,
            _ => sigma,
        };
        let shape = match spec.scheme {
            Scheme::VaryingShape => {
                let q = random_rotation(d, &mut rng);
                let sd: Vec<f64> = (0..d)
                    .map(|_| (rng.random_range(0.25..4.0) * sigma * sigma).sqrt())
                    .collect();
                Some((q, sd))
            }
            _ => None,
        };
        for _ in 0..size {
            let e: Vec<f64> = match (spec.scheme, &shape) {
                (Scheme::VaryingShape, Some((q, sd))) => {
                    let z: Vec<f64> = sd.iter().map(|s| s * normal(&mut rng)).collect();
                    (0..d).map(|r| (0..d).map(|m| q[m][r] * z[m]).sum()).collect()
                }
                (Scheme::TTails, _) => (0..d).map(|_| sigma * t3.sample(&mut rng)).collect(),
                (Scheme::UniformClusters, _) => (0..d)
                    .map(|_| sigma * rng.random_range(-root3..root3))
                    .collect(),
                _ => (0..d).map(|_| scale * normal(&mut rng)).collect(),
            };
            values.extend(mean.iter().zip(&e).map(|(m, e)| m + e));
            labels.push(c);
        }
    }
    if spec.scheme == Scheme::Nonconvex {
        push_apart(&mut values, &labels, &means, d, sigma);
    }
    let x = DataMatrix::from_vec(spec.n, d, values)?;
    let means = DataMatrix::from_rows(&means)?;
    Ok(LabeledDataset { x, labels, means, spec: spec.clone() })
}

/// Moves each point away from its component mean by
/// `2 sigma exp(-r / (2 sigma))`, where `r` is the distance to the nearest
/// point of another component.
fn push_apart(values: &mut [f64], labels: &[usize], means: &[Vec<f64>], d: usize, sigma: f64) {
    let original = values.to_vec();
    let rows: Vec<&[f64]> = original.chunks_exact(d).collect();
    let shifts: Vec<Vec<f64>> = (0..rows.len())
        .into_par_iter()
        .map(|i| {
            let r = rows
                .iter()
                .zip(labels)
                .filter(|(_, &c)| c != labels[i])
                .map(|(other, _)| sq_dist(rows[i], other))
                .fold(f64::INFINITY, f64::min)
                .sqrt();
            let dir: Vec<f64> = rows[i].iter().zip(&means[labels[i]]).map(|(x, m)| x - m).collect();
            let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !r.is_finite() || norm == 0.0 {
                return vec![0.0; d];
            }
            let magnitude = 2.0 * sigma * (-r / (2.0 * sigma)).exp();
            dir.iter().map(|v| magnitude * v / norm).collect()
        })
        .collect();
    for (row, shift) in values.chunks_exact_mut(d).zip(shifts) {
        row.iter_mut().zip(shift).for_each(|(v, s)| *v += s);
    }
}

/// Settings for a replicated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub k_min: usize,
    pub k_max: usize,
    pub n_init: usize,
    pub selectors: SelectorConfig,
    pub lloyd: LloydOptions,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            k_min: 1,
            k_max: 30,
            n_init: 10,
            selectors: SelectorConfig::default(),
            lloyd: LloydOptions::default(),
        }
    }
}

/// One selector's choices across replicates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodSummary {
    pub method: Method,
    pub k_hat: Summary,
    /// Summary of `100 * ARI`.
    pub ari: Summary,
    pub k_hats: Vec<usize>,
    pub aris: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioSummary {
    pub spec: MixtureSpec,
    pub reps: usize,
    pub methods: Vec<MethodSummary>,
}

/// Seed of replicate `rep` of a scenario run with `seed`.
pub fn replicate_seed(seed: u64, rep: usize) -> u64 {
    derive_seed(seed, &[0x5ce, rep as u64])
}

/// Generates `reps` datasets from `spec` (seeds derived from `seed`), runs
/// every configured selector on shared fits and summarises the chosen `k`
/// and `100 * ARI` against the generating labels.
pub fn run_scenario(spec: &MixtureSpec, reps: usize, cfg: &ScenarioConfig, seed: u64) -> Result<ScenarioSummary> {
    if reps == 0 {
        return Err(invalid("reps must be at least 1"));
    }
    spec.validate()?;
    let outcomes: Vec<Vec<(Method, usize, f64)>> = (0..reps)
        .into_par_iter()
        .map(|rep| {
            let wrap = |e: Error| invalid(format!("replicate {rep}: {e}"));
            let rep_seed = replicate_seed(seed, rep);
            let data = generate(&MixtureSpec { seed: rep_seed, ..spec.clone() }).map_err(wrap)?;
            let series = fit_series(&data.x, cfg.k_min, cfg.k_max, cfg.n_init, rep_seed, cfg.lloyd)
                .map_err(wrap)?;
            let selectors = SelectorConfig { seed: rep_seed, ..cfg.selectors.clone() };
            select_all(&data.x, &series, &selectors)
                .into_iter()
                .map(|(m, r)| {
                    let r = r.map_err(wrap)?;
                    let ari = adjusted_rand_index(&series.fit(r.k_hat).assignments, &data.labels)?;
                    Ok((m, r.k_hat, ari))
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let methods = cfg
        .selectors
        .methods
        .iter()
        .enumerate()
        .map(|(idx, &method)| {
            let k_hats: Vec<usize> = outcomes.iter().map(|o| o[idx].1).collect();
            let aris: Vec<f64> = outcomes.iter().map(|o| o[idx].2).collect();
            let kf: Vec<f64> = k_hats.iter().map(|&k| k as f64).collect();
            let pct: Vec<f64> = aris.iter().map(|a| 100.0 * a).collect();
            Ok(MethodSummary { method, k_hat: summarize(&kf)?, ari: summarize(&pct)?, k_hats, aris })
        })
        .collect::<Result<_>>()?;
    Ok(ScenarioSummary { spec: spec.clone(), reps, methods })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_component() {
        let data = generate(&MixtureSpec::new(Scheme::AssumptionsMet, 1, 3, 50, 4)).unwrap();
        assert!(data.labels.iter().all(|&l| l == 0));
        assert_eq!((data.x.n(), data.x.d()), (50, 3));
    }

    #[test]
    fn balanced_and_separated() {
        for scheme in Scheme::ALL {
            let mut spec = MixtureSpec::new(scheme, 7, 3, 103, 11);
            spec.separation = 4.0;
            let data = generate(&spec).unwrap();
            let mut counts = [0; 7];
            data.labels.iter().for_each(|&l| counts[l] += 1);
            let (lo, hi) = (counts.iter().min().unwrap(), counts.iter().max().unwrap());
            assert!(hi - lo <= 1);
            for a in 0..7 {
                for b in 0..a {
                    assert!(sq_dist(data.means.row(a), data.means.row(b)).sqrt() >= 4.0);
                }
            }
        }
    }

    #[test]
    fn impossible_separation_fails() {
        let mut spec = MixtureSpec::new(Scheme::AssumptionsMet, 3, 1, 10, 0);
        spec.separation = 10.0;
        let mut rng = task_rng(0, &[]);
        // three means 10 apart cannot fit in [0, 5)
        assert_eq!(place_means(&spec, 5.0, &mut rng), Err(Error::RejectionFailure(MAX_MEAN_ATTEMPTS)));
        assert!(place_means(&spec, cube_side(&spec), &mut rng).is_ok());
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&MixtureSpec::new(Scheme::TTails, 5, 2, 4, 0)).is_err());
        let mut spec = MixtureSpec::new(Scheme::TTails, 2, 2, 4, 0);
        spec.base_sigma = 0.0;
        assert!(generate(&spec).is_err());
    }

    #[test]
    fn scheme_names_round_trip() {
        for s in Scheme::ALL {
            assert_eq!(s.as_str().parse::<Scheme>().unwrap(), s);
        }
    }
}
