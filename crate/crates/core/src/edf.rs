//! Effective degrees of freedom of the k-means model.
//!
//! The effective degrees of freedom of a fit is the explicit model dimension
//! `k * d` plus an excess term collecting the covariance contributed by the
//! discontinuities of the fitted values, i.e. by points switching cluster.
//! For each entry `(i, j)` and each other cluster `l`, the shift `delta` of
//! `X[i, j]` at which row `i` would be reassigned to `l` solves a quadratic
//! (the own centroid is dragged along by `delta / n_c`). The jump in the
//! fitted value at that shift is weighted by a Gaussian density evaluated
//! with plug-in nuisance parameters taken from a larger model with `k'`
//! clusters.

use std::ops::RangeInclusive;

use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::data::DataMatrix;
use crate::error::{invalid, Error, Result};
use crate::kmeans::{best_of_inits, fitted_values, FitSeries, KMeansFit, LloydOptions};
use crate::rng::task_rng;
use crate::smooth::local_linear_smooth;

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density.
#[inline]
pub fn phi(z: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * z * z).exp()
}

/// Plug-in mean matrix and noise scale used inside the density weights.
#[derive(Debug, Clone, PartialEq)]
pub struct NuisanceParams {
    pub mu_tilde: DataMatrix,
    pub sigma_tilde: f64,
    pub k_prime: usize,
}

/// Takes the fitted values of a `k'`-cluster fit and its root mean squared
/// residual.
pub fn nuisance_from_fit(x: &DataMatrix, fit_kprime: &KMeansFit) -> Result<NuisanceParams> {
    check_fit(x, fit_kprime)?;
    let mu_tilde = fitted_values(fit_kprime);
    let rss: f64 = x
        .values()
        .iter()
        .zip(mu_tilde.values())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    if rss <= 0.0 {
        return Err(Error::ZeroResidual { k_prime: fit_kprime.k });
    }
    let sigma_tilde = (rss / (x.n() * x.d()) as f64).sqrt();
    Ok(NuisanceParams { mu_tilde, sigma_tilde, k_prime: fit_kprime.k })
}

fn check_fit(x: &DataMatrix, fit: &KMeansFit) -> Result<()> {
    if fit.n() != x.n() || fit.d != x.d() {
        return Err(invalid(format!(
            "fit is {}x{} but data is {}x{}",
            fit.n(),
            fit.d,
            x.n(),
            x.d()
        )));
    }
    Ok(())
}

/// A reassignment point of entry `(i, j)` towards `target_cluster`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaSolution {
    pub delta: f64,
    pub target_cluster: usize,
}

/// Smallest-magnitude shift `delta` of coordinate `j` of `x_row` at which the
/// row becomes equidistant from its own (moving) centroid `mu_c` and the
/// fixed centroid `mu_l`, or `None` when no real solution exists.
///
/// Solves `|x + delta e_j - mu_c - (delta / n_c) e_j|^2 = |x + delta e_j - mu_l|^2`.
/// Equal-magnitude roots resolve to the negative one.
pub fn reassignment_delta(
    x_row: &[f64],
    j: usize,
    mu_c: &[f64],
    n_c: usize,
    mu_l: &[f64],
) -> Option<f64> {
    let (mut uu, mut ww) = (0.0, 0.0);
    for ((x, c), l) in x_row.iter().zip(mu_c).zip(mu_l) {
        uu += (x - c) * (x - c);
        ww += (x - l) * (x - l);
    }
    let u_j = x_row[j] - mu_c[j];
    let w_j = x_row[j] - mu_l[j];
    solve_delta(u_j, w_j, uu - ww, n_c)
}

/// Quadratic `(a^2 - 1) t^2 + 2 (a u_j - w_j) t + c0 = 0` with `a = 1 - 1/n_c`.
#[inline]
fn solve_delta(u_j: f64, w_j: f64, c0: f64, n_c: usize) -> Option<f64> {
    let a = 1.0 - 1.0 / n_c as f64;
    let qa = a * a - 1.0;
    let qb = 2.0 * (a * u_j - w_j);
    let disc = qb * qb - 4.0 * qa * c0;
    if disc < 0.0 {
        return None;
    }
    let sign = if qb >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (qb + sign * disc.sqrt());
    if q == 0.0 {
        return Some(0.0);
    }
    let r1 = q / qa;
    let r2 = c0 / q;
    let (m1, m2) = (r1.abs(), r2.abs());
    // magnitudes within rounding count as a tie
    Some(if (m1 - m2).abs() <= 1e-12 * m1.max(m2) {
        r1.min(r2)
    } else if m1 < m2 {
        r1
    } else {
        r2
    })
}

/// Signed jump (right limit minus left limit) of the fitted value of entry
/// `(i, j)` at the reassignment shift `delta_l` from cluster `c` to `l`.
///
/// Shifts of zero follow the positive-shift convention.
pub fn discontinuity_magnitude(
    x_ij: f64,
    delta_l: f64,
    mu_c_j: f64,
    mu_l_j: f64,
    n_c: usize,
    n_l: usize,
) -> f64 {
    let (nc, nl1) = (n_c as f64, n_l as f64 + 1.0);
    let jump = mu_c_j - (n_l as f64 / nl1) * mu_l_j - x_ij / nl1
        + delta_l * (nl1 - nc) / (nc * nl1);
    if delta_l < 0.0 {
        jump
    } else {
        -jump
    }
}

/// All reassignment points of entry `(i, j)` under `fit`.
pub fn reassignment_deltas(x: &DataMatrix, fit: &KMeansFit, i: usize, j: usize) -> Vec<DeltaSolution> {
    let c = fit.assignments[i];
    (0..fit.k)
        .filter(|&l| l != c)
        .filter_map(|l| {
            reassignment_delta(x.row(i), j, fit.centroid(c), fit.cluster_sizes[c], fit.centroid(l))
                .map(|delta| DeltaSolution { delta, target_cluster: l })
        })
        .collect()
}

/// Excess degrees of freedom of `fit`: the density-weighted sum of fitted
/// value jumps over every entry and every alternative cluster.
pub fn excess_df(x: &DataMatrix, fit: &KMeansFit, nuis: &NuisanceParams) -> Result<f64> {
    check_fit(x, fit)?;
    if nuis.mu_tilde.n() != x.n() || nuis.mu_tilde.d() != x.d() {
        return Err(invalid("nuisance mean matrix does not match the data"));
    }
    if !(nuis.sigma_tilde > 0.0) || !nuis.sigma_tilde.is_finite() {
        return Err(Error::ZeroResidual { k_prime: nuis.k_prime });
    }
    if fit.k == 1 {
        return Ok(0.0);
    }
    let sigma = nuis.sigma_tilde;
    let d = x.d();
    let per_row: Vec<f64> = (0..x.n())
        .into_par_iter()
        .map(|i| {
            let row = x.row(i);
            let c = fit.assignments[i];
            let mu_c = fit.centroid(c);
            let n_c = fit.cluster_sizes[c];
            let uu: f64 = row.iter().zip(mu_c).map(|(a, b)| (a - b) * (a - b)).sum();
            let mut acc = 0.0;
            for l in (0..fit.k).filter(|&l| l != c) {
                let mu_l = fit.centroid(l);
                let n_l = fit.cluster_sizes[l];
                let ww: f64 = row.iter().zip(mu_l).map(|(a, b)| (a - b) * (a - b)).sum();
                for j in 0..d {
                    let Some(delta) = solve_delta(row[j] - mu_c[j], row[j] - mu_l[j], uu - ww, n_c)
                    else {
                        continue;
                    };
                    let jump = discontinuity_magnitude(row[j], delta, mu_c[j], mu_l[j], n_c, n_l);
                    let z = (row[j] + delta - nuis.mu_tilde.get(i, j)) / sigma;
                    acc += phi(z) * jump;
                }
            }
            acc
        })
        .collect();
    Ok(per_row.iter().sum::<f64>() / sigma)
}

/// Explicit dimension `k * d` plus the excess term.
pub fn total_df(fit: &KMeansFit, excess: f64) -> f64 {
    (fit.k * fit.d) as f64 + excess
}

/// Per-k effective degrees of freedom over a fit series.
#[derive(Debug, Clone, PartialEq)]
pub struct DfCurve {
    pub ks: Vec<usize>,
    pub raw_df: Vec<f64>,
    pub excess_df: Vec<f64>,
    pub smoothed_df: Vec<f64>,
    pub bandwidth: f64,
    pub nuisance: NuisanceParams,
}

/// Degrees of freedom for every `k` in the series' selection range, with
/// nuisance parameters from the `k_max + 1` fit, followed by local-linear
/// smoothing in `k`.
pub fn df_curve(x: &DataMatrix, series: &FitSeries, bandwidth: f64) -> Result<DfCurve> {
    let nuisance = nuisance_from_fit(x, series.fit(series.k_prime()))?;
    let ks = series.ks();
    let excess: Vec<f64> = ks
        .par_iter()
        .map(|&k| excess_df(x, series.fit(k), &nuisance))
        .collect::<Result<_>>()?;
    let raw_df: Vec<f64> = ks
        .iter()
        .zip(&excess)
        .map(|(&k, &e)| total_df(series.fit(k), e))
        .collect();
    let grid: Vec<f64> = ks.iter().map(|&k| k as f64).collect();
    let smoothed_df = local_linear_smooth(&grid, &raw_df, bandwidth);
    Ok(DfCurve { ks, raw_df, excess_df: excess, smoothed_df, bandwidth, nuisance })
}

/// Degrees of freedom of a fixed `k`-cluster fit as the nuisance model size
/// `k'` varies. The `k' = k` entry reuses the model's own fitted values.
pub fn df_vs_kprime_curve(
    x: &DataMatrix,
    k: usize,
    kprimes: RangeInclusive<usize>,
    n_init: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<Vec<(usize, f64)>> {
    if *kprimes.start() == 0 || *kprimes.end() >= x.n() {
        return Err(invalid(format!("k' range must lie within 1..={}", x.n() - 1)));
    }
    let fit = best_of_inits(x, k, n_init, seed, opts)?;
    kprimes
        .into_par_iter()
        .map(|kp| {
            let nuis = if kp == k {
                nuisance_from_fit(x, &fit)?
            } else {
                nuisance_from_fit(x, &best_of_inits(x, kp, n_init, seed, opts)?)?
            };
            Ok((kp, total_df(&fit, excess_df(x, &fit, &nuis)?)))
        })
        .collect()
}

/// One row of the sampling-oracle comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleRow {
    pub k: usize,
    /// Covariance-based degrees of freedom from repeated sampling.
    pub df_oracle: f64,
    /// Mean over the sampled datasets of the plug-in estimate.
    pub df_hat: f64,
    pub kd: f64,
}

/// Running per-entry covariance between fitted values and data.
struct CoMoments {
    count: usize,
    mean_x: Vec<f64>,
    mean_m: Vec<f64>,
    comoment: Vec<f64>,
}

impl CoMoments {
    fn new(len: usize) -> Self {
        Self { count: 0, mean_x: vec![0.0; len], mean_m: vec![0.0; len], comoment: vec![0.0; len] }
    }

    fn push(&mut self, x: &[f64], m: &[f64]) {
        self.count += 1;
        let inv = 1.0 / self.count as f64;
        for e in 0..x.len() {
            let dx = x[e] - self.mean_x[e];
            self.mean_x[e] += dx * inv;
            self.mean_m[e] += (m[e] - self.mean_m[e]) * inv;
            self.comoment[e] += dx * (m[e] - self.mean_m[e]);
        }
    }

    /// Sum over entries of the sample covariances (denominator `count - 1`).
    fn total_covariance(&self) -> f64 {
        self.comoment.iter().sum::<f64>() / (self.count - 1) as f64
    }
}

struct RepOutcome {
    data: Vec<f64>,
    fitted: Vec<Vec<f64>>,
    df_hat: Vec<f64>,
}

fn sample_around(mu: &DataMatrix, sigma: f64, seed: u64, rep: usize) -> DataMatrix {
    let mut rng = task_rng(seed, &[0x0_5a4d_u64, rep as u64]);
    let values = mu
        .values()
        .iter()
        .map(|m| {
            let z: f64 = StandardNormal.sample(&mut rng);
            m + sigma * z
        })
        .collect();
    DataMatrix::from_vec(mu.n(), mu.d(), values).expect("finite sample")
}

const REP_CHUNK: usize = 32;

#[allow(clippy::too_many_arguments)]
fn run_oracle(
    mu_truth: &DataMatrix,
    sigma: f64,
    ks: &[usize],
    k_prime: Option<usize>,
    n_reps: usize,
    n_init: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if n_reps < 2 {
        return Err(invalid("the sampling oracle needs at least two replicates"));
    }
    if !(sigma > 0.0) {
        return Err(invalid("sigma must be positive"));
    }
    let len = mu_truth.n() * mu_truth.d();
    let mut moments: Vec<CoMoments> = ks.iter().map(|_| CoMoments::new(len)).collect();
    let mut df_hat_sum = vec![0.0; ks.len()];
    let mut start = 0;
    while start < n_reps {
        let end = (start + REP_CHUNK).min(n_reps);
        let outcomes: Vec<RepOutcome> = (start..end)
            .into_par_iter()
            .map(|rep| {
                let x = sample_around(mu_truth, sigma, seed, rep);
                let rep_seed = crate::rng::derive_seed(seed, &[rep as u64]);
                let fits: Vec<KMeansFit> = ks
                    .iter()
                    .map(|&k| best_of_inits(&x, k, n_init, rep_seed, opts))
                    .collect::<Result<_>>()?;
                let df_hat = match k_prime {
                    Some(kp) => {
                        let nuis = nuisance_from_fit(&x, &best_of_inits(&x, kp, n_init, rep_seed, opts)?)?;
                        fits.iter()
                            .map(|f| excess_df(&x, f, &nuis).map(|e| total_df(f, e)))
                            .collect::<Result<_>>()?
                    }
                    None => Vec::new(),
                };
                let fitted = fits.iter().map(|f| fitted_values(f).values().to_vec()).collect();
                Ok(RepOutcome { data: x.values().to_vec(), fitted, df_hat })
            })
            .collect::<Result<_>>()?;
        for out in &outcomes {
            for (mom, m) in moments.iter_mut().zip(&out.fitted) {
                mom.push(&out.data, m);
            }
            for (s, v) in df_hat_sum.iter_mut().zip(&out.df_hat) {
                *s += v;
            }
        }
        start = end;
    }
    let s2 = sigma * sigma;
    let oracle = moments.iter().map(|m| m.total_covariance() / s2).collect();
    let df_hat = df_hat_sum.iter().map(|s| s / n_reps as f64).collect();
    Ok((oracle, df_hat))
}

/// Degrees of freedom by direct sampling: draws `n_reps` datasets
/// `mu_truth + sigma * Z`, fits k-means to each and sums the per-entry sample
/// covariances between fitted values and data, divided by `sigma^2`.
pub fn monte_carlo_df_oracle(
    mu_truth: &DataMatrix,
    sigma: f64,
    k: usize,
    n_reps: usize,
    n_init: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<f64> {
    run_oracle(mu_truth, sigma, &[k], None, n_reps, n_init, seed, opts).map(|(o, _)| o[0])
}

/// Sampling oracle, plug-in estimate (averaged over the same sampled
/// datasets, nuisance from a `k_prime` fit) and `k * d` for each `k`.
#[allow(clippy::too_many_arguments)]
pub fn oracle_comparison(
    mu_truth: &DataMatrix,
    sigma: f64,
    ks: &[usize],
    k_prime: usize,
    n_reps: usize,
    n_init: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<Vec<OracleRow>> {
    let (oracle, df_hat) = run_oracle(mu_truth, sigma, ks, Some(k_prime), n_reps, n_init, seed, opts)?;
    Ok(ks
        .iter()
        .zip(oracle.iter().zip(&df_hat))
        .map(|(&k, (&df_oracle, &df_hat))| OracleRow {
            k,
            df_oracle,
            df_hat,
            kd: (k * mu_truth.d()) as f64,
        })
        .collect())
}

/// Both sides of the Stein identity with a jump term, for the step function
/// `f(x) = 1[x > threshold]` and `X ~ N(mu, sigma^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteinCheck {
    /// Sample `Cov(f(X), X) / sigma^2`.
    pub lhs: f64,
    /// `phi((threshold - mu) / sigma) / sigma`.
    pub rhs: f64,
    /// Standard error of `lhs`.
    pub std_error: f64,
}

pub fn stein_identity_check(mu: f64, sigma: f64, threshold: f64, n_draws: usize, seed: u64) -> Result<SteinCheck> {
    if n_draws < 2 || !(sigma > 0.0) {
        return Err(invalid("need n_draws >= 2 and sigma > 0"));
    }
    let mut rng = task_rng(seed, &[0x57e1]);
    let xs: Vec<f64> = (0..n_draws)
        .map(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            mu + sigma * z
        })
        .collect();
    let n = n_draws as f64;
    let fs: Vec<f64> = xs.iter().map(|&x| if x > threshold { 1.0 } else { 0.0 }).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let mf = fs.iter().sum::<f64>() / n;
    let prods: Vec<f64> = xs.iter().zip(&fs).map(|(x, f)| (x - mx) * (f - mf)).collect();
    let cov = prods.iter().sum::<f64>() / (n - 1.0);
    let mp = prods.iter().sum::<f64>() / n;
    let var_p = prods.iter().map(|p| (p - mp) * (p - mp)).sum::<f64>() / (n - 1.0);
    let s2 = sigma * sigma;
    Ok(SteinCheck {
        lhs: cov / s2,
        rhs: phi((threshold - mu) / sigma) / sigma,
        std_error: (var_p / n).sqrt() / s2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kmeans::{fit_series, lloyd_fit};

    #[test]
    fn delta_one_dimensional_roots() {
        // roots 4/3 and 8
        let d = reassignment_delta(&[1.0], 0, &[0.0], 2, &[4.0]).unwrap();
        assert!((d - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn delta_singleton_has_no_root() {
        assert_eq!(reassignment_delta(&[0.0, 0.0], 0, &[0.0, 0.0], 1, &[3.0, 4.0]), None);
    }

    #[test]
    fn delta_boundary_point_is_zero() {
        // equidistant and a * u_j = w_j: x = (0, 1), mu_c = (0, 0), mu_l = (0, 2), j = 0
        let d = reassignment_delta(&[0.0, 1.0], 0, &[0.0, 0.0], 3, &[0.0, 2.0]).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn delta_grid_scan_oracle() {
        // scan shifts for the first flip of the assignment against the dragged centroid
        let (x, mu_c, n_c, mu_l) = (1.0_f64, 0.0_f64, 2usize, 4.0_f64);
        let closer_to_l = |t: f64| {
            let own = (x + t - (mu_c + t / n_c as f64)).powi(2);
            let other = (x + t - mu_l).powi(2);
            other < own
        };
        let step = 1e-5;
        let mut t = 0.0;
        while !closer_to_l(t) {
            t += step;
        }
        let d = reassignment_delta(&[x], 0, &[mu_c], n_c, &[mu_l]).unwrap();
        assert!((d - t).abs() < 2.0 * step);
    }

    #[test]
    fn equal_magnitude_roots_pick_negative() {
        // qb = 0 with c0 > 0 gives roots +-r
        let d = solve_delta(0.0, 0.0, 1.0, 2).unwrap();
        assert!(d < 0.0);
        assert!((d + (1.0_f64 / 0.75).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn jump_matches_limits_of_fitted_value() {
        let (x, delta, mu_c, mu_l, n_c, n_l) = (1.0, 4.0 / 3.0, 0.0, 4.0, 2usize, 3usize);
        let after = (n_l as f64 * mu_l + x + delta) / (n_l as f64 + 1.0);
        let before = mu_c + delta / n_c as f64;
        let j = discontinuity_magnitude(x, delta, mu_c, mu_l, n_c, n_l);
        assert!((j - (after - before)).abs() < 1e-12);
        assert!((j - 2.916_666_666_666_667).abs() < 1e-12);
    }

    #[test]
    fn jump_closed_form_arithmetic() {
        // n_c = n_l = 2, delta = -1: coefficient 1/6
        let j = discontinuity_magnitude(0.0, -1.0, 0.0, 0.0, 2, 2);
        assert!((j + 1.0 / 6.0).abs() < 1e-15);
        // coincident centroids and an on-centroid point
        let j = discontinuity_magnitude(2.5, -0.0, 2.5, 2.5, 4, 7);
        assert!(j.abs() < 1e-15);
    }

    #[test]
    fn nuisance_of_four_point_example() {
        let x = DataMatrix::from_rows(&[[0.0, 0.0], [0.0, 1.0], [10.0, 0.0], [10.0, 1.0]]).unwrap();
        let fit = best_of_inits(&x, 2, 10, 0, LloydOptions::default()).unwrap();
        let nuis = nuisance_from_fit(&x, &fit).unwrap();
        assert!((nuis.sigma_tilde - (1.0_f64 / 8.0).sqrt()).abs() < 1e-12);
        let full = lloyd_fit(&x, 4, 0, LloydOptions::default()).unwrap();
        assert_eq!(nuisance_from_fit(&x, &full), Err(Error::ZeroResidual { k_prime: 4 }));
    }

    #[test]
    fn k_one_has_no_excess() {
        let x = DataMatrix::from_rows(&[[0.0, 0.3], [1.0, 1.0], [2.0, 0.1], [5.0, 4.0]]).unwrap();
        let series = fit_series(&x, 1, 2, 3, 5, LloydOptions::default()).unwrap();
        let nuis = nuisance_from_fit(&x, series.fit(3)).unwrap();
        let e = excess_df(&x, series.fit(1), &nuis).unwrap();
        assert_eq!(e, 0.0);
        assert_eq!(total_df(series.fit(1), e), 2.0);
    }

    #[test]
    fn excess_respects_density_bound() {
        let x = DataMatrix::from_column(&[0.0, 0.4, 1.1, 3.0, 3.2, 4.5, 7.0]).unwrap();
        let series = fit_series(&x, 1, 3, 5, 2, LloydOptions::default()).unwrap();
        let nuis = nuisance_from_fit(&x, series.fit(4)).unwrap();
        let fit = series.fit(3);
        let mut abs_jumps = 0.0;
        for i in 0..x.n() {
            for s in reassignment_deltas(&x, fit, i, 0) {
                let c = fit.assignments[i];
                let l = s.target_cluster;
                abs_jumps += discontinuity_magnitude(
                    x.get(i, 0),
                    s.delta,
                    fit.centroid(c)[0],
                    fit.centroid(l)[0],
                    fit.cluster_sizes[c],
                    fit.cluster_sizes[l],
                )
                .abs();
            }
        }
        let e = excess_df(&x, fit, &nuis).unwrap();
        assert!(e.abs() <= INV_SQRT_2PI * abs_jumps / nuis.sigma_tilde + 1e-12);
    }

    #[test]
    fn stein_trivial_cases() {
        let c = stein_identity_check(0.5, 2.0, 0.5, 1000, 1).unwrap();
        assert!((c.rhs - INV_SQRT_2PI / 2.0).abs() < 1e-15);
        let far = stein_identity_check(0.0, 1.0, 1e6, 1000, 1).unwrap();
        assert_eq!(far.rhs, 0.0);
        assert_eq!(far.lhs, 0.0);
    }

    #[test]
    fn oracle_needs_two_reps() {
        let mu = DataMatrix::from_column(&[0.0, 1.0, 2.0]).unwrap();
        assert!(monte_carlo_df_oracle(&mu, 1.0, 1, 1, 1, 0, LloydOptions::default()).is_err());
    }
}
