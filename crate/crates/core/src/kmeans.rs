//! Lloyd's k-means with Forgy initialisation and multiple restarts.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rayon::prelude::*;
use serde::Serialize;

use crate::data::DataMatrix;
use crate::error::{invalid, Error, Result};
use crate::rng::{derive_seed, task_rng};

/// Iteration controls for a single Lloyd run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LloydOptions {
    pub max_iter: usize,
    /// Stop once the relative decrease of the objective falls below this.
    pub tol: f64,
}

impl Default for LloydOptions {
    fn default() -> Self {
        Self { max_iter: 100, tol: 1e-10 }
    }
}

/// A fitted k-means partition of a data matrix.
///
/// Cluster indices are zero-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KMeansFit {
    pub k: usize,
    pub d: usize,
    /// `k x d`, row-major.
    pub centroids: Vec<f64>,
    pub assignments: Vec<usize>,
    pub cluster_sizes: Vec<usize>,
    pub within_ss: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl KMeansFit {
    #[inline]
    pub fn centroid(&self, l: usize) -> &[f64] {
        &self.centroids[l * self.d..(l + 1) * self.d]
    }

    pub fn n(&self) -> usize {
        self.assignments.len()
    }
}

#[inline]
pub(crate) fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Index of the nearest centroid; the lowest index wins ties.
#[inline]
fn nearest(row: &[f64], centroids: &[f64], d: usize) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (l, c) in centroids.chunks_exact(d).enumerate() {
        let dist = sq_dist(row, c);
        if dist < best.1 {
            best = (l, dist);
        }
    }
    best
}

fn update_centroids(x: &DataMatrix, assignments: &[usize], k: usize) -> (Vec<f64>, Vec<usize>) {
    let d = x.d();
    let mut sums = vec![0.0; k * d];
    let mut sizes = vec![0usize; k];
    for (row, &c) in x.rows().zip(assignments) {
        sizes[c] += 1;
        for (s, v) in sums[c * d..(c + 1) * d].iter_mut().zip(row) {
            *s += v;
        }
    }
    for (l, &size) in sizes.iter().enumerate() {
        if size > 0 {
            let inv = 1.0 / size as f64;
            sums[l * d..(l + 1) * d].iter_mut().for_each(|s| *s *= inv);
        }
    }
    (sums, sizes)
}

/// Moves the point farthest from its centroid into each empty cluster.
fn repair_empty(
    x: &DataMatrix,
    assignments: &mut [usize],
    centroids: &mut Vec<f64>,
    sizes: &mut Vec<usize>,
    k: usize,
) {
    while let Some(empty) = sizes.iter().position(|&s| s == 0) {
        let d = x.d();
        let mut far = None;
        let mut far_dist = -1.0;
        for (i, row) in x.rows().enumerate() {
            let c = assignments[i];
            if sizes[c] < 2 {
                continue;
            }
            let dist = sq_dist(row, &centroids[c * d..(c + 1) * d]);
            if dist > far_dist {
                far_dist = dist;
                far = Some(i);
            }
        }
        // n >= k guarantees a donor cluster with at least two members.
        let i = far.expect("a cluster with two or more members exists when n >= k");
        assignments[i] = empty;
        let (c, s) = update_centroids(x, assignments, k);
        *centroids = c;
        *sizes = s;
    }
}

fn objective(x: &DataMatrix, assignments: &[usize], centroids: &[f64]) -> f64 {
    let d = x.d();
    x.rows()
        .zip(assignments)
        .map(|(row, &c)| sq_dist(row, &centroids[c * d..(c + 1) * d]))
        .sum()
}

fn check_k(x: &DataMatrix, k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    if k > x.n() {
        return Err(Error::KTooLarge { k, n: x.n() });
    }
    let distinct = x.distinct_rows();
    if distinct.len() < k {
        return Err(Error::DegenerateData { distinct: distinct.len(), k });
    }
    Ok(distinct)
}

/// One Lloyd run from a Forgy start, also returning the objective after
/// every update step.
pub fn lloyd_fit_traced(
    x: &DataMatrix,
    k: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<(KMeansFit, Vec<f64>)> {
    if opts.max_iter == 0 {
        return Err(invalid("max_iter must be at least 1"));
    }
    if !(opts.tol >= 0.0) {
        return Err(invalid("tol must be nonnegative"));
    }
    let distinct = check_k(x, k)?;
    let d = x.d();
    let mut rng = task_rng(seed, &[]);
    let mut centroids = Vec::with_capacity(k * d);
    for idx in sample(&mut rng, distinct.len(), k).iter() {
        centroids.extend_from_slice(x.row(distinct[idx]));
    }

    let mut assignments: Vec<usize> = x.rows().map(|r| nearest(r, &centroids, d).0).collect();
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    let mut sizes;
    loop {
        iterations += 1;
        let (c, s) = update_centroids(x, &assignments, k);
        centroids = c;
        sizes = s;
        repair_empty(x, &mut assignments, &mut centroids, &mut sizes, k);
        let obj = objective(x, &assignments, &centroids);
        let prev = trace.last().copied();
        trace.push(obj);
        if let Some(prev) = prev {
            if prev - obj <= opts.tol * prev.abs() {
                converged = true;
                break;
            }
        }
        if iterations >= opts.max_iter {
            break;
        }
        let next: Vec<usize> = x.rows().map(|r| nearest(r, &centroids, d).0).collect();
        if next == assignments {
            converged = true;
            break;
        }
        assignments = next;
    }

    let within_ss = *trace.last().expect("at least one iteration");
    let fit = KMeansFit {
        k,
        d,
        centroids,
        assignments,
        cluster_sizes: sizes,
        within_ss,
        converged,
        iterations,
    };
    Ok((fit, trace))
}

/// One Lloyd run from a Forgy start seeded by `seed`.
pub fn lloyd_fit(x: &DataMatrix, k: usize, seed: u64, opts: LloydOptions) -> Result<KMeansFit> {
    lloyd_fit_traced(x, k, seed, opts).map(|(fit, _)| fit)
}

/// Seed of restart `init` for `k` clusters under run seed `seed`.
pub fn init_seed(seed: u64, k: usize, init: usize) -> u64 {
    derive_seed(seed, &[k as u64, init as u64])
}

/// Best of `n_init` independent Lloyd runs by within-cluster sum of squares.
pub fn best_of_inits(
    x: &DataMatrix,
    k: usize,
    n_init: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<KMeansFit> {
    if n_init == 0 {
        return Err(invalid("n_init must be at least 1"));
    }
    check_k(x, k)?;
    let fits: Vec<KMeansFit> = (0..n_init)
        .into_par_iter()
        .map(|r| lloyd_fit(x, k, init_seed(seed, k, r), opts))
        .collect::<Result<_>>()?;
    // sequential reduction keeps the choice independent of scheduling
    let best = fits
        .into_iter()
        .reduce(|a, b| if b.within_ss < a.within_ss { b } else { a })
        .expect("n_init >= 1");
    Ok(best)
}

/// Fitted-value matrix: row `i` is the centroid of the cluster of row `i`.
pub fn fitted_values(fit: &KMeansFit) -> DataMatrix {
    let mut values = Vec::with_capacity(fit.n() * fit.d);
    for &c in &fit.assignments {
        values.extend_from_slice(fit.centroid(c));
    }
    DataMatrix::from_vec(fit.n(), fit.d, values).expect("centroids are finite")
}

/// Best-of-restarts fits for every `k` in `k_min ..= k_max + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FitSeries {
    pub k_min: usize,
    pub k_max: usize,
    fits: BTreeMap<usize, KMeansFit>,
}

impl FitSeries {
    /// The fit for `k`, for `k` in `k_min ..= k_max + 1`.
    pub fn get(&self, k: usize) -> Option<&KMeansFit> {
        self.fits.get(&k)
    }

    pub fn fit(&self, k: usize) -> &KMeansFit {
        self.get(k)
            .unwrap_or_else(|| panic!("k = {k} outside the fitted range"))
    }

    /// The selection range `k_min ..= k_max`.
    pub fn ks(&self) -> Vec<usize> {
        (self.k_min..=self.k_max).collect()
    }

    pub fn k_prime(&self) -> usize {
        self.k_max + 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &KMeansFit)> {
        self.fits.iter().map(|(k, f)| (*k, f))
    }

    /// Assembles a series from precomputed fits, which must cover
    /// `k_min ..= k_max + 1` contiguously.
    pub fn from_fits(k_min: usize, k_max: usize, fits: Vec<KMeansFit>) -> Result<Self> {
        if k_min == 0 || k_min > k_max {
            return Err(invalid("need 1 <= k_min <= k_max"));
        }
        let map: BTreeMap<usize, KMeansFit> = fits.into_iter().map(|f| (f.k, f)).collect();
        if (k_min..=k_max + 1).any(|k| !map.contains_key(&k)) {
            return Err(invalid("fits must cover k_min ..= k_max + 1"));
        }
        Ok(Self { k_min, k_max, fits: map })
    }
}

pub fn fit_series(
    x: &DataMatrix,
    k_min: usize,
    k_max: usize,
    n_init: usize,
    seed: u64,
    opts: LloydOptions,
) -> Result<FitSeries> {
    if k_min == 0 || k_min > k_max {
        return Err(invalid("need 1 <= k_min <= k_max"));
    }
    if k_max + 1 > x.n() {
        return Err(Error::KTooLarge { k: k_max + 1, n: x.n() });
    }
    let fits: Vec<KMeansFit> = (k_min..=k_max + 1)
        .into_par_iter()
        .map(|k| best_of_inits(x, k, n_init, seed, opts))
        .collect::<Result<_>>()?;
    FitSeries::from_fits(k_min, k_max, fits)
}
