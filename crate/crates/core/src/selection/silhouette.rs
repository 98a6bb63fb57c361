use rayon::prelude::*;

use super::{argmax, Method, SelectionResult};
use crate::data::DataMatrix;
use crate::error::{invalid, Result};
use crate::kmeans::{sq_dist, FitSeries};

/// Mean silhouette width of a partition with Euclidean dissimilarity.
/// Members of singleton clusters score 0.
pub fn mean_silhouette(x: &DataMatrix, assignments: &[usize], k: usize) -> f64 {
    let mut sizes = vec![0usize; k];
    for &c in assignments {
        sizes[c] += 1;
    }
    let widths: Vec<f64> = (0..x.n())
        .into_par_iter()
        .map(|i| {
            let own = assignments[i];
            if sizes[own] < 2 {
                return 0.0;
            }
            let mut sums = vec![0.0; k];
            let row = x.row(i);
            for (other, &c) in x.rows().zip(assignments) {
                sums[c] += sq_dist(row, other).sqrt();
            }
            let a = sums[own] / (sizes[own] - 1) as f64;
            let b = (0..k)
                .filter(|&l| l != own && sizes[l] > 0)
                .map(|l| sums[l] / sizes[l] as f64)
                .fold(f64::INFINITY, f64::min);
            let m = a.max(b);
            if !b.is_finite() || m == 0.0 {
                0.0
            } else {
                (b - a) / m
            }
        })
        .collect();
    widths.iter().sum::<f64>() / x.n() as f64
}

/// Maximises the mean silhouette over `max(2, k_min) ..= min(k_max, n - 1)`.
pub fn silhouette_select(x: &DataMatrix, series: &FitSeries) -> Result<SelectionResult> {
    let lo = series.k_min.max(2);
    let hi = series.k_max.min(x.n().saturating_sub(1));
    if lo > hi {
        return Err(invalid("silhouette needs a k range intersecting 2 ..= n - 1"));
    }
    let ks: Vec<usize> = (lo..=hi).collect();
    let scores: Vec<f64> = ks
        .iter()
        .map(|&k| {
            let fit = series.fit(k);
            mean_silhouette(x, &fit.assignments, k)
        })
        .collect();
    let k_hat = argmax(&scores).map_or(lo, |i| ks[i]);
    Ok(SelectionResult { method: Method::Silhouette, k_hat, ks, scores, aux: None })
}
