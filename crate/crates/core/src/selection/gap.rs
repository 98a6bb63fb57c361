use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{bic::rss_floor, Method, SelectionResult};
use crate::data::DataMatrix;
use crate::error::{invalid, Result};
use crate::kmeans::{best_of_inits, FitSeries, LloydOptions};
use crate::rng::{derive_seed, task_rng};

const GAP_TAG: u64 = 0x6a9;

/// Gap values and their standard errors for `k_min ..= k_max + 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapStatistic {
    pub ks: Vec<usize>,
    pub gap: Vec<f64>,
    pub s: Vec<f64>,
}

/// Smallest `k` with `gap(k) >= gap(k+1) - s(k+1)`, else the last `k` that
/// has a successor. Inputs cover `k_min ..= k_max + 1`.
pub fn gap_rule(gap: &[f64], s: &[f64], ks: &[usize]) -> usize {
    assert!(gap.len() == s.len() && gap.len() == ks.len() && ks.len() >= 2);
    (0..ks.len() - 1)
        .find(|&i| gap[i] >= gap[i + 1] - s[i + 1])
        .map_or(ks[ks.len() - 2], |i| ks[i])
}

fn uniform_reference(ranges: &[(f64, f64)], n: usize, seed: u64, b: usize) -> DataMatrix {
    let mut rng = task_rng(seed, &[GAP_TAG, b as u64]);
    let mut values = Vec::with_capacity(n * ranges.len());
    for _ in 0..n {
        for &(lo, hi) in ranges {
            values.push(if hi > lo { rng.random_range(lo..hi) } else { lo });
        }
    }
    DataMatrix::from_vec(n, ranges.len(), values).expect("finite reference sample")
}

/// Gap statistic against `b` reference datasets drawn uniformly over the
/// per-feature ranges of `x`, each clustered from a single start.
pub fn gap_statistic(x: &DataMatrix, series: &FitSeries, b: usize, seed: u64) -> Result<GapStatistic> {
    if b < 2 {
        return Err(invalid("the gap statistic needs at least two reference datasets"));
    }
    let ks: Vec<usize> = (series.k_min..=series.k_prime()).collect();
    let ranges = x.column_ranges();
    // reference draws depend on the data only through an order-free hash
    let ref_seed = derive_seed(seed, &[GAP_TAG, x.row_order_free_hash()]);
    let opts = LloydOptions::default();
    let log_w_ref: Vec<Vec<f64>> = (0..b)
        .into_par_iter()
        .map(|r| {
            let reference = uniform_reference(&ranges, x.n(), ref_seed, r);
            let floor = rss_floor(&reference);
            let fit_seed = derive_seed(ref_seed, &[r as u64]);
            ks.iter()
                .map(|&k| best_of_inits(&reference, k, 1, fit_seed, opts).map(|f| f.within_ss.max(floor).ln()))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;

    let floor = rss_floor(x);
    let bf = b as f64;
    let mut gap = Vec::with_capacity(ks.len());
    let mut s = Vec::with_capacity(ks.len());
    for (idx, &k) in ks.iter().enumerate() {
        let mean = log_w_ref.iter().map(|v| v[idx]).sum::<f64>() / bf;
        let var = log_w_ref.iter().map(|v| (v[idx] - mean).powi(2)).sum::<f64>() / bf;
        gap.push(mean - series.fit(k).within_ss.max(floor).ln());
        s.push(var.sqrt() * (1.0 + 1.0 / bf).sqrt());
    }
    Ok(GapStatistic { ks, gap, s })
}

pub fn gap_select(x: &DataMatrix, series: &FitSeries, b: usize, seed: u64) -> Result<SelectionResult> {
    let stat = gap_statistic(x, series, b, seed)?;
    let k_hat = gap_rule(&stat.gap, &stat.s, &stat.ks);
    let m = stat.ks.len() - 1;
    Ok(SelectionResult {
        method: Method::Gap,
        k_hat,
        ks: stat.ks[..m].to_vec(),
        scores: stat.gap[..m].to_vec(),
        aux: Some(stat.s[..m].to_vec()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_fires_at_first_qualifying_k() {
        assert_eq!(gap_rule(&[0.10, 0.50, 0.45], &[0.01; 3], &[1, 2, 3]), 2);
        // never fires: falls back to k_max
        assert_eq!(gap_rule(&[0.1, 0.2, 0.3, 0.4], &[0.0; 4], &[1, 2, 3, 4]), 3);
        assert_eq!(gap_rule(&[0.5, 0.2, 0.3], &[0.0; 3], &[1, 2, 3]), 1);
    }
}
