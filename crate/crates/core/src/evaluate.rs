//! Partition agreement (Rand and adjusted Rand indices) and summary
//! statistics for experiment tables.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::kmeans::FitSeries;

/// Cross-tabulation of two labelings of the same points.
#[derive(Debug, Clone, PartialEq)]
pub struct ContingencyTable {
    pub counts: Vec<Vec<u64>>,
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
    pub total: u64,
}

fn dense_codes(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = HashMap::new();
    let codes = labels
        .iter()
        .map(|l| {
            let next = map.len();
            *map.entry(*l).or_insert(next)
        })
        .collect();
    (codes, map.len())
}

impl ContingencyTable {
    pub fn new(a: &[usize], b: &[usize]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        let (ca, r) = dense_codes(a);
        let (cb, s) = dense_codes(b);
        let mut counts = vec![vec![0u64; s]; r];
        for (&i, &j) in ca.iter().zip(&cb) {
            counts[i][j] += 1;
        }
        let row_sums = counts.iter().map(|row| row.iter().sum()).collect();
        let col_sums = (0..s).map(|j| counts.iter().map(|row| row[j]).sum()).collect();
        Ok(Self { counts, row_sums, col_sums, total: a.len() as u64 })
    }

    /// Pair counts: together in both, together in the rows, together in
    /// the columns, and all pairs.
    fn pair_sums(&self) -> (u128, u128, u128, u128) {
        let c2 = |v: u64| {
            let v = u128::from(v);
            v * v.saturating_sub(1) / 2
        };
        let index = self.counts.iter().flatten().map(|&v| c2(v)).sum();
        let rows = self.row_sums.iter().map(|&v| c2(v)).sum();
        let cols = self.col_sums.iter().map(|&v| c2(v)).sum();
        (index, rows, cols, c2(self.total))
    }
}

fn check_pairs(a: &[usize], b: &[usize]) -> Result<ContingencyTable> {
    let table = ContingencyTable::new(a, b)?;
    if a.len() < 2 {
        return Err(invalid("agreement indices need at least two points"));
    }
    Ok(table)
}

/// Fraction of point pairs on which the two partitions agree.
pub fn rand_index(a: &[usize], b: &[usize]) -> Result<f64> {
    let (index, rows, cols, pairs) = check_pairs(a, b)?.pair_sums();
    // agreeing pairs: together in both, or apart in both
    Ok((pairs + 2 * index - rows - cols) as f64 / pairs as f64)
}

/// Rand index adjusted for chance (Hubert and Arabie).
///
/// Evaluated as a ratio of exact integer pair counts, so rational values
/// such as -1/2 come out exactly.
pub fn adjusted_rand_index(a: &[usize], b: &[usize]) -> Result<f64> {
    let (index, rows, cols, pairs) = check_pairs(a, b)?.pair_sums();
    let (index, rows, cols, pairs) = (index as i128, rows as i128, cols as i128, pairs as i128);
    let num = 2 * (pairs * index - rows * cols);
    let den = pairs * (rows + cols) - 2 * rows * cols;
    if den == 0 {
        // both partitions trivial (all-one or all-singletons)
        return Ok(if num == 0 && rows == cols { 1.0 } else { 0.0 });
    }
    Ok(num as f64 / den as f64)
}

/// Mean ARI of `pred` against several ground-truth labelings.
pub fn mean_ari(pred: &[usize], truths: &[Vec<usize>]) -> Result<f64> {
    if truths.is_empty() {
        return Err(invalid("need at least one ground-truth labeling"));
    }
    let mut total = 0.0;
    for t in truths {
        total += adjusted_rand_index(pred, t)?;
    }
    Ok(total / truths.len() as f64)
}

/// The `k` in the selection range whose fit best agrees with the truth
/// (smallest `k` on ties), and that ARI.
pub fn ideal_selection(series: &FitSeries, truths: &[Vec<usize>]) -> Result<(usize, f64)> {
    let mut best = (series.k_min, f64::NEG_INFINITY);
    for k in series.ks() {
        let ari = mean_ari(&series.fit(k).assignments, truths)?;
        if ari > best.1 {
            best = (k, ari);
        }
    }
    Ok(best)
}

/// `(ideal - method) / ideal`.
pub fn normalized_regret(ari_ideal: f64, ari_method: f64) -> Result<f64> {
    if !(ari_ideal > 0.0) {
        return Err(Error::NonpositiveIdeal(ari_ideal));
    }
    Ok((ari_ideal - ari_method) / ari_ideal)
}

/// Percentile `p` in `[0, 100]` by linear interpolation between order
/// statistics (`h = (n - 1) p / 100`).
pub fn percentile(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty(), "percentile of an empty sample");
    let h = (sorted.len() - 1) as f64 * p / 100.0;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Median with 10th and 90th centiles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub median: f64,
    pub p10: f64,
    pub p90: f64,
}

pub fn summarize(values: &[f64]) -> Result<Summary> {
    if values.is_empty() {
        return Err(invalid("cannot summarize an empty sample"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(Summary {
        median: percentile(&sorted, 50.0),
        p10: percentile(&sorted, 10.0),
        p90: percentile(&sorted, 90.0),
    })
}

/// Requested centiles of `values`, in the order given.
pub fn centiles(values: &[f64], ps: &[f64]) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(invalid("cannot summarize an empty sample"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(ps.iter().map(|&p| percentile(&sorted, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossed_partitions() {
        let a = [1, 1, 2, 2];
        let b = [1, 2, 1, 2];
        assert!((rand_index(&a, &b).unwrap() - 2.0 / 6.0).abs() < 1e-15);
        assert_eq!(adjusted_rand_index(&a, &b).unwrap(), -0.5);
    }

    #[test]
    fn identical_and_relabelled() {
        let a = [0, 0, 1, 2, 2, 1];
        let b = [5, 5, 9, 7, 7, 9];
        assert_eq!(rand_index(&a, &b).unwrap(), 1.0);
        assert_eq!(adjusted_rand_index(&a, &b).unwrap(), 1.0);
    }

    #[test]
    fn trivial_partitions() {
        let ones = [0; 5];
        let singles = [0, 1, 2, 3, 4];
        assert_eq!(adjusted_rand_index(&ones, &singles).unwrap(), 0.0);
        assert_eq!(adjusted_rand_index(&ones, &ones).unwrap(), 1.0);
        assert_eq!(adjusted_rand_index(&singles, &singles).unwrap(), 1.0);
    }

    #[test]
    fn errors() {
        assert_eq!(rand_index(&[0, 1], &[0]), Err(Error::LengthMismatch(2, 1)));
        assert!(adjusted_rand_index(&[0], &[0]).is_err());
        assert_eq!(normalized_regret(0.0, 0.1), Err(Error::NonpositiveIdeal(0.0)));
    }

    #[test]
    fn regret_arithmetic() {
        assert_eq!(normalized_regret(0.9, 0.9).unwrap(), 0.0);
        assert!((normalized_regret(0.9, 0.45).unwrap() - 0.5).abs() < 1e-15);
        assert!((normalized_regret(0.90, 0.13).unwrap() - 0.855_555_555_555_555_6).abs() < 1e-12);
    }

    #[test]
    fn centile_convention() {
        let v: Vec<f64> = (1..=10).map(f64::from).collect();
        assert_eq!(summarize(&v).unwrap().median, 5.5);
        assert!((centiles(&[3.0, 1.0, 2.0], &[10.0]).unwrap()[0] - 1.2).abs() < 1e-12);
        let s = summarize(&[4.0; 7]).unwrap();
        assert_eq!((s.p10, s.median, s.p90), (4.0, 4.0, 4.0));
    }

    #[test]
    fn multi_truth_average() {
        let pred = [0, 0, 1, 1];
        let truths = vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1]];
        assert_eq!(mean_ari(&pred, &truths).unwrap(), (1.0 - 0.5) / 2.0);
    }
}
