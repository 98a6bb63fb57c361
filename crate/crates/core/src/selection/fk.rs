use super::{argmin, Method, SelectionResult};
use crate::data::DataMatrix;
use crate::error::{invalid, Result};
use crate::kmeans::FitSeries;

/// Values of `f(K)` below this indicate clustering structure.
pub const FK_THRESHOLD: f64 = 0.85;

/// Weights `alpha_K` for `K = 2 ..= k_max` (index 0 holds `alpha_2`).
pub fn fk_alphas(d: usize, k_max: usize) -> Vec<f64> {
    let mut alphas = Vec::new();
    if k_max < 2 {
        return alphas;
    }
    let mut a = 1.0 - 3.0 / (4.0 * d as f64);
    alphas.push(a);
    for _ in 3..=k_max {
        a += (1.0 - a) / 6.0;
        alphas.push(a);
    }
    alphas
}

/// `f(K)` for each `K` in `ks` (contiguous) given the within-cluster sums
/// of squares. The first entry is NaN when `ks` does not start at 1,
/// because `S_{K-1}` is unavailable.
pub fn fk_values(ks: &[usize], within: &[f64], d: usize) -> Vec<f64> {
    let k_max = ks.last().copied().unwrap_or(1);
    let alphas = fk_alphas(d, k_max);
    ks.iter()
        .enumerate()
        .map(|(i, &k)| {
            if k == 1 {
                1.0
            } else if i == 0 {
                f64::NAN
            } else if within[i - 1] == 0.0 {
                1.0
            } else {
                within[i] / (alphas[k - 2] * within[i - 1])
            }
        })
        .collect()
}

pub fn fk_select(x: &DataMatrix, series: &FitSeries) -> Result<SelectionResult> {
    if x.d() < 2 {
        return Err(invalid("the fK method requires at least two dimensions"));
    }
    let ks = series.ks();
    let within: Vec<f64> = ks.iter().map(|&k| series.fit(k).within_ss).collect();
    let f = fk_values(&ks, &within, x.d());
    let k_hat = match argmin(&f) {
        Some(i) if f[i] < FK_THRESHOLD => ks[i],
        _ => ks[0],
    };
    Ok(SelectionResult { method: Method::Fk, k_hat, ks, scores: f, aux: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_recursion() {
        let a = fk_alphas(2, 4);
        assert_eq!(a[0], 0.625);
        assert!((a[1] - (0.625 + 0.375 / 6.0)).abs() < 1e-15);
        assert!((a[2] - (a[1] + (1.0 - a[1]) / 6.0)).abs() < 1e-15);
    }

    #[test]
    fn two_cluster_ratio() {
        let f = fk_values(&[1, 2], &[100.0, 50.0], 2);
        assert_eq!(f[0], 1.0);
        assert!((f[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn null_calibration_gives_ones() {
        let d = 3;
        let a = fk_alphas(d, 6);
        let mut s = vec![40.0];
        for k in 2..=6 {
            let prev = *s.last().unwrap();
            s.push(a[k - 2] * prev);
        }
        let f = fk_values(&[1, 2, 3, 4, 5, 6], &s, d);
        assert!(f.iter().all(|v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn zero_previous_sum() {
        let f = fk_values(&[1, 2, 3], &[5.0, 0.0, 0.0], 2);
        assert_eq!(f[2], 1.0);
        let f = fk_values(&[2, 3], &[5.0, 1.0], 2);
        assert!(f[0].is_nan());
    }
}
