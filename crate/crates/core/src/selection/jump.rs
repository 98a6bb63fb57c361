use super::{argmax, bic::rss_floor, Method, SelectionResult};
use crate::data::DataMatrix;
use crate::error::Result;
use crate::kmeans::FitSeries;

/// Jumps `D_k^-y - D_{k-1}^-y` over contiguous `ks` and the `k` with the
/// largest jump. The transformed distortion before `k = 1` is zero; for a
/// range starting above 1 the first jump is undefined (NaN).
pub fn jump_rule(ks: &[usize], distortions: &[f64], y: f64) -> (Vec<f64>, usize) {
    let transformed: Vec<f64> = distortions.iter().map(|d| d.powf(-y)).collect();
    let jumps: Vec<f64> = (0..ks.len())
        .map(|i| {
            if i > 0 {
                transformed[i] - transformed[i - 1]
            } else if ks[0] == 1 {
                transformed[0]
            } else {
                f64::NAN
            }
        })
        .collect();
    let k_hat = argmax(&jumps).map_or(ks[0], |i| ks[i]);
    (jumps, k_hat)
}

/// Jump statistic with distortion `W_k / (n d)` and exponent `power`
/// (default `d / 2`).
pub fn jump_select(x: &DataMatrix, series: &FitSeries, power: Option<f64>) -> Result<SelectionResult> {
    let nd = (x.n() * x.d()) as f64;
    let floor = rss_floor(x) / nd;
    let ks = series.ks();
    let distortions: Vec<f64> = ks
        .iter()
        .map(|&k| (series.fit(k).within_ss / nd).max(floor))
        .collect();
    let y = power.unwrap_or(x.d() as f64 / 2.0);
    let (jumps, k_hat) = jump_rule(&ks, &distortions, y);
    Ok(SelectionResult {
        method: Method::Jump,
        k_hat,
        ks,
        scores: jumps,
        aux: Some(distortions),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let (j, k) = jump_rule(&[1, 2, 3], &[10.0, 2.0, 1.9], 1.0);
        assert!((j[0] - 0.1).abs() < 1e-12);
        assert!((j[1] - 0.4).abs() < 1e-12);
        assert!((j[2] - (1.0 / 1.9 - 0.5)).abs() < 1e-12);
        assert_eq!(k, 2);
    }

    #[test]
    fn accelerating_jumps_pick_the_last_k() {
        // D_k = 4^(-k) with y = 1 gives T_k = 4^k, jumps 3 * 4^(k-1)
        let ks: Vec<usize> = (1..=6).collect();
        let d: Vec<f64> = ks.iter().map(|&k| 4f64.powi(-(k as i32))).collect();
        assert_eq!(jump_rule(&ks, &d, 1.0).1, 6);
    }

    #[test]
    fn scale_invariant_choice() {
        let ks = [1, 2, 3, 4];
        let d = [9.0, 3.0, 2.5, 2.2];
        let scaled: Vec<f64> = d.iter().map(|v| v * 17.0).collect();
        assert_eq!(jump_rule(&ks, &d, 1.5).1, jump_rule(&ks, &scaled, 1.5).1);
    }
}
