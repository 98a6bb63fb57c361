use serde::Serialize;

use super::{first_local_minimum, Method, SelectionResult};
use crate::data::DataMatrix;
use crate::edf::df_curve;
use crate::error::{invalid, Error, Result};
use crate::kmeans::FitSeries;

/// Per-k BIC values, up to an additive constant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BicCurve {
    pub ks: Vec<usize>,
    pub bic: Vec<f64>,
    pub df_used: Vec<f64>,
}

/// Smallest residual sum of squares admitted inside the logarithm.
pub fn rss_floor(x: &DataMatrix) -> f64 {
    1e-12 * x.total_ss()
}

/// `n d log(RSS_k) + log(n d) df_k` over the series' selection range.
pub fn bic_curve(x: &DataMatrix, series: &FitSeries, df: &[f64]) -> Result<BicCurve> {
    let ks = series.ks();
    if df.len() != ks.len() {
        return Err(invalid(format!("expected {} df values, got {}", ks.len(), df.len())));
    }
    let nd = (x.n() * x.d()) as f64;
    let eps = rss_floor(x);
    let rss: Vec<f64> = ks.iter().map(|&k| series.fit(k).within_ss).collect();
    if rss.iter().all(|&r| r <= eps) {
        return Err(Error::AllDegenerate);
    }
    let bic = rss
        .iter()
        .zip(df)
        .map(|(&r, &df)| nd * r.max(eps).ln() + nd.ln() * df)
        .collect();
    Ok(BicCurve { ks, bic, df_used: df.to_vec() })
}

/// BIC with caller-supplied degrees of freedom, decided by the first local
/// minimum. The df values are reported as the auxiliary trace.
pub fn bic_select(x: &DataMatrix, series: &FitSeries, df: &[f64], method: Method) -> Result<SelectionResult> {
    let curve = bic_curve(x, series, df)?;
    let k_hat = first_local_minimum(&curve.bic, &curve.ks);
    Ok(SelectionResult {
        method,
        k_hat,
        ks: curve.ks,
        scores: curve.bic,
        aux: Some(curve.df_used),
    })
}

/// BIC with the effective degrees of freedom curve (smoothed unless
/// `use_smoothed` is false).
pub fn bic_edf_select(x: &DataMatrix, series: &FitSeries, bandwidth: f64, use_smoothed: bool) -> Result<SelectionResult> {
    let curve = df_curve(x, series, bandwidth)?;
    let df = if use_smoothed { curve.smoothed_df } else { curve.raw_df };
    bic_select(x, series, &df, Method::BicEdf)
}

/// BIC with the explicit model dimension `k d` as degrees of freedom.
pub fn bic_naive_select(x: &DataMatrix, series: &FitSeries) -> Result<SelectionResult> {
    let df: Vec<f64> = series.ks().iter().map(|&k| (k * x.d()) as f64).collect();
    bic_select(x, series, &df, Method::BicNaive)
}
