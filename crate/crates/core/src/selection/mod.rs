//! Selectors for the number of clusters over a shared [`FitSeries`].

pub mod bic;
pub mod fk;
pub mod gap;
pub mod jump;
pub mod silhouette;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::data::DataMatrix;
use crate::error::{invalid, Error, Result};
use crate::kmeans::FitSeries;

pub use bic::{bic_curve, bic_edf_select, bic_naive_select, bic_select, rss_floor, BicCurve};
pub use fk::{fk_alphas, fk_select, fk_values, FK_THRESHOLD};
pub use gap::{gap_rule, gap_select, GapStatistic};
pub use jump::{jump_rule, jump_select};
pub use silhouette::{mean_silhouette, silhouette_select};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BicEdf,
    BicNaive,
    Gap,
    Fk,
    Silhouette,
    Jump,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Fk,
        Method::Gap,
        Method::Silhouette,
        Method::Jump,
        Method::BicNaive,
        Method::BicEdf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::BicEdf => "bic_edf",
            Method::BicNaive => "bic_naive",
            Method::Gap => "gap",
            Method::Fk => "fk",
            Method::Silhouette => "silhouette",
            Method::Jump => "jump",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown method '{s}'")))
    }
}

/// Outcome of one selector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelectionResult {
    pub method: Method,
    pub k_hat: usize,
    /// Cluster counts the scores refer to.
    pub ks: Vec<usize>,
    /// Per-k criterion values; undefined entries are NaN.
    pub scores: Vec<f64>,
    /// Secondary per-k trace (gap standard errors, degrees of freedom, ...).
    pub aux: Option<Vec<f64>>,
}

/// Smallest `k` at an interior local minimum: strictly below its left
/// neighbour and no greater than its right neighbour. Without one, the
/// endpoint with the lower score (ties to the first).
pub fn first_local_minimum(scores: &[f64], ks: &[usize]) -> usize {
    assert_eq!(scores.len(), ks.len(), "scores and ks must align");
    assert!(!ks.is_empty(), "need at least one score");
    for i in 1..scores.len().saturating_sub(1) {
        if scores[i] < scores[i - 1] && scores[i] <= scores[i + 1] {
            return ks[i];
        }
    }
    let last = scores.len() - 1;
    if scores[last] < scores[0] {
        ks[last]
    } else {
        ks[0]
    }
}

/// Index of the largest finite value, earliest on ties.
pub(crate) fn argmax(values: &[f64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, v) in values.iter().enumerate() {
        if v.is_nan() {
            continue;
        }
        if best.is_none_or(|b| *v > values[b]) {
            best = Some(i);
        }
    }
    best
}

/// Index of the smallest finite value, earliest on ties.
pub(crate) fn argmin(values: &[f64]) -> Option<usize> {
    let neg: Vec<f64> = values.iter().map(|v| -v).collect();
    argmax(&neg)
}

/// Settings shared by [`select_all`].
#[derive(Debug, Clone, PartialEq)]
pub struct SelectorConfig {
    pub methods: Vec<Method>,
    /// Local-linear bandwidth for the degrees-of-freedom curve, in k units.
    pub bandwidth: f64,
    pub use_smoothed: bool,
    pub gap_b: usize,
    /// Jump transform exponent; `None` means `d / 2`.
    pub jump_power: Option<f64>,
    pub seed: u64,
}

impl Default for SelectorConfig {
    fn default() -> Self {
        Self {
            methods: Method::ALL.to_vec(),
            bandwidth: 3.0,
            use_smoothed: true,
            gap_b: 50,
            jump_power: None,
            seed: 0,
        }
    }
}

/// Runs a single selector.
pub fn run_method(x: &DataMatrix, series: &FitSeries, method: Method, cfg: &SelectorConfig) -> Result<SelectionResult> {
    match method {
        Method::BicEdf => bic_edf_select(x, series, cfg.bandwidth, cfg.use_smoothed),
        Method::BicNaive => bic_naive_select(x, series),
        Method::Gap => gap_select(x, series, cfg.gap_b, cfg.seed),
        Method::Fk => fk_select(x, series),
        Method::Silhouette => silhouette_select(x, series),
        Method::Jump => jump_select(x, series, cfg.jump_power),
    }
}

/// Runs every enabled selector on the same fits. A failing selector does
/// not stop the others.
pub fn select_all(
    x: &DataMatrix,
    series: &FitSeries,
    cfg: &SelectorConfig,
) -> Vec<(Method, Result<SelectionResult>)> {
    cfg.methods
        .par_iter()
        .map(|&m| (m, run_method(x, series, m, cfg)))
        .collect()
}
