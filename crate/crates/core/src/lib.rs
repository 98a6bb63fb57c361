//! Choosing the number of clusters in k-means with effective degrees of
//! freedom.
//!
//! The crate fits k-means models over a range of `k` ([`kmeans`]), estimates
//! the effective degrees of freedom of each fit including the excess
//! contributed by cluster reassignments ([`edf`]), and plugs them into a BIC
//! whose first local minimum selects `k` ([`selection`]). Five standard
//! selectors (naive BIC, gap, fK, silhouette, jump) run on the same fits for
//! comparison; [`simulate`] and [`evaluate`] provide labelled benchmark data
//! and agreement metrics.

// `!(x > 0.0)` style checks are meant to reject NaN too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod data;
pub mod edf;
pub mod error;
pub mod evaluate;
pub mod kmeans;
pub mod rng;
pub mod selection;
pub mod simulate;
pub mod smooth;

pub use data::{standardize, DataMatrix};
pub use edf::{
    df_curve, df_vs_kprime_curve, discontinuity_magnitude, excess_df, monte_carlo_df_oracle,
    nuisance_from_fit, oracle_comparison, reassignment_delta, stein_identity_check, total_df,
    DfCurve, NuisanceParams, OracleRow, SteinCheck,
};
pub use error::{Error, Result};
pub use evaluate::{adjusted_rand_index, ideal_selection, normalized_regret, rand_index, summarize, Summary};
pub use kmeans::{best_of_inits, fit_series, fitted_values, lloyd_fit, FitSeries, KMeansFit, LloydOptions};
pub use selection::{first_local_minimum, select_all, Method, SelectionResult, SelectorConfig};
pub use simulate::{generate, run_scenario, LabeledDataset, MixtureSpec, ScenarioConfig, Scheme};
