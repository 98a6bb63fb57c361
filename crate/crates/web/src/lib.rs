//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string; errors become JS exceptions carrying
//! the message.

use kselect::{
    adjusted_rand_index, df_curve, df_vs_kprime_curve, fit_series, generate, ideal_selection, select_all,
    stein_identity_check, LloydOptions, MixtureSpec, Scheme, SelectorConfig,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Upper bound on points sent back for plotting.
const MAX_PLOT_POINTS: usize = 2000;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Non-finite numbers have no JSON form; send them as null.
fn finite(v: &[f64]) -> Vec<Value> {
    v.iter().map(|&x| if x.is_finite() { json!(x) } else { Value::Null }).collect()
}

fn mixture(scheme: &str, k: usize, d: usize, n: usize, separation: f64, seed: u64) -> Result<MixtureSpec, String> {
    let scheme: Scheme = scheme.parse().map_err(err)?;
    let mut spec = MixtureSpec::new(scheme, k, d, n, seed);
    spec.separation = separation;
    Ok(spec)
}

/// Generates a labelled mixture, fits k-means for `1..=k_max` and runs all
/// six selectors. Returns the first two coordinates for plotting, each
/// selector's choice and scores, and the degrees-of-freedom curve.
#[wasm_bindgen]
pub fn simulate_and_select(
    scheme: &str,
    k: usize,
    d: usize,
    n: usize,
    separation: f64,
    k_max: usize,
    seed: u32,
) -> Result<String, String> {
    let data = generate(&mixture(scheme, k, d, n, separation, seed as u64)?).map_err(err)?;
    let x = &data.x;
    let series = fit_series(x, 1, k_max, 5, seed as u64, LloydOptions::default()).map_err(err)?;
    let cfg = SelectorConfig { seed: seed as u64, gap_b: 20, ..SelectorConfig::default() };
    let truths = vec![data.labels.clone()];

    let methods: Vec<Value> = select_all(x, &series, &cfg)
        .into_iter()
        .map(|(m, r)| match r {
            Ok(r) => {
                let ari = adjusted_rand_index(&series.fit(r.k_hat).assignments, &data.labels).ok();
                json!({ "method": m.as_str(), "k_hat": r.k_hat, "ks": r.ks, "scores": finite(&r.scores), "ari": ari })
            }
            Err(e) => json!({ "method": m.as_str(), "error": e.to_string() }),
        })
        .collect();

    let curve = df_curve(x, &series, cfg.bandwidth).map_err(err)?;
    let (ideal_k, ideal_ari) = ideal_selection(&series, &truths).map_err(err)?;
    let step = x.n().div_ceil(MAX_PLOT_POINTS).max(1);
    let shown: Vec<usize> = (0..x.n()).step_by(step).collect();
    let coord = |j: usize| -> Vec<f64> { shown.iter().map(|&i| x.get(i, j.min(x.d() - 1))).collect() };
    let chosen = methods
        .iter()
        .find(|m| m["method"] == "bic_edf")
        .and_then(|m| m["k_hat"].as_u64())
        .unwrap_or(1) as usize;
    let assignments = &series.fit(chosen).assignments;

    Ok(json!({
        "n": x.n(),
        "d": x.d(),
        "points": { "x": coord(0), "y": coord(1),
                    "truth": shown.iter().map(|&i| data.labels[i]).collect::<Vec<_>>(),
                    "bic_edf": shown.iter().map(|&i| assignments[i]).collect::<Vec<_>>() },
        "methods": methods,
        "df": { "ks": curve.ks, "kd": curve.ks.iter().map(|k| k * x.d()).collect::<Vec<_>>(),
                "raw": finite(&curve.raw_df), "smoothed": finite(&curve.smoothed_df) },
        "ideal": { "k": ideal_k, "ari": ideal_ari },
    })
    .to_string())
}

/// Degrees of freedom of the `k`-cluster fit as the nuisance model size
/// `k'` runs over `k..=k_prime_max`, on a generated mixture.
#[allow(clippy::too_many_arguments)]
#[wasm_bindgen]
pub fn df_vs_kprime(
    scheme: &str,
    clusters: usize,
    d: usize,
    n: usize,
    separation: f64,
    k: usize,
    k_prime_max: usize,
    seed: u32,
) -> Result<String, String> {
    if k_prime_max < k {
        return Err(format!("k' max {k_prime_max} is below k = {k}"));
    }
    let data = generate(&mixture(scheme, clusters, d, n, separation, seed as u64)?).map_err(err)?;
    let rows = df_vs_kprime_curve(&data.x, k, k..=k_prime_max, 5, seed as u64, LloydOptions::default()).map_err(err)?;
    let (kp, df): (Vec<usize>, Vec<f64>) = rows.into_iter().unzip();
    Ok(json!({ "k": k, "kd": k * d, "k_prime": kp, "df_hat": finite(&df) }).to_string())
}

/// Sample `Cov(1[X > t], X) / sigma^2` against `phi((t - mu) / sigma) / sigma`
/// for `X ~ N(mu, sigma^2)`.
#[wasm_bindgen]
pub fn stein_check(mu: f64, sigma: f64, threshold: f64, draws: usize, seed: u32) -> Result<String, String> {
    let c = stein_identity_check(mu, sigma, threshold, draws, seed as u64).map_err(err)?;
    Ok(json!({ "lhs": c.lhs, "rhs": c.rhs, "std_error": c.std_error,
               "z": (c.lhs - c.rhs) / c.std_error })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn separated_mixture_round_trip() {
        let v = parse(simulate_and_select("assumptions_met", 3, 2, 300, 8.0, 8, 1));
        assert_eq!(v["points"]["x"].as_array().unwrap().len(), 300);
        assert_eq!(v["methods"].as_array().unwrap().len(), 6);
        let edf = v["methods"].as_array().unwrap().iter().find(|m| m["method"] == "bic_edf").unwrap();
        assert_eq!(edf["k_hat"], 3);
        assert_eq!(v["df"]["ks"].as_array().unwrap().len(), 8);
        assert_eq!(v["ideal"]["k"], 3);
    }

    #[test]
    fn one_dimensional_data_plots_and_reports_fk_error() {
        let v = parse(simulate_and_select("assumptions_met", 2, 1, 100, 6.0, 5, 0));
        assert_eq!(v["points"]["x"], v["points"]["y"]);
        let fk = v["methods"].as_array().unwrap().iter().find(|m| m["method"] == "fk").unwrap();
        assert!(fk["error"].is_string());
    }

    #[test]
    fn kprime_curve_length() {
        let v = parse(df_vs_kprime("assumptions_met", 3, 2, 200, 6.0, 3, 8, 2));
        assert_eq!(v["k_prime"].as_array().unwrap().len(), 6);
        assert_eq!(v["kd"], 6);
        assert!(df_vs_kprime("assumptions_met", 3, 2, 200, 6.0, 5, 4, 2).is_err());
    }

    #[test]
    fn stein_within_noise() {
        let v = parse(stein_check(0.0, 1.0, 1.0, 200_000, 3));
        assert!(v["z"].as_f64().unwrap().abs() < 4.0);
        assert!(stein_check(0.0, -1.0, 1.0, 10, 0).is_err());
        assert!(simulate_and_select("spirals", 3, 2, 100, 6.0, 5, 0).is_err());
    }
}
