mod common;

use common::{brute_force_excess, uniform_data};
use kselect::edf::phi;
use kselect::{
    best_of_inits, excess_df, fit_series, monte_carlo_df_oracle, nuisance_from_fit, NuisanceParams, stein_identity_check, total_df,
    DataMatrix, LloydOptions,
};

fn opts() -> LloydOptions {
    LloydOptions::default()
}

#[test]
fn closed_form_excess_matches_direct_search() {
    let (mut checked, mut nonzero) = (0, 0);
    for seed in 0..20u64 {
        let n = 4 + (seed % 3) as usize;
        let d = 1 + (seed % 2) as usize;
        let x = uniform_data(seed, n, d, 3.0);
        for k in 2..=3.min(n - 2) {
            let fit = best_of_inits(&x, k, 5, seed, opts()).unwrap();
            let plug_in = nuisance_from_fit(&x, &best_of_inits(&x, k + 1, 5, seed, opts()).unwrap()).unwrap();
            // a wide scale keeps every density weight away from underflow
            let wide = NuisanceParams { sigma_tilde: 1.5, ..plug_in.clone() };
            for nuis in [plug_in, wide] {
                let fast = excess_df(&x, &fit, &nuis).unwrap();
                let slow = brute_force_excess(&x, &fit, &nuis);
                let scale = fast.abs().max(slow.abs()).max(1e-12);
                assert!((fast - slow).abs() <= 1e-6 * scale, "seed {seed} k {k}: {fast} vs {slow}");
                checked += 1;
                nonzero += usize::from(fast.abs() > 1e-3);
            }
        }
    }
    assert!(checked >= 50);
    assert!(nonzero >= 30, "{nonzero}");
}

#[test]
fn zero_excess_gives_kd_exactly() {
    for seed in 0..50u64 {
        let n = 8 + (seed % 5) as usize;
        let d = 1 + (seed % 3) as usize;
        let x = uniform_data(seed, n, d, 2.0);
        for k in 1..=5 {
            let fit = best_of_inits(&x, k, 2, seed, opts()).unwrap();
            assert_eq!(total_df(&fit, 0.0), (k * d) as f64);
        }
        let one = best_of_inits(&x, 1, 1, seed, opts()).unwrap();
        let nuis = nuisance_from_fit(&x, &best_of_inits(&x, 2, 1, seed, opts()).unwrap()).unwrap();
        assert_eq!(excess_df(&x, &one, &nuis).unwrap(), 0.0);
    }
}

#[test]
fn excess_is_invariant_to_row_order() {
    let x = uniform_data(11, 30, 2, 2.0);
    let series = fit_series(&x, 1, 4, 5, 3, opts()).unwrap();
    let fit = series.fit(3);
    let nuis = nuisance_from_fit(&x, series.fit(5)).unwrap();
    let base = excess_df(&x, fit, &nuis).unwrap();

    let perm: Vec<usize> = (0..30).rev().collect();
    let px = x.permute_rows(&perm).unwrap();
    let mut pfit = fit.clone();
    pfit.assignments = perm.iter().map(|&i| fit.assignments[i]).collect();
    let pnuis = NuisanceParams { mu_tilde: nuis.mu_tilde.permute_rows(&perm).unwrap(), ..nuis.clone() };
    let permuted = excess_df(&px, &pfit, &pnuis).unwrap();
    assert!((base - permuted).abs() <= 1e-9 * base.abs().max(1.0));
}

#[test]
fn stein_identity_with_a_step() {
    let check = stein_identity_check(0.0, 1.0, 1.0, 1_000_000, 5).unwrap();
    assert!((check.rhs - phi(1.0)).abs() < 1e-15);
    assert!((check.lhs - 0.241_970_724_519_143_37).abs() <= 3.0 * check.std_error);
}

#[test]
fn sampling_oracle_for_one_cluster_is_d() {
    // k = 1: fitted values are column means, so the covariance sums to d
    let mu = DataMatrix::from_vec(40, 3, vec![0.0; 120]).unwrap();
    let df = monte_carlo_df_oracle(&mu, 1.0, 1, 2000, 1, 9, opts()).unwrap();
    assert!((df - 3.0).abs() < 0.5, "{df}");
}
