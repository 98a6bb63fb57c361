use kselect::smooth::local_linear_smooth;
use proptest::prelude::*;

proptest! {
    #[test]
    fn affine_sequences_are_reproduced(
        a in -100.0f64..100.0,
        b in -20.0f64..20.0,
        len in 1usize..40,
        h in 0.3f64..10.0,
    ) {
        let xs: Vec<f64> = (1..=len).map(|k| k as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| a + b * x).collect();
        for (s, y) in local_linear_smooth(&xs, &ys, h).iter().zip(&ys) {
            prop_assert!((s - y).abs() <= 1e-9, "{} vs {}", s, y);
        }
    }

    #[test]
    fn very_wide_kernels_fit_one_global_line(
        ys in prop::collection::vec(-10.0f64..10.0, 3..30),
    ) {
        let xs: Vec<f64> = (0..ys.len()).map(|k| k as f64).collect();
        let out = local_linear_smooth(&xs, &ys, 1e9);
        // an infinitely wide kernel fits one global line
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        for (x, s) in xs.iter().zip(&out) {
            prop_assert!((s - (my + sxy / sxx * (x - mx))).abs() < 1e-6);
        }
    }
}

#[test]
fn degenerate_bandwidth_returns_input() {
    let ys = [3.0, -1.0, 7.5];
    assert_eq!(local_linear_smooth(&[1.0, 2.0, 3.0], &ys, 0.0), ys.to_vec());
}
