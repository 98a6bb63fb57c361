//! Local-linear kernel regression on a one-dimensional grid.

/// Bandwidths below this are treated as the zero-bandwidth limit, which
/// returns the input unchanged.
pub const MIN_BANDWIDTH: f64 = 1e-6;

/// Local-linear regression of `ys` on `xs` with a Gaussian kernel, evaluated
/// at each of the `xs`.
///
/// Affine input is reproduced exactly (up to rounding).
pub fn local_linear_smooth(xs: &[f64], ys: &[f64], bandwidth: f64) -> Vec<f64> {
    assert_eq!(xs.len(), ys.len(), "xs and ys must have equal length");
    if bandwidth < MIN_BANDWIDTH || xs.len() < 2 {
        return ys.to_vec();
    }
    xs.iter()
        .map(|&x0| {
            let (mut s0, mut s1, mut s2, mut t0, mut t1) = (0.0, 0.0, 0.0, 0.0, 0.0);
            for (&x, &y) in xs.iter().zip(ys) {
                let u = x - x0;
                let z = u / bandwidth;
                let w = (-0.5 * z * z).exp();
                s0 += w;
                s1 += w * u;
                s2 += w * u * u;
                t0 += w * y;
                t1 += w * u * y;
            }
            let det = s0 * s2 - s1 * s1;
            // a single effective support point degenerates to the kernel mean
            if det <= 1e-12 * s0 * s2 {
                t0 / s0
            } else {
                (s2 * t0 - s1 * t1) / det
            }
        })
        .collect()
}
