//! Independent reference implementations shared by the integration and
//! acceptance tests.
#![allow(dead_code)]

use kselect::rng::task_rng;
use kselect::{DataMatrix, KMeansFit, NuisanceParams};
use rand::Rng;

/// `n x d` matrix of uniform draws on `[-scale, scale]`.
pub fn uniform_data(seed: u64, n: usize, d: usize, scale: f64) -> DataMatrix {
    let mut rng = task_rng(seed, &[0xda7a]);
    let values = (0..n * d).map(|_| rng.random_range(-scale..scale)).collect();
    DataMatrix::from_vec(n, d, values).unwrap()
}

fn gauss(z: f64) -> f64 {
    (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Centroid of cluster `c` after moving entry `(i, j)` by `t` while the
/// partition stays fixed.
fn dragged_centroid(x: &DataMatrix, fit: &KMeansFit, i: usize, j: usize, t: f64, c: usize) -> Vec<f64> {
    let mut sum = vec![0.0; x.d()];
    let mut count = 0.0;
    for r in 0..x.n() {
        if fit.assignments[r] == c {
            count += 1.0;
            for (q, s) in sum.iter_mut().enumerate() {
                *s += x.get(r, q) + if r == i && q == j { t } else { 0.0 };
            }
        }
    }
    sum.iter().map(|s| s / count).collect()
}

/// Centroid of cluster `l` with the moved point added to it.
fn joined_centroid(x: &DataMatrix, fit: &KMeansFit, i: usize, j: usize, t: f64, l: usize) -> Vec<f64> {
    let mut sum: Vec<f64> = x.row(i).to_vec();
    sum[j] += t;
    let mut count = 1.0;
    for r in 0..x.n() {
        if fit.assignments[r] == l {
            count += 1.0;
            for (q, s) in sum.iter_mut().enumerate() {
                *s += x.get(r, q);
            }
        }
    }
    sum.iter().map(|s| s / count).collect()
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum()
}

/// Positive when the moved point is closer to `l` than to its own
/// (dragged) centroid.
fn switch_gap(x: &DataMatrix, fit: &KMeansFit, i: usize, j: usize, t: f64, l: usize) -> f64 {
    let mut p = x.row(i).to_vec();
    p[j] += t;
    let c = fit.assignments[i];
    dist2(&p, &dragged_centroid(x, fit, i, j, t, c)) - dist2(&p, fit.centroid(l))
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Crossing nearest zero, scanning outwards on both sides; the negative
/// side wins at equal distance.
fn nearest_crossing(f: impl Fn(f64) -> f64, reach: f64, steps: usize) -> Option<f64> {
    let f0 = f(0.0);
    if f0 == 0.0 {
        return Some(0.0);
    }
    let h = reach / steps as f64;
    let side = |dir: f64| {
        let mut prev = 0.0;
        for s in 1..=steps {
            let t = dir * s as f64 * h;
            if (f(t) > 0.0) != (f0 > 0.0) {
                return Some(bisect(&f, prev, t));
            }
            prev = t;
        }
        None
    };
    match (side(-1.0), side(1.0)) {
        (Some(a), Some(b)) => Some(if -a <= b { a } else { b }),
        (a, b) => a.or(b),
    }
}

/// Excess degrees of freedom by direct search: every entry, every other
/// cluster, the switch point located numerically and the jump read off the
/// two fitted-value pieces on either side of it.
pub fn brute_force_excess(x: &DataMatrix, fit: &KMeansFit, nuis: &NuisanceParams) -> f64 {
    let span = x.values().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let reach = 8.0 * (span + 1.0) * x.n() as f64;
    let mut total = 0.0;
    for i in 0..x.n() {
        let c = fit.assignments[i];
        for j in 0..x.d() {
            for l in (0..fit.k).filter(|&l| l != c) {
                let Some(delta) = nearest_crossing(|t| switch_gap(x, fit, i, j, t, l), reach, 40_000) else {
                    continue;
                };
                let stay = dragged_centroid(x, fit, i, j, delta, c)[j];
                let moved = joined_centroid(x, fit, i, j, delta, l)[j];
                // right limit minus left limit
                let jump = if delta >= 0.0 { moved - stay } else { stay - moved };
                let z = (x.get(i, j) + delta - nuis.mu_tilde.get(i, j)) / nuis.sigma_tilde;
                total += gauss(z) * jump;
            }
        }
    }
    total / nuis.sigma_tilde
}

/// Adjusted Rand index from explicit pair enumeration.
pub fn ari_by_pairs(a: &[usize], b: &[usize]) -> f64 {
    let n = a.len();
    let (mut both, mut in_a, mut in_b, mut pairs) = (0.0, 0.0, 0.0, 0.0);
    for p in 0..n {
        for q in p + 1..n {
            pairs += 1.0;
            let sa = a[p] == a[q];
            let sb = b[p] == b[q];
            both += f64::from(u8::from(sa && sb));
            in_a += f64::from(u8::from(sa));
            in_b += f64::from(u8::from(sb));
        }
    }
    let expected = in_a * in_b / pairs;
    let max = 0.5 * (in_a + in_b);
    if max == expected {
        return if in_a == in_b { 1.0 } else { 0.0 };
    }
    (both - expected) / (max - expected)
}

/// Every set partition of `n` points as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.iter().max().map_or(0, |m| m + 1);
        for label in 0..=top {
            prefix.push(label);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        grow(&mut vec![0], n, &mut out);
    }
    out
}
