//! Dense row-major data matrices and column scaling.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// An `n x d` matrix of finite reals, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrix {
    values: Vec<f64>,
    n: usize,
    d: usize,
}

impl DataMatrix {
    pub fn from_vec(n: usize, d: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::Empty);
        }
        if values.len() != n * d {
            return Err(Error::ShapeMismatch { expected: n * d, got: values.len() });
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { row: pos / d, col: pos % d });
        }
        Ok(Self { values, n, d })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, |r| r.as_ref().len());
        let mut values = Vec::with_capacity(n * d);
        for r in rows {
            let r = r.as_ref();
            if r.len() != d {
                return Err(Error::ShapeMismatch { expected: n * d, got: n * r.len() });
            }
            values.extend_from_slice(r);
        }
        Self::from_vec(n, d, values)
    }

    /// Builds a one-column matrix.
    pub fn from_column(values: &[f64]) -> Result<Self> {
        Self::from_vec(values.len(), 1, values.to_vec())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.d..(i + 1) * self.d]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.d + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.d)
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows().map(|r| r[j]).collect()
    }

    pub fn column_means(&self) -> Vec<f64> {
        let mut means = vec![0.0; self.d];
        for r in self.rows() {
            for (m, v) in means.iter_mut().zip(r) {
                *m += v;
            }
        }
        let n = self.n as f64;
        means.iter_mut().for_each(|m| *m /= n);
        means
    }

    /// Sample variances (denominator `n - 1`); zero when `n == 1`.
    pub fn column_variances(&self) -> Vec<f64> {
        let means = self.column_means();
        let mut ss = vec![0.0; self.d];
        for r in self.rows() {
            for j in 0..self.d {
                let e = r[j] - means[j];
                ss[j] += e * e;
            }
        }
        if self.n < 2 {
            return vec![0.0; self.d];
        }
        let denom = (self.n - 1) as f64;
        ss.into_iter().map(|s| s / denom).collect()
    }

    /// Sum of squared deviations of every entry from its column mean.
    pub fn total_ss(&self) -> f64 {
        let means = self.column_means();
        self.rows()
            .map(|r| r.iter().zip(&means).map(|(v, m)| (v - m) * (v - m)).sum::<f64>())
            .sum()
    }

    pub fn column_ranges(&self) -> Vec<(f64, f64)> {
        let mut ranges = vec![(f64::INFINITY, f64::NEG_INFINITY); self.d];
        for r in self.rows() {
            for (rg, &v) in ranges.iter_mut().zip(r) {
                rg.0 = rg.0.min(v);
                rg.1 = rg.1.max(v);
            }
        }
        ranges
    }

    /// Row indices sorted lexicographically by row contents.
    pub(crate) fn sorted_row_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| cmp_rows(self.row(a), self.row(b)).then(a.cmp(&b)));
        order
    }

    /// Indices of the first occurrence of every distinct row, in row order.
    pub fn distinct_rows(&self) -> Vec<usize> {
        let order = self.sorted_row_order();
        let mut keep = Vec::with_capacity(self.n);
        for (pos, &i) in order.iter().enumerate() {
            if pos == 0 || cmp_rows(self.row(order[pos - 1]), self.row(i)) != Ordering::Equal {
                keep.push(i);
            }
        }
        keep.sort_unstable();
        keep
    }

    /// A content hash that does not depend on the order of the rows.
    pub fn row_order_free_hash(&self) -> u64 {
        let order = self.sorted_row_order();
        let h = crate::rng::derive_seed(self.n as u64, &[self.d as u64]);
        order
            .into_iter()
            .fold(h, |h, i| crate::rng::hash_f64s(h, self.row(i)))
    }

    /// Returns a copy with the rows reordered by `perm` (row `i` of the result is row `perm[i]`).
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch(perm.len(), self.n));
        }
        let mut values = Vec::with_capacity(self.values.len());
        for &p in perm {
            values.extend_from_slice(self.row(p));
        }
        Self::from_vec(self.n, self.d, values)
    }
}

fn cmp_rows(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

/// Scales every column to unit sample variance. Columns are not centred.
///
/// With `strict` a zero-variance column is an error; otherwise it is passed
/// through unchanged.
pub fn standardize(x: &DataMatrix, strict: bool) -> Result<DataMatrix> {
    let vars = x.column_variances();
    let mut scale = Vec::with_capacity(x.d());
    for (j, v) in vars.iter().enumerate() {
        if *v > 0.0 {
            scale.push(1.0 / v.sqrt());
        } else if strict {
            return Err(Error::ConstantColumn(j));
        } else {
            scale.push(1.0);
        }
    }
    let values = x
        .rows()
        .flat_map(|r| r.iter().zip(&scale).map(|(v, s)| v * s))
        .collect();
    DataMatrix::from_vec(x.n(), x.d(), values)
}
