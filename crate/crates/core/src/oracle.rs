//! Dense symmetric eigensolver used as ground truth for the closed form.
//!
//! Cyclic-by-row Jacobi: sweep the strict upper triangle in row-major order,
//! annihilating each off-diagonal entry with a plane rotation, until the
//! off-diagonal Frobenius norm drops below the threshold. Nothing here
//! knows the matrix is circulant.

use serde::Serialize;

use crate::closed_form::Spectrum;
use crate::error::{Error, Result};
use crate::TOL_CLUSTER;

/// Sweeps before giving up with [`Error::NoConvergence`].
pub const MAX_SWEEPS: usize = 100;

/// Entrywise tolerance for the symmetry precondition.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Square real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::LengthMismatch { left: data.len(), right: n * n });
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch { left: row.len(), right: n });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub n: usize,
    /// Eigenvalues in ascending order.
    pub sorted_values: Vec<f64>,
    /// Completed sweeps.
    pub iterations: usize,
    pub off_diagonal_norm: f64,
}

/// `1e-12 · n`.
pub fn default_threshold(n: usize) -> f64 {
    1e-12 * n.max(1) as f64
}

/// Diagonal plus strict lower triangle packed by rows: entry `(i, j)` with
/// `j < i` lives at `row_start(i) + j`. Row `q` is therefore column `q` above
/// the diagonal, which is what a rotation in the `(p, q)` plane reads.
struct PackedLower {
    n: usize,
    diag: Vec<f64>,
    low: Vec<f64>,
}

/// Rows whose deferred updates are replayed side by side (independent dependency chains).
/// [`replay_rows`] is written out for exactly this many.
const REPLAY_LANES: usize = 4;
const _: () = assert!(REPLAY_LANES == 4);

/// Applies `rot` (rotations `(p, p+1)`, … in order) to the pairs `(col[i], row_i[p+1+j])`
/// for the `REPLAY_LANES` consecutive packed rows starting at row `first` in `block`.
fn replay_rows(block: &mut [f64], first: usize, p: usize, col: &mut [f64], rot: &[Option<(f64, f64)>]) {
    let (r0, rest) = block.split_at_mut(first);
    let (r1, rest) = rest.split_at_mut(first + 1);
    let (r2, r3) = rest.split_at_mut(first + 2);
    let m = rot.len();
    let (r0, r1, r2, r3) =
        (&mut r0[p + 1..p + 1 + m], &mut r1[p + 1..p + 1 + m], &mut r2[p + 1..p + 1 + m], &mut r3[p + 1..p + 1 + m]);
    let [mut v0, mut v1, mut v2, mut v3] = [col[0], col[1], col[2], col[3]];
    for j in 0..m {
        if let Some((c, s)) = rot[j] {
            (v0, r0[j]) = (c * v0 - s * r0[j], s * v0 + c * r0[j]);
            (v1, r1[j]) = (c * v1 - s * r1[j], s * v1 + c * r1[j]);
            (v2, r2[j]) = (c * v2 - s * r2[j], s * v2 + c * r2[j]);
            (v3, r3[j]) = (c * v3 - s * r3[j], s * v3 + c * r3[j]);
        }
    }
    col[..4].copy_from_slice(&[v0, v1, v2, v3]);
}

fn row_start(i: usize) -> usize {
    i * i.saturating_sub(1) / 2
}

impl PackedLower {
    fn from_symmetric(m: &DenseMatrix) -> Self {
        let n = m.n();
        let diag = (0..n).map(|i| m.get(i, i)).collect();
        let mut low = Vec::with_capacity(row_start(n));
        for i in 0..n {
            for j in 0..i {
                low.push(0.5 * (m.get(i, j) + m.get(j, i)));
            }
        }
        Self { n, diag, low }
    }

    fn off_diagonal_norm(&self) -> f64 {
        (2.0 * self.low.iter().map(|x| x * x).sum::<f64>()).sqrt()
    }

    /// Rotations `(p, p+1), …, (p, n-1)` in order, each zeroing `a[p][q]`
    /// unless it is already below `skip_below`.
    ///
    /// Column `p` is held in `col` for the whole run. Rotation `(p, q)` mixes
    /// it with column `q`; the part of column `q` above the diagonal is row `q`
    /// of the packed triangle. The entries below, `(r, q)` with `r > q`, are
    /// touched later when row `r` is reached by replaying the stored `(c, s)`
    /// in order, so every entry sees the same updates in the same order as in
    /// the textbook loop and all memory access stays contiguous.
    fn rotate_row(&mut self, p: usize, skip_below: f64, col: &mut [f64], rot: &mut [Option<(f64, f64)>]) {
        let n = self.n;
        col[..p].copy_from_slice(&self.low[row_start(p)..row_start(p) + p]);
        for (x, v) in col.iter_mut().enumerate().skip(p + 1) {
            *v = self.low[row_start(x) + p];
        }
        let mut app = self.diag[p];
        for q in p + 1..n {
            if (q - p - 1).is_multiple_of(REPLAY_LANES) && q + REPLAY_LANES <= n {
                // Rotations before q are known, so rows q..q+LANES can replay them together.
                let start = row_start(q);
                let block = &mut self.low[start..row_start(q + REPLAY_LANES)];
                replay_rows(block, q, p, &mut col[q..q + REPLAY_LANES], &rot[p + 1..q]);
            }
            let lane_start = q - (q - p - 1) % REPLAY_LANES;
            let replayed = if lane_start + REPLAY_LANES <= n { lane_start } else { p + 1 };
            let row = &mut self.low[row_start(q)..row_start(q) + q];
            let mut apq = col[q];
            for (a, r) in row[replayed..].iter_mut().zip(&rot[replayed..q]) {
                if let Some((c, s)) = *r {
                    (apq, *a) = (c * apq - s * *a, s * apq + c * *a);
                }
            }
            if apq.abs() < skip_below {
                col[q] = apq;
                rot[q] = None;
                continue;
            }
            let aqq = self.diag[q];
            let theta = (aqq - app) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
            let c = 1.0 / t.hypot(1.0);
            let s = t * c;
            let (below, rest) = row.split_at_mut(p);
            for (x, a) in col[..p].iter_mut().zip(below) {
                (*x, *a) = (c * *x - s * *a, s * *x + c * *a);
            }
            for (x, a) in col[p + 1..q].iter_mut().zip(&mut rest[1..]) {
                (*x, *a) = (c * *x - s * *a, s * *x + c * *a);
            }
            app -= t * apq;
            self.diag[q] = aqq + t * apq;
            col[q] = 0.0;
            rot[q] = Some((c, s));
        }
        self.diag[p] = app;
        self.low[row_start(p)..row_start(p) + p].copy_from_slice(&col[..p]);
        for (x, &v) in col.iter().enumerate().skip(p + 1) {
            self.low[row_start(x) + p] = v;
        }
    }
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm is below `threshold`
/// (see [`default_threshold`]). Entries smaller than `threshold / 2n` are
/// left alone; if all of them are, the norm is already under `threshold / 2`.
pub fn jacobi_eigenvalues(m: &DenseMatrix, threshold: f64) -> Result<OracleResult> {
    jacobi_with_sweep_cap(m, threshold, MAX_SWEEPS)
}

fn jacobi_with_sweep_cap(m: &DenseMatrix, threshold: f64, max_sweeps: usize) -> Result<OracleResult> {
    let n = m.n();
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    if threshold.is_nan() || threshold <= 0.0 {
        return Err(Error::InvalidParameter(format!("threshold must be positive, got {threshold}")));
    }
    for row in 0..n {
        for col in row + 1..n {
            if (m.get(row, col) - m.get(col, row)).abs() > SYMMETRY_TOL {
                return Err(Error::NotSymmetric { row, col });
            }
        }
    }

    let mut a = PackedLower::from_symmetric(m);
    let skip_below = threshold / (2.0 * n as f64);
    let mut col = vec![0.0; n];
    let mut rot = vec![None; n];
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off < threshold {
            let mut sorted_values = a.diag;
            sorted_values.sort_by(f64::total_cmp);
            return Ok(OracleResult { n, sorted_values, iterations: sweeps, off_diagonal_norm: off });
        }
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        for p in 0..n - 1 {
            a.rotate_row(p, skip_below, &mut col, &mut rot);
        }
        sweeps += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub max_abs_dev: f64,
    pub matched: bool,
}

/// Sorts `spectrum` and compares it positionally with the oracle; matched iff the
/// largest deviation is below `TOL_CLUSTER`.
pub fn compare_spectra(spectrum: &Spectrum, oracle: &OracleResult) -> Result<SpectrumComparison> {
    if spectrum.values.len() != oracle.sorted_values.len() {
        return Err(Error::LengthMismatch { left: spectrum.values.len(), right: oracle.sorted_values.len() });
    }
    let max_abs_dev =
        spectrum.sorted_values().iter().zip(&oracle.sorted_values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(SpectrumComparison { max_abs_dev, matched: max_abs_dev < TOL_CLUSTER })
}

/// Greedy left-to-right clustering of ascending values.
///
/// A value joins the current cluster when it is within `tol` of the cluster's
/// first member. Returns `(mean, multiplicity)` per cluster.
pub fn cluster_distinct(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut clusters: Vec<(f64, f64, usize)> = Vec::new(); // (first, sum, count)
    for &v in values {
        match clusters.last_mut() {
            Some((first, sum, count)) if v - *first <= tol => {
                *sum += v;
                *count += 1;
            }
            _ => clusters.push((v, v, 1)),
        }
    }
    clusters.into_iter().map(|(_, sum, count)| (sum / count as f64, count)).collect()
}
