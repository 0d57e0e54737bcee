//! Eigenvalues of `And(k)` from the circulant Fourier sum.
//!
//! For a circulant with first row `a`, `x_l = Σ_j a_j ω^{lj}` with `ω` a
//! primitive `n`-th root of unity. For the Andrásfai set the terms pair up as
//! `ω^{sl} + ω^{-sl} = 2 cos(2π s l / n)`, leaving a lone `ω^{l n/2} = (-1)^l`
//! when `n` is even (`k` odd).

use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which computation produced a [`Spectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumSource {
    ClosedForm,
    GeneralCirculant,
    Oracle,
}

impl fmt::Display for SpectrumSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ClosedForm => "closed-form",
            Self::GeneralCirculant => "general-circulant",
            Self::Oracle => "oracle",
        })
    }
}

/// Indexed eigenvalues `x_0 … x_{n-1}`; `values[l]` belongs to the character `l` of `Z_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub k: Option<usize>,
    pub n: usize,
    pub values: Vec<f64>,
    pub source: SpectrumSource,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Structural pairs `(l, n - l)` with `0 < l < n - l`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..n).filter(|&l| l < n - l).map(|l| (l, n - l)).collect()
    }

    /// `max_l |x_l - x_{n-l}|` over `1 ≤ l ≤ n-1`.
    pub fn palindrome_defect(&self) -> f64 {
        let n = self.n;
        (1..n).map(|l| (self.values[l] - self.values[n - l]).abs()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    pub fn sorted_values(&self) -> Vec<f64> {
        let mut sorted = self.values.clone();
        sorted.sort_by(f64::total_cmp);
        sorted
    }

    /// Every index whose value lies within `tol` of the minimum.
    pub fn argmin_set(&self, tol: f64) -> Vec<usize> {
        let min = self.values.iter().copied().fold(f64::INFINITY, f64::min);
        (0..self.n).filter(|&l| (self.values[l] - min).abs() <= tol).collect()
    }

    /// Every index `l ≥ 1` whose value lies within `tol` of `max_{l ≥ 1} x_l`.
    pub fn argmax_nontrivial_set(&self, tol: f64) -> Vec<usize> {
        let max = self.values[1..].iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (1..self.n).filter(|&l| (self.values[l] - max).abs() <= tol).collect()
    }
}

fn check_k(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParameter("Andrásfai parameter k must be at least 1".into()));
    }
    Ok(3 * k - 1)
}

// 2 cos(2π s l / n) with the product s·l reduced mod n in integers first.
fn paired_term(s: usize, l: usize, n: usize) -> f64 {
    let r = (s as u128 * l as u128 % n as u128) as f64;
    2.0 * (TAU * r / n as f64).cos()
}

fn eigenvalue_unchecked(k: usize, n: usize, l: usize) -> f64 {
    if l == 0 {
        return k as f64;
    }
    // k even: j = 0..=(k-2)/2, k odd: j = 0..=(k-3)/2; both are k/2 terms (integer division).
    let cosine_sum: f64 = (0..k / 2).map(|j| paired_term(3 * j + 1, l, n)).sum();
    if k.is_multiple_of(2) {
        cosine_sum
    } else if l.is_multiple_of(2) {
        cosine_sum + 1.0
    } else {
        cosine_sum - 1.0
    }
}

/// `x_l` of `And(k)` from the parity-split cosine sum.
///
/// `k = 1` is accepted and gives `x_l = (-1)^l` (the spectrum of `K_2`).
pub fn eigenvalue_closed_form(k: usize, l: usize) -> Result<f64> {
    let n = check_k(k)?;
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l, n });
    }
    Ok(eigenvalue_unchecked(k, n, l))
}

pub fn spectrum_closed_form(k: usize) -> Result<Spectrum> {
    let n = check_k(k)?;
    let values = (0..n).map(|l| eigenvalue_unchecked(k, n, l)).collect();
    Ok(Spectrum { k: Some(k), n, values, source: SpectrumSource::ClosedForm })
}

/// Spectrum of any real-symmetric circulant from its first row, `x_l = Σ_j a_j cos(2π l j / n)`.
pub fn spectrum_general_circulant(first_row: &[u8]) -> Result<Spectrum> {
    let n = first_row.len();
    if n == 0 {
        return Err(Error::InvalidParameter("empty first row".into()));
    }
    if first_row[0] != 0 {
        return Err(Error::InvalidParameter("first row must have a zero diagonal entry".into()));
    }
    if let Some(column) = (1..n).find(|&j| first_row[j] != first_row[n - j]) {
        return Err(Error::AsymmetricRow { column });
    }
    let support: Vec<(usize, f64)> =
        first_row.iter().enumerate().filter(|&(_, &a)| a != 0).map(|(j, &a)| (j, f64::from(a))).collect();
    let values = (0..n)
        .map(|l| {
            let (mut re, mut im) = (0.0, 0.0);
            for &(j, a) in &support {
                let theta = TAU * ((j * l) % n) as f64 / n as f64;
                re += a * theta.cos();
                im += a * theta.sin();
            }
            debug_assert!(im.abs() < crate::TOL_SYM, "imaginary part {im} at l={l}");
            re
        })
        .collect();
    Ok(Spectrum { k: None, n, values, source: SpectrumSource::GeneralCirculant })
}
