//! Index-level predictions for the spectrum of `And(k)`, by integer arithmetic only.

use serde::Serialize;

use crate::error::{Error, Result};

/// What the spectrum of `And(k)` should look like, before any eigenvalue is computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralPrediction {
    pub k: usize,
    pub n: usize,
    /// `k + ⌈k/2⌉`.
    pub distinct_count: usize,
    /// `(k, 2k - 1)`, the two indices of the smallest eigenvalue.
    pub smallest_indices: (usize, usize),
    /// `(k - 1, 2k)`, the two indices of the largest eigenvalue below `x_0`.
    pub second_largest_indices: (usize, usize),
    pub minus_one_expected: bool,
    /// `n / 2`, present iff `n` is even.
    pub minus_one_witness: Option<usize>,
    pub plus_one_expected: bool,
    /// `n / 4`, present iff `4 | n`.
    pub plus_one_witness: Option<usize>,
    /// `+1` sits on the orbit `{n/4, 3n/4}`, so it appears twice when present.
    pub plus_one_multiplicity: Option<usize>,
}

impl SpectralPrediction {
    /// Both indices carrying `+1`, when it is expected.
    pub fn plus_one_indices(&self) -> Option<(usize, usize)> {
        self.plus_one_witness.map(|q| (q, self.n - q))
    }
}

fn gate(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("spectral claims are stated for k >= 2, got k = {k}")));
    }
    Ok(())
}

pub fn predict(k: usize) -> Result<SpectralPrediction> {
    gate(k)?;
    let n = 3 * k - 1;
    let distinct_count = (3 * k).div_ceil(2);
    debug_assert_eq!(distinct_count, k + k.div_ceil(2));
    let minus_one_expected = k % 2 == 1;
    let plus_one_expected = k % 4 == 3;
    Ok(SpectralPrediction {
        k,
        n,
        distinct_count,
        smallest_indices: (k, 2 * k - 1),
        second_largest_indices: (k - 1, 2 * k),
        minus_one_expected,
        minus_one_witness: n.is_multiple_of(2).then_some(n / 2),
        plus_one_expected,
        plus_one_witness: n.is_multiple_of(4).then_some(n / 4),
        plus_one_multiplicity: plus_one_expected.then_some(2),
    })
}

/// Number-theoretic core of the `-1` membership argument.
///
/// With `g = gcd(3k - 1, k + 1)` and `3k - 1 = g·s1`, `k + 1 = g·s2`,
/// eliminating `k` gives `4 = g·(3·s2 - s1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcdCertificate {
    pub k: usize,
    pub g: usize,
    pub s1: Option<usize>,
    pub s2: Option<usize>,
    /// `None` when `g = 1` and there is nothing to decompose.
    pub a_equation_holds: Option<bool>,
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_certificate(k: usize) -> Result<GcdCertificate> {
    gate(k)?;
    let n = 3 * k - 1;
    let g = gcd(n, k + 1);
    if g == 1 {
        return Ok(GcdCertificate { k, g, s1: None, s2: None, a_equation_holds: None });
    }
    let (s1, s2) = (n / g, (k + 1) / g);
    let holds = n == g * s1 && k + 1 == g * s2 && 4 == g as i64 * (3 * s2 as i64 - s1 as i64);
    Ok(GcdCertificate { k, g, s1: Some(s1), s2: Some(s2), a_equation_holds: Some(holds) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn and5() {
        let p = predict(5).unwrap();
        assert_eq!(p.n, 14);
        assert_eq!(p.distinct_count, 8);
        assert_eq!(p.smallest_indices, (5, 9));
        assert_eq!(p.second_largest_indices, (4, 10));
        assert!(p.minus_one_expected);
        assert_eq!(p.minus_one_witness, Some(7));
        assert!(!p.plus_one_expected);
        assert_eq!(p.plus_one_witness, None);
    }

    #[test]
    fn and3() {
        let p = predict(3).unwrap();
        assert_eq!(p.distinct_count, 5);
        assert!(p.plus_one_expected);
        assert_eq!(p.plus_one_witness, Some(2));
        assert_eq!(p.plus_one_indices(), Some((2, 6)));
        assert_eq!(p.plus_one_multiplicity, Some(2));
    }

    #[test]
    fn and4() {
        let p = predict(4).unwrap();
        assert!(!p.minus_one_expected);
        assert!(!p.plus_one_expected);
        assert_eq!(p.minus_one_witness, None);
    }

    #[test]
    fn gate_below_two() {
        assert!(predict(1).is_err());
        assert!(predict(0).is_err());
        assert!(gcd_certificate(1).is_err());
    }

    #[test]
    fn distinct_count_identity_and_witness_ranges() {
        for k in 2..=10_000usize {
            let p = predict(k).unwrap();
            assert_eq!(p.distinct_count, k + k.div_ceil(2));
            assert_eq!(2 * p.distinct_count, 3 * k + (k % 2));
            assert!(p.second_largest_indices.1 < p.n);
            assert_eq!(p.minus_one_witness.is_some(), p.minus_one_expected);
            assert_eq!(p.plus_one_witness.is_some(), p.plus_one_expected);
        }
    }

    #[test]
    fn certificates() {
        let c = gcd_certificate(3).unwrap();
        assert_eq!((c.g, c.s1, c.s2, c.a_equation_holds), (4, Some(2), Some(1), Some(true)));
        let c = gcd_certificate(5).unwrap();
        assert_eq!((c.g, c.s1, c.s2, c.a_equation_holds), (2, Some(7), Some(3), Some(true)));
        let c = gcd_certificate(4).unwrap();
        assert_eq!((c.g, c.s1, c.s2, c.a_equation_holds), (1, None, None, None));
    }
}
