//! Monic scalar polynomials with complex coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// `a_0 + a_1 λ + … + λ^m`, stored in ascending powers with `a_m = 1`.
///
/// The classical root bounds are written for `λ^m − c_{m−1}λ^{m−1} − … − c_0`;
/// [`MonicPolynomial::c`] returns those `c_i = −a_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<Complex64>,
}

impl MonicPolynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::DegreeZero);
        }
        if coeffs.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFiniteEntry {
                context: "polynomial coefficients".into(),
            });
        }
        if *coeffs.last().unwrap() != Complex64::new(1.0, 0.0) {
            return Err(Error::NonMonicLeading);
        }
        Ok(Self { coeffs })
    }

    /// Builds `λ^m − c_{m−1}λ^{m−1} − … − c_0` from `c = [c_0, …, c_{m−1}]`.
    pub fn from_c(c: &[Complex64]) -> Result<Self> {
        let mut coeffs: Vec<Complex64> = c.iter().map(|z| -z).collect();
        coeffs.push(Complex64::new(1.0, 0.0));
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ascending coefficients `a_0..a_m`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `c_i = −a_i` for `i < m`.
    pub fn c(&self, i: usize) -> Complex64 {
        assert!(i < self.degree(), "c_i is defined for i < m");
        -self.coeffs[i]
    }

    /// Moduli `|c_0|, …, |c_{m−1}|`.
    pub fn c_abs(&self) -> Vec<f64> {
        self.coeffs[..self.degree()].iter().map(|z| z.norm()).collect()
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// Companion matrix with ones on the superdiagonal and `c_0..c_{m−1}` in
    /// the last row.
    pub fn companion(&self) -> CMatrix {
        let m = self.degree();
        let mut b = linalg::zeros(m, m);
        for i in 0..m.saturating_sub(1) {
            b[(i, i + 1)] = Complex64::new(1.0, 0.0);
        }
        for i in 0..m {
            b[(m - 1, i)] = self.c(i);
        }
        b
    }

    /// All roots with multiplicity, as eigenvalues of the companion matrix.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        linalg::eigenvalues(&self.companion())
    }
}

/// Product of two ascending coefficient vectors.
pub(crate) fn convolve(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(λ − a)^k` in ascending coefficients.
pub(crate) fn linear_power(a: Complex64, k: usize) -> Vec<Complex64> {
    let factor = [-a, Complex64::new(1.0, 0.0)];
    (0..k).fold(vec![Complex64::new(1.0, 0.0)], |acc, _| convolve(&acc, &factor))
}
