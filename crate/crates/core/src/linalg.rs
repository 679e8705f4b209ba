//! Dense complex matrix kernels.
//!
//! Everything here works on [`CMatrix`] (a `nalgebra::DMatrix` of `Complex64`).
//! The factorizations (SVD, Hermitian eigensolver, complex Schur) come from
//! nalgebra; the numerical radius and the block inequalities built on it are
//! implemented here.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense, row/column-indexed complex matrix.
pub type CMatrix = DMatrix<Complex64>;

/// Number of equispaced angles in the coarse numerical-radius scan.
pub const RADIUS_SCAN_POINTS: usize = 512;

/// Default absolute tolerance for [`numerical_radius`].
pub const RADIUS_TOL: f64 = 1e-9;

/// Relative inflation applied to a computed numerical radius before it is fed
/// into an upper-bound formula.
pub const RADIUS_INFLATION: f64 = 1e-10;

/// Above this dimension the spectral norm switches from a full SVD to power
/// iteration on the Gram matrix.
const SVD_MAX_DIM: usize = 64;

/// Subdiagonal deflation thresholds (in ulps) tried in turn by the Schur
/// iteration; exactly one ulp can stall on repeated eigenvalues.
const SCHUR_DEFLATION: [f64; 2] = [4.0, 64.0];

/// Induced matrix norms supported by the bound routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    /// Maximum column absolute sum.
    One,
    /// Maximum row absolute sum.
    Inf,
    /// Largest singular value.
    #[default]
    Spectral,
}

impl Norm {
    pub const ALL: [Norm; 3] = [Norm::Spectral, Norm::One, Norm::Inf];

    pub fn name(self) -> &'static str {
        match self {
            Norm::One => "one",
            Norm::Inf => "inf",
            Norm::Spectral => "spectral",
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "one" | "1" => Ok(Norm::One),
            "inf" | "infinity" => Ok(Norm::Inf),
            "spectral" | "2" | "two" => Ok(Norm::Spectral),
            other => Err(Error::Parse(format!("unknown norm `{other}`"))),
        }
    }
}

pub fn zeros(rows: usize, cols: usize) -> CMatrix {
    CMatrix::zeros(rows, cols)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Builds a matrix from real row-major data.
pub fn from_real_rows(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
    assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
    CMatrix::from_fn(rows, cols, |i, j| Complex64::new(data[i * cols + j], 0.0))
}

pub fn is_finite(a: &CMatrix) -> bool {
    a.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn is_zero(a: &CMatrix) -> bool {
    a.iter().all(|z| z.re == 0.0 && z.im == 0.0)
}

/// Conjugate transpose.
pub fn adjoint(a: &CMatrix) -> CMatrix {
    a.adjoint()
}

pub fn norm(a: &CMatrix, which: Norm) -> f64 {
    match which {
        Norm::One => (0..a.ncols())
            .map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max),
        Norm::Inf => (0..a.nrows())
            .map(|i| a.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max),
        Norm::Spectral => spectral_norm(a),
    }
}

/// Frobenius norm.
pub fn frobenius(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn spectral_norm(a: &CMatrix) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    if a.nrows().max(a.ncols()) <= SVD_MAX_DIM {
        singular_values(a).first().copied().unwrap_or(0.0)
    } else {
        gram_power_iteration(a)
    }
}

/// Singular values in descending order.
pub fn singular_values(a: &CMatrix) -> Vec<f64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<f64> = a.clone().singular_values().iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

pub fn sigma_min(a: &CMatrix) -> f64 {
    singular_values(a).last().copied().unwrap_or(0.0)
}

// Largest eigenvalue of A*A by power iteration, iterated until the Rayleigh
// quotient stagnates to 1e-12 relative.
fn gram_power_iteration(a: &CMatrix) -> f64 {
    let n = a.ncols();
    let mut v = nalgebra::DVector::from_fn(n, |i, _| Complex64::new(1.0 + (i as f64) * 1e-3, 0.0));
    let mut prev = 0.0;
    for _ in 0..20_000 {
        let nv = v.norm();
        if nv == 0.0 {
            return 0.0;
        }
        v /= Complex64::new(nv, 0.0);
        let w = a.adjoint() * (a * &v);
        let rq = v.dotc(&w).re;
        v = w;
        if (rq - prev).abs() <= 1e-12 * rq.abs() {
            return rq.max(0.0).sqrt();
        }
        prev = rq;
    }
    prev.max(0.0).sqrt()
}

/// All eigenvalues of a square matrix (with multiplicity), via the complex
/// Schur form.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Complex64>> {
    assert!(a.is_square(), "eigenvalues of a non-square matrix");
    let n = a.nrows();
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![a[(0, 0)]]),
        _ => {}
    }
    let max_iter = 100 * n;
    let schur = SCHUR_DEFLATION
        .iter()
        .find_map(|&ulps| Schur::try_new(a.clone(), ulps * f64::EPSILON, max_iter))
        .ok_or(Error::NoConvergence {
            what: "complex Schur iteration",
        })?;
    let (_, t) = schur.unpack();
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// Spectral radius, from [`eigenvalues`].
pub fn spectral_radius(a: &CMatrix) -> Result<f64> {
    Ok(eigenvalues(a)?.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Largest eigenvalue of the Hermitian part of `e^{iθ} A`.
fn rotated_hermitian_max(a: &CMatrix, theta: f64) -> f64 {
    let rot = Complex64::from_polar(1.0, theta);
    let h = (a * rot + a.adjoint() * rot.conj()) * Complex64::new(0.5, 0.0);
    hermitian_max_eigenvalue(&h)
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn hermitian_max_eigenvalue(h: &CMatrix) -> f64 {
    if h.nrows() == 1 {
        return h[(0, 0)].re;
    }
    h.clone()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Principal square root of a Hermitian positive semidefinite matrix.
pub fn psd_sqrt(h: &CMatrix) -> CMatrix {
    let eig = h.clone().symmetric_eigen();
    let d = CMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x.max(0.0).sqrt(), 0.0)));
    &eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

/// Numerical radius `w(A) = max_θ λ_max((e^{iθ}A + e^{-iθ}A*)/2)`.
///
/// A 512-point scan over `[0, 2π)` is followed by golden-section refinement
/// around every scan maximum that could still beat the best scanned value.
/// `λ_max(θ)` is Lipschitz with constant `‖A‖_F`, which bounds how much a
/// refinement can gain inside one cell.
pub fn numerical_radius(a: &CMatrix, tol: f64) -> Result<f64> {
    assert!(a.is_square(), "numerical radius of a non-square matrix");
    let n = a.nrows();
    if n == 0 {
        return Ok(0.0);
    }
    if n == 1 {
        return Ok(a[(0, 0)].norm());
    }
    let lip = frobenius(a);
    if lip == 0.0 {
        return Ok(0.0);
    }
    let h = 2.0 * PI / RADIUS_SCAN_POINTS as f64;
    let scan: Vec<f64> = (0..RADIUS_SCAN_POINTS)
        .map(|i| rotated_hermitian_max(a, i as f64 * h))
        .collect();
    if scan.iter().any(|v| !v.is_finite()) {
        return Err(Error::NoConvergence {
            what: "Hermitian eigensolver in numerical radius",
        });
    }
    let best_scan = scan.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let at = |i: isize| scan[i.rem_euclid(RADIUS_SCAN_POINTS as isize) as usize];

    let mut candidates: Vec<usize> = (0..RADIUS_SCAN_POINTS as isize)
        .filter(|&i| at(i) > at(i - 1) && at(i) >= at(i + 1) && at(i) >= best_scan - lip * h)
        .map(|i| i as usize)
        .collect();
    if candidates.is_empty() {
        // flat profile: any argmax will do
        let arg = scan
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.total_cmp(y.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        candidates.push(arg);
    }

    let mut best = best_scan;
    for i in candidates {
        let centre = i as f64 * h;
        let refined = golden_max(|t| rotated_hermitian_max(a, t), centre - h, centre + h, tol);
        best = best.max(refined);
    }
    Ok(best.max(0.0))
}

/// [`numerical_radius`] at the default tolerance, inflated by
/// `1 + RADIUS_INFLATION` for use inside upper bounds.
pub fn numerical_radius_upper(a: &CMatrix) -> Result<f64> {
    Ok(numerical_radius(a, RADIUS_TOL)? * (1.0 + RADIUS_INFLATION))
}

// Golden-section search for a maximum of `f` on [lo, hi]. Returns the best
// value seen.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = f1.max(f2);
    // the width shrinks geometrically; the value error is quadratic in it
    let min_width = tol.max(1e-15).sqrt() * 1e-3;
    for _ in 0..200 {
        if hi - lo <= min_width {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
        best = best.max(f1).max(f2);
    }
    best
}

/// Upper bound on `w([[A, B], [C, D]])` from the numerical radii of the
/// diagonal blocks and the spectral norms of the off-diagonal blocks:
/// `½(w(A) + w(D) + √((w(A) − w(D))² + (‖B‖₂ + ‖C‖₂)²))`.
pub fn w_bound_block2(a: &CMatrix, b: &CMatrix, c: &CMatrix, d: &CMatrix) -> Result<f64> {
    if !a.is_square() || !d.is_square() {
        return Err(Error::DimensionMismatch {
            context: "diagonal blocks must be square".into(),
        });
    }
    if b.nrows() != a.nrows() || b.ncols() != d.ncols() || c.nrows() != d.nrows() || c.ncols() != a.ncols() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "blocks {}x{}, {}x{}, {}x{}, {}x{} are not conformable",
                a.nrows(),
                a.ncols(),
                b.nrows(),
                b.ncols(),
                c.nrows(),
                c.ncols(),
                d.nrows(),
                d.ncols()
            ),
        });
    }
    let wa = numerical_radius_upper(a)?;
    let wd = numerical_radius_upper(d)?;
    let off = spectral_norm(b) + spectral_norm(c);
    Ok(split_bound(wa, wd, off))
}

/// `½(x + y + √((x − y)² + s²))`, the common shape of every block-split bound.
pub fn split_bound(x: f64, y: f64, s: f64) -> f64 {
    0.5 * (x + y + ((x - y).powi(2) + s * s).sqrt())
}

/// `|a| + cos(π/(n+1))`: an upper bound on the numerical radius of the
/// `n×n` bidiagonal block with `a` on the diagonal and ones beside it
/// (attained when `a ≥ 0`).
pub fn w_jordan_like(a: Complex64, n: usize) -> f64 {
    assert!(n >= 1, "block size must be positive");
    a.norm() + (PI / (n as f64 + 1.0)).cos()
}
