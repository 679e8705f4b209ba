//! Reference eigenvalues of rational matrices.
//!
//! Candidates are the eigenvalues of the block companion; a candidate is kept
//! when it is away from every pole and `R(λ)` is numerically singular relative
//! to the size of its summands.

use num_complex::Complex64;
use serde::Serialize;

use crate::companion;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, Norm};
use crate::rational::{to_numerator_polynomial, PoleTerm, RationalMatrix, ScalarRationalFunction};

/// Default acceptance threshold on the normwise backward error.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Candidates within `POLE_EXCLUSION·(1 + |a|)` of a pole are discarded.
pub const POLE_EXCLUSION: f64 = 1e-8;

/// Accepted values within `COALESCE·(1 + |λ|)` of each other are merged.
pub const COALESCE: f64 = 1e-9;

/// Probe ratio below which `R(z)` counts as singular in the regularity test.
pub const SINGULAR_PROBE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum Rejection {
    NearPole { pole: Complex64 },
    Residual { residual: f64 },
    Duplicate { of: Complex64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rejected {
    pub value: Complex64,
    #[serde(flatten)]
    pub why: Rejection,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<Complex64>,
    /// `σ_min(R(λ)) / (Σ‖A_i‖|λ|^i + Σ‖B‖/|λ − a|^k)` per accepted value.
    pub residuals: Vec<f64>,
    pub rejected: Vec<Rejected>,
}

impl SpectrumResult {
    pub fn max_modulus(&self) -> f64 {
        max_modulus(&self.eigenvalues)
    }
}

/// Normwise backward error of `z` as an eigenvalue of `r`.
pub fn backward_error(r: &RationalMatrix, z: Complex64) -> Result<f64> {
    let value = r.evaluate(z)?;
    Ok(linalg::sigma_min(&value) / r.evaluation_scale(z))
}

pub fn eigenvalues_rational(r: &RationalMatrix, tol: f64) -> Result<SpectrumResult> {
    let candidates = linalg::eigenvalues(&companion::build(r)?.matrix)?;
    let mut out = SpectrumResult {
        eigenvalues: Vec::new(),
        residuals: Vec::new(),
        rejected: Vec::new(),
    };
    for z in candidates {
        if let Some(t) = r.terms().iter().find(|t| (z - t.pole).norm() <= POLE_EXCLUSION * (1.0 + t.pole.norm())) {
            out.rejected.push(Rejected {
                value: z,
                why: Rejection::NearPole { pole: t.pole },
            });
            continue;
        }
        let residual = backward_error(r, z)?;
        if residual > tol {
            out.rejected.push(Rejected {
                value: z,
                why: Rejection::Residual { residual },
            });
            continue;
        }
        if let Some(&of) = out.eigenvalues.iter().find(|&&e| (z - e).norm() <= COALESCE * (1.0 + z.norm())) {
            out.rejected.push(Rejected {
                value: z,
                why: Rejection::Duplicate { of },
            });
            continue;
        }
        out.eigenvalues.push(z);
        out.residuals.push(residual);
    }
    Ok(out)
}

/// Zeros of `r` as roots of its expanded numerator, minus roots sitting on a
/// pole.
pub fn zeros_scalar_oracle(r: &ScalarRationalFunction) -> Result<Vec<Complex64>> {
    let roots = to_numerator_polynomial(r).roots()?;
    let poles = r.inner().poles();
    Ok(roots
        .into_iter()
        .filter(|z| poles.iter().all(|p| (z - p.pole).norm() > POLE_EXCLUSION * (1.0 + p.pole.norm())))
        .collect())
}

pub fn max_modulus(values: &[Complex64]) -> f64 {
    values.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Symmetric Hausdorff distance between two finite point sets (0 when both
/// are empty, infinite when exactly one is).
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let directed = |x: &[Complex64], y: &[Complex64]| {
        x.iter()
            .map(|p| y.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    match (a.is_empty(), b.is_empty()) {
        (true, true) => 0.0,
        (true, false) | (false, true) => f64::INFINITY,
        _ => directed(a, b).max(directed(b, a)),
    }
}

/// Heuristic test for a determinant that vanishes identically.
///
/// Works on unvalidated parts (the leading coefficient need not be the
/// identity): `R(z)` is evaluated at five fixed points off the poles, and
/// the instance is flagged when it is numerically singular at all of them.
pub fn regularity_probe(poly: &[CMatrix], terms: &[PoleTerm]) -> Result<()> {
    if poly.is_empty() || poly[0].nrows() == 0 {
        return Ok(());
    }
    let reach = 1.0 + terms.iter().map(|t| t.pole.norm()).fold(0.0, f64::max);
    let mut singular = 0;
    for j in 0..5 {
        let z = Complex64::from_polar(reach * (0.61 + 0.23 * j as f64), 0.7 + 1.31 * j as f64);
        let mut value = poly.iter().rev().fold(linalg::zeros(poly[0].nrows(), poly[0].ncols()), |acc, a| acc * z + a);
        let mut scale: f64 = poly
            .iter()
            .enumerate()
            .map(|(i, a)| linalg::norm(a, Norm::Spectral) * z.norm().powi(i as i32))
            .sum();
        for t in terms {
            let d = (z - t.pole).powu(t.power as u32);
            value += &t.coeff / d;
            scale += linalg::norm(&t.coeff, Norm::Spectral) / d.norm();
        }
        if scale == 0.0 || linalg::sigma_min(&value) <= SINGULAR_PROBE * scale {
            singular += 1;
        }
    }
    if singular == 5 {
        Err(Error::NonRegularSuspected)
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Mode;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn identity_pencil_has_only_zero() {
        let r = RationalMatrix::new(vec![linalg::zeros(2, 2), linalg::identity(2)], vec![], Mode::Canonical).unwrap();
        let s = eigenvalues_rational(&r, DEFAULT_TOL).unwrap();
        assert_eq!(s.eigenvalues, vec![c(0.0)]);
        assert_eq!(s.max_modulus(), 0.0);
    }

    #[test]
    fn lambda_minus_inverse() {
        let r = ScalarRationalFunction::from_c(&[c(0.0)], &[(c(0.0), 1, c(1.0))], Mode::Canonical).unwrap();
        let s = eigenvalues_rational(r.inner(), DEFAULT_TOL).unwrap();
        assert_eq!(s.eigenvalues.len(), 2);
        assert!((s.max_modulus() - 1.0).abs() < 1e-12);
        let z = zeros_scalar_oracle(&r).unwrap();
        assert!(hausdorff(&z, &s.eigenvalues) < 1e-10);
    }

    #[test]
    fn linear_passthrough_oracle() {
        let r = ScalarRationalFunction::from_c(&[Complex64::new(2.0, -1.0)], &[], Mode::Canonical).unwrap();
        assert_eq!(zeros_scalar_oracle(&r).unwrap(), vec![Complex64::new(2.0, -1.0)]);
    }

    #[test]
    fn max_modulus_examples() {
        assert_eq!(max_modulus(&[c(1.0), c(-1.0)]), 1.0);
        assert_eq!(max_modulus(&[]), 0.0);
    }

    #[test]
    fn spurious_pole_candidates_are_rejected() {
        // canonical expansion adds a power-1 block with zero coefficient at 1
        let r = ScalarRationalFunction::from_c(&[c(1.0)], &[(c(1.0), 2, c(1.0))], Mode::Canonical).unwrap();
        let s = eigenvalues_rational(r.inner(), DEFAULT_TOL).unwrap();
        assert_eq!(s.eigenvalues.len(), 3);
        assert!(!s.rejected.is_empty());
        for z in &s.eigenvalues {
            assert!(r.evaluate(*z).unwrap().norm() < 1e-8 * (1.0 + z.norm().powi(3)));
        }
    }

    #[test]
    fn non_regular_pencil_is_flagged() {
        let a0 = linalg::from_real_rows(2, 2, &[0., 1., 1., 0.]);
        let a1 = linalg::from_real_rows(2, 2, &[0., 0., 0., 1.]);
        let b = linalg::from_real_rows(2, 2, &[1., 0., 0., 0.]);
        let err = regularity_probe(&[a0, a1], &[PoleTerm::new(c(0.0), 1, b)]).unwrap_err();
        assert_eq!(err, Error::NonRegularSuspected);
        assert!(regularity_probe(&[linalg::zeros(2, 2), linalg::identity(2)], &[]).is_ok());
    }

    #[test]
    fn hausdorff_edge_cases() {
        assert_eq!(hausdorff(&[], &[]), 0.0);
        assert!(hausdorff(&[c(1.0)], &[]).is_infinite());
        assert_eq!(hausdorff(&[c(1.0), c(2.0)], &[c(1.5)]), 0.5);
    }
}
