//! Rational matrices in partial-fraction form
//! `R(λ) = A_0 + A_1 λ + … + I λ^m + Σ B / (λ − a)^k`.
//!
//! Coefficients are stored in plain ascending powers and pole terms store the
//! coefficient that is *added*. The bound formulas are usually written with
//! the negated conventions `C_i = −A_i` (polynomial part) and, for scalar
//! functions, `b = −B` (pole terms); accessors provide those views.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, Norm};
use crate::poly::{self, MonicPolynomial};

/// How pole terms are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// One term for every power `k = 1..m_a` of every distinct pole `a`
    /// (zero coefficients allowed below the top power).
    #[default]
    Canonical,
    /// One term per written summand; duplicate `(a, k)` pairs allowed.
    PerTerm,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Canonical => "canonical",
            Mode::PerTerm => "per-term",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(Mode::Canonical),
            "per-term" | "per_term" | "perterm" => Ok(Mode::PerTerm),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Monic matrix polynomial `A_0 + A_1 λ + … + A_m λ^m` with `A_m = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPolynomial {
    coeffs: Vec<CMatrix>,
}

impl MatrixPolynomial {
    pub fn new(coeffs: Vec<CMatrix>) -> Result<Self> {
        let size = check_coefficients(&coeffs)?;
        if coeffs.len() < 2 {
            return Err(Error::DegreeZero);
        }
        if *coeffs.last().unwrap() != linalg::identity(size) {
            return Err(Error::NonMonicLeading);
        }
        Ok(Self { coeffs })
    }

    pub fn size(&self) -> usize {
        self.coeffs[0].nrows()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CMatrix] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &CMatrix {
        &self.coeffs[i]
    }

    /// `C_i = −A_i`, the coefficient as it appears in
    /// `λ^m − C_{m−1}λ^{m−1} − … − C_0`.
    pub fn negated_coeff(&self, i: usize) -> CMatrix {
        -&self.coeffs[i]
    }

    pub fn evaluate(&self, z: Complex64) -> CMatrix {
        horner(&self.coeffs, z)
    }
}

fn horner(coeffs: &[CMatrix], z: Complex64) -> CMatrix {
    let mut it = coeffs.iter().rev();
    let mut acc = it.next().expect("at least one coefficient").clone();
    for a in it {
        acc = acc * z + a;
    }
    acc
}

// Common structural checks; returns the common size.
fn check_coefficients(coeffs: &[CMatrix]) -> Result<usize> {
    let first = coeffs.first().ok_or(Error::DegreeZero)?;
    let size = first.nrows();
    if size == 0 {
        return Err(Error::DimensionMismatch {
            context: "instance size must be positive".into(),
        });
    }
    for (i, a) in coeffs.iter().enumerate() {
        if a.nrows() != size || a.ncols() != size {
            return Err(Error::DimensionMismatch {
                context: format!("coefficient A_{i} is {}x{}, expected {size}x{size}", a.nrows(), a.ncols()),
            });
        }
        if !linalg::is_finite(a) {
            return Err(Error::NonFiniteEntry {
                context: format!("coefficient A_{i}"),
            });
        }
    }
    Ok(size)
}

/// One partial-fraction summand `B / (λ − a)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleTerm {
    pub pole: Complex64,
    pub power: usize,
    /// The added coefficient `B`.
    pub coeff: CMatrix,
}

impl PoleTerm {
    pub fn new(pole: Complex64, power: usize, coeff: CMatrix) -> Self {
        Self { pole, power, coeff }
    }

    /// Scalar summand `b / (λ − a)^k` with `b` the added coefficient.
    pub fn scalar(pole: Complex64, power: usize, b: Complex64) -> Self {
        Self::new(pole, power, CMatrix::from_element(1, 1, b))
    }

    /// `−B`, the coefficient in the subtracted convention
    /// `… − Σ b / (λ − a)^k`.
    pub fn subtracted_coeff(&self) -> CMatrix {
        -&self.coeff
    }

    fn contribution(&self, z: Complex64) -> CMatrix {
        let d = (z - self.pole).powu(self.power as u32);
        &self.coeff / d
    }
}

/// A distinct pole together with its order and the number of summands
/// written against it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleInfo {
    pub pole: Complex64,
    /// Highest power among the pole's terms.
    pub order: usize,
    /// Number of terms (blocks) attached to the pole.
    pub terms: usize,
}

/// Validated rational matrix `P(λ) + Σ B/(λ − a)^k` with monic `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    poly: MatrixPolynomial,
    terms: Vec<PoleTerm>,
    mode: Mode,
}

/// Relative radius around a pole inside which evaluation is refused.
pub const POLE_GUARD: f64 = 1e-14;

impl RationalMatrix {
    /// Validates and, in canonical mode, expands the pole terms.
    ///
    /// Canonical expansion groups terms by pole value (first-appearance
    /// order), sums coefficients of repeated powers and emits `k = m_a` down
    /// to `1`, inserting zero coefficients for missing powers. Per-term mode
    /// keeps the terms exactly as written; [`RationalMatrix::normalize`]
    /// merges and prunes them.
    pub fn new(poly_coeffs: Vec<CMatrix>, terms: Vec<PoleTerm>, mode: Mode) -> Result<Self> {
        let poly = MatrixPolynomial::new(poly_coeffs)?;
        let p = poly.size();
        for (i, t) in terms.iter().enumerate() {
            if t.power == 0 {
                return Err(Error::ZeroPower);
            }
            if t.coeff.nrows() != p || t.coeff.ncols() != p {
                return Err(Error::DimensionMismatch {
                    context: format!("term {i} coefficient is {}x{}, expected {p}x{p}", t.coeff.nrows(), t.coeff.ncols()),
                });
            }
            if !t.pole.re.is_finite() || !t.pole.im.is_finite() || !linalg::is_finite(&t.coeff) {
                return Err(Error::NonFiniteEntry {
                    context: format!("term {i}"),
                });
            }
        }
        let terms = match mode {
            Mode::Canonical => canonical_terms(&terms, p)?,
            Mode::PerTerm => terms,
        };
        Ok(Self { poly, terms, mode })
    }

    /// Scalar instance from ascending coefficients `a_0..a_{m−1}` (the leading
    /// one is implied) and added-coefficient terms `(a, k, B)`.
    pub fn scalar(lower_coeffs: &[Complex64], terms: &[(Complex64, usize, Complex64)], mode: Mode) -> Result<Self> {
        let mut coeffs: Vec<CMatrix> = lower_coeffs.iter().map(|&a| CMatrix::from_element(1, 1, a)).collect();
        coeffs.push(linalg::identity(1));
        let terms = terms.iter().map(|&(a, k, b)| PoleTerm::scalar(a, k, b)).collect();
        Self::new(coeffs, terms, mode)
    }

    pub fn size(&self) -> usize {
        self.poly.size()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn poly(&self) -> &MatrixPolynomial {
        &self.poly
    }

    pub fn terms(&self) -> &[PoleTerm] {
        &self.terms
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_scalar(&self) -> bool {
        self.size() == 1
    }

    /// Distinct poles in first-appearance order.
    pub fn poles(&self) -> Vec<PoleInfo> {
        pole_summary(self.terms.iter().map(|t| (t.pole, t.power)))
    }

    /// `R(z)`; fails within `1e−14·(1 + |a|)` of a pole.
    pub fn evaluate(&self, z: Complex64) -> Result<CMatrix> {
        for t in &self.terms {
            if (z - t.pole).norm() <= POLE_GUARD * (1.0 + t.pole.norm()) {
                return Err(Error::EvaluationAtPole { point: z, pole: t.pole });
            }
        }
        let mut acc = self.poly.evaluate(z);
        for t in &self.terms {
            acc += t.contribution(z);
        }
        Ok(acc)
    }

    /// `Σ ‖A_i‖₂ |z|^i + Σ ‖B‖₂ / |z − a|^k`, the natural scale of `R(z)`
    /// used for normwise backward errors.
    pub fn evaluation_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let poly: f64 = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| linalg::norm(a, Norm::Spectral) * r.powi(i as i32))
            .sum();
        let poles: f64 = self
            .terms
            .iter()
            .map(|t| linalg::norm(&t.coeff, Norm::Spectral) / (z - t.pole).norm().powi(t.power as i32))
            .sum();
        poly + poles
    }

    /// Merges repeated `(a, k)` pairs by summing coefficients and drops
    /// zero coefficients (per-term mode). Canonical instances are already
    /// normal and are returned unchanged.
    pub fn normalize(&self) -> Self {
        match self.mode {
            Mode::Canonical => self.clone(),
            Mode::PerTerm => {
                let mut merged: Vec<PoleTerm> = Vec::new();
                for t in &self.terms {
                    match merged.iter_mut().find(|m| m.pole == t.pole && m.power == t.power) {
                        Some(m) => m.coeff += &t.coeff,
                        None => merged.push(t.clone()),
                    }
                }
                merged.retain(|t| !linalg::is_zero(&t.coeff));
                Self {
                    poly: self.poly.clone(),
                    terms: merged,
                    mode: Mode::PerTerm,
                }
            }
        }
    }

    /// The same function in another representation mode.
    ///
    /// Converting to per-term normalizes; converting to canonical expands.
    pub fn with_mode(&self, mode: Mode) -> Result<Self> {
        match (self.mode, mode) {
            (a, b) if a == b => Ok(self.clone()),
            (_, Mode::PerTerm) => Ok(Self {
                mode: Mode::PerTerm,
                ..self.clone()
            }
            .normalize()),
            (_, Mode::Canonical) => Ok(Self {
                poly: self.poly.clone(),
                terms: canonical_terms(&self.terms, self.size())?,
                mode: Mode::Canonical,
            }),
        }
    }
}

/// Distinct poles with order and term count, first-appearance order.
pub(crate) fn pole_summary(terms: impl IntoIterator<Item = (Complex64, usize)>) -> Vec<PoleInfo> {
    let mut out: Vec<PoleInfo> = Vec::new();
    for (pole, power) in terms {
        match out.iter_mut().find(|p| p.pole == pole) {
            Some(p) => {
                p.order = p.order.max(power);
                p.terms += 1;
            }
            None => out.push(PoleInfo { pole, order: power, terms: 1 }),
        }
    }
    out
}

fn canonical_terms(terms: &[PoleTerm], p: usize) -> Result<Vec<PoleTerm>> {
    let mut out = Vec::new();
    for info in pole_summary(terms.iter().map(|t| (t.pole, t.power))) {
        let mut sums = vec![linalg::zeros(p, p); info.order];
        for t in terms.iter().filter(|t| t.pole == info.pole) {
            sums[t.power - 1] += &t.coeff;
        }
        if linalg::is_zero(&sums[info.order - 1]) {
            return Err(Error::ZeroTopOrderCoefficient {
                pole: info.pole,
                power: info.order,
            });
        }
        for k in (1..=info.order).rev() {
            out.push(PoleTerm::new(info.pole, k, sums[k - 1].clone()));
        }
    }
    Ok(out)
}

/// A rational matrix of size one, viewed through the scalar conventions
/// `r(λ) = λ^m − c_{m−1}λ^{m−1} − … − c_0 − Σ b/(λ − a)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarRationalFunction(RationalMatrix);

impl ScalarRationalFunction {
    pub fn new(r: RationalMatrix) -> Result<Self> {
        if r.size() != 1 {
            return Err(Error::NotScalar { size: r.size() });
        }
        Ok(Self(r))
    }

    /// Builds `λ^m − Σ c_i λ^i − Σ b/(λ − a)^k` from `c = [c_0..c_{m−1}]` and
    /// `(a, k, b)` triples in the subtracted convention.
    pub fn from_c(c: &[Complex64], terms: &[(Complex64, usize, Complex64)], mode: Mode) -> Result<Self> {
        let lower: Vec<Complex64> = c.iter().map(|z| -z).collect();
        let added: Vec<_> = terms.iter().map(|&(a, k, b)| (a, k, -b)).collect();
        Self::new(RationalMatrix::scalar(&lower, &added, mode)?)
    }

    pub fn inner(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn into_inner(self) -> RationalMatrix {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    /// `c_i = −a_i` for `i < m`.
    pub fn c(&self, i: usize) -> Complex64 {
        assert!(i < self.degree());
        -self.0.poly().coeff(i)[(0, 0)]
    }

    /// Pole terms as `(a, k, b)` in the subtracted convention.
    pub fn subtracted_terms(&self) -> Vec<(Complex64, usize, Complex64)> {
        self.0.terms().iter().map(|t| (t.pole, t.power, -t.coeff[(0, 0)])).collect()
    }

    /// The polynomial part as a monic polynomial.
    pub fn polynomial_part(&self) -> MonicPolynomial {
        let coeffs = self.0.poly().coeffs().iter().map(|a| a[(0, 0)]).collect();
        MonicPolynomial::new(coeffs).expect("validated polynomial part is monic")
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.0.evaluate(z)?[(0, 0)])
    }
}

/// `r(λ)·Π_a (λ − a)^{m_a}` expanded, with `m_a` the order of each distinct
/// pole. No common factors are cancelled.
pub fn to_numerator_polynomial(r: &ScalarRationalFunction) -> MonicPolynomial {
    let poles = r.inner().poles();
    let denominator = poles
        .iter()
        .fold(vec![Complex64::new(1.0, 0.0)], |acc, p| poly::convolve(&acc, &poly::linear_power(p.pole, p.order)));
    let mut num = poly::convolve(r.polynomial_part().coeffs(), &denominator);
    for t in r.inner().terms() {
        // Π over the other poles times (λ − a)^{m_a − k}
        let partial = poles.iter().fold(vec![Complex64::new(1.0, 0.0)], |acc, p| {
            let e = if p.pole == t.pole { p.order - t.power } else { p.order };
            poly::convolve(&acc, &poly::linear_power(p.pole, e))
        });
        let b = t.coeff[(0, 0)];
        for (i, z) in partial.iter().enumerate() {
            num[i] += b * z;
        }
    }
    MonicPolynomial::new(num).expect("numerator of a monic rational function is monic")
}
