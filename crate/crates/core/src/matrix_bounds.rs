//! Eigenvalue bounds for rational matrices through the associated real
//! function
//!
//! ```text
//! q(x) = x^m − ‖C_{m−1}‖x^{m−1} − … − ‖C_0‖ − Σ ‖B‖/(x − |a|)^k
//! ```
//!
//! Every eigenvalue of `R` has modulus at most any zero of `q` exceeding all
//! pole moduli, and at most any bound on the zeros of `q`.

use num_complex::Complex64;

use crate::bound::{BoundValue, Method, RationalMethod};
use crate::error::{Error, Result};
use crate::linalg::{self, Norm};
use crate::rational::{Mode, RationalMatrix, ScalarRationalFunction};
use crate::scalar_bounds::{self, bisect};

/// Number of grid points in the scan for the first sign change of `q`.
pub const Q_SCAN_POINTS: usize = 1024;

/// One summand `β / (x − γ)^k` of `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QTerm {
    pub gamma: f64,
    pub power: usize,
    pub beta: f64,
}

/// `q(x) = x^m − Σ α_i x^i − Σ β/(x − γ)^k` with nonnegative data.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRationalFunction {
    /// `α_0..α_{m−1}`.
    pub alpha: Vec<f64>,
    pub terms: Vec<QTerm>,
    pub norm: Norm,
    pub mode: Mode,
}

impl RealRationalFunction {
    pub fn degree(&self) -> usize {
        self.alpha.len()
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let mut acc = 1.0;
        for &a in self.alpha.iter().rev() {
            acc = acc * x - a;
        }
        acc - self.terms.iter().map(|t| t.beta / (x - t.gamma).powi(t.power as i32)).sum::<f64>()
    }

    /// `x^m + Σ α_i x^i + Σ β/|x − γ|^k`, the size of the summands at `x`.
    fn scale(&self, x: f64) -> f64 {
        let poly: f64 = self.alpha.iter().enumerate().map(|(i, a)| a * x.powi(i as i32)).sum();
        let poles: f64 = self.terms.iter().map(|t| t.beta / (x - t.gamma).abs().powi(t.power as i32)).sum();
        x.powi(self.degree() as i32) + poly + poles
    }

    /// Largest pole modulus, if any pole is present.
    pub fn pole_max(&self) -> Option<f64> {
        self.terms.iter().map(|t| t.gamma).reduce(f64::max)
    }

    /// `q` as a scalar rational function with real poles `γ` and subtracted
    /// coefficients `β`, in the same mode.
    pub fn to_scalar(&self) -> Result<ScalarRationalFunction> {
        let c: Vec<Complex64> = self.alpha.iter().map(|&a| Complex64::new(a, 0.0)).collect();
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|t| (Complex64::new(t.gamma, 0.0), t.power, Complex64::new(t.beta, 0.0)))
            .collect();
        ScalarRationalFunction::from_c(&c, &terms, self.mode)
    }
}

/// Builds `q` from coefficient norms.
///
/// Canonical instances keep one term per `(|a|, k)` with `k = 1..m_a`
/// (zero `β` kept so the block structure survives), merging poles of equal
/// modulus by summing `β`. Per-term instances keep one term per summand and
/// drop summands whose coefficient has zero norm.
pub fn associate_q(r: &RationalMatrix, norm: Norm) -> RealRationalFunction {
    let alpha = (0..r.degree()).map(|i| linalg::norm(r.poly().coeff(i), norm)).collect();
    let terms = match r.mode() {
        Mode::PerTerm => r
            .terms()
            .iter()
            .map(|t| QTerm {
                gamma: t.pole.norm(),
                power: t.power,
                beta: linalg::norm(&t.coeff, norm),
            })
            .filter(|t| t.beta > 0.0)
            .collect(),
        Mode::Canonical => {
            let mut groups: Vec<(f64, Vec<f64>)> = Vec::new();
            for t in r.terms() {
                let gamma = t.pole.norm();
                let idx = match groups.iter().position(|g| g.0 == gamma) {
                    Some(i) => i,
                    None => {
                        groups.push((gamma, Vec::new()));
                        groups.len() - 1
                    }
                };
                let betas = &mut groups[idx].1;
                if betas.len() < t.power {
                    betas.resize(t.power, 0.0);
                }
                betas[t.power - 1] += linalg::norm(&t.coeff, norm);
            }
            groups
                .into_iter()
                .flat_map(|(gamma, betas)| {
                    (1..=betas.len()).rev().map(move |k| QTerm {
                        gamma,
                        power: k,
                        beta: betas[k - 1],
                    })
                })
                .collect()
        }
    };
    RealRationalFunction {
        alpha,
        terms,
        norm,
        mode: r.mode(),
    }
}

/// Smallest zero of `q` beyond every pole modulus; without poles, the
/// unique positive zero of the polynomial part.
pub fn q_root_bound(q: &RealRationalFunction) -> Result<BoundValue> {
    let notes = format!("{} norm", q.norm);
    let Some(g) = q.terms.iter().filter(|t| t.beta > 0.0).map(|t| t.gamma).reduce(f64::max) else {
        return Ok(BoundValue::new(scalar_bounds::rouche(&q.alpha), Method::QRoot, notes));
    };
    let f = |x: f64| q.evaluate(x);
    let eps = 1e-9 * (1.0 + g);

    let mut hi = g + 1.0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::BracketFailure { limit: 1e300 });
        }
    }

    let span = (hi - g) / eps;
    let mut prev = g;
    let mut root = None;
    for i in 0..Q_SCAN_POINTS {
        let x = g + eps * span.powf(i as f64 / (Q_SCAN_POINTS - 1) as f64);
        if f(x) > 0.0 {
            root = Some(bisect(f, prev, x));
            break;
        }
        prev = x;
    }
    let root = root.unwrap_or_else(|| bisect(f, prev, hi));

    if root.is_nan() || root <= g || f(root).abs() > 1e-6 * q.scale(root) {
        return Err(Error::NoConvergence { what: "q root bisection" });
    }
    Ok(BoundValue::new(root, Method::QRoot, notes))
}

/// The three companion bounds on the zeros of `q`: row sums, column sums and
/// the numerical-radius split.
pub fn summary_bounds(r: &RationalMatrix, norm: Norm) -> Result<[BoundValue; 3]> {
    let q = associate_q(r, norm).to_scalar()?;
    let relabel = |method, tag| -> Result<BoundValue> {
        let b = scalar_bounds::rational_zero_bound(&q, method)?;
        Ok(BoundValue::new(b.value, tag, format!("{norm} norm; {}", b.notes)))
    };
    Ok([
        relabel(RationalMethod::InfNorm, Method::Summary1)?,
        relabel(RationalMethod::OneNorm, Method::Summary2)?,
        relabel(RationalMethod::NrSplit, Method::Summary3)?,
    ])
}

/// `max{α, ‖C_0‖} + ½(√(#blocks) + √(Σ‖B‖²))` for degree-one instances.
pub fn linear_matrix_bound(r: &RationalMatrix, norm: Norm) -> Result<BoundValue> {
    if r.degree() != 1 {
        return Err(Error::NotLinear { degree: r.degree() });
    }
    let q = associate_q(r, norm).to_scalar()?;
    let v = scalar_bounds::linear_bound_value(q.inner())?;
    Ok(BoundValue::new(v, Method::LinearMatrix, format!("{norm} norm")))
}

/// Every matrix-level bound that applies to `r` under `norm`.
pub fn all_matrix_bounds(r: &RationalMatrix, norm: Norm) -> Result<Vec<BoundValue>> {
    let mut out = vec![q_root_bound(&associate_q(r, norm))?];
    out.extend(summary_bounds(r, norm)?);
    if r.degree() == 1 {
        out.push(linear_matrix_bound(r, norm)?);
    }
    Ok(out)
}
