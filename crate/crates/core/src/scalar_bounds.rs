//! Upper bounds on the moduli of zeros of monic polynomials and of scalar
//! rational functions.
//!
//! Polynomial bounds are stated for `λ^m − c_{m−1}λ^{m−1} − … − c_0`; rational
//! bounds for `r(λ) = λ^m − Σ c_i λ^i − Σ b/(λ − a)^k`, and use the block
//! companion of `r` (see [`crate::companion`]).

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::bound::{BoundValue, Method, PolyMethod, RationalMethod};
use crate::companion;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, Norm};
use crate::rational::{pole_summary, RationalMatrix, ScalarRationalFunction};

pub use crate::poly::MonicPolynomial;

/// Hölder exponents and scaling for the Aziz–Rather bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AzizRatherOpts {
    pub p: f64,
    pub q: f64,
    pub t: f64,
}

impl Default for AzizRatherOpts {
    fn default() -> Self {
        Self { p: 2.0, q: 2.0, t: 1.0 }
    }
}

impl AzizRatherOpts {
    fn check(&self) -> Result<()> {
        if !(self.p > 1.0 && self.q > 1.0) {
            return Err(Error::BadOpts(format!("need p > 1 and q > 1, got p={}, q={}", self.p, self.q)));
        }
        if (1.0 / self.p + 1.0 / self.q - 1.0).abs() > 1e-12 {
            return Err(Error::BadOpts(format!("1/p + 1/q must equal 1, got p={}, q={}", self.p, self.q)));
        }
        if !(self.t > 0.0 && self.t.is_finite()) {
            return Err(Error::BadOpts(format!("t must be positive, got {}", self.t)));
        }
        Ok(())
    }
}

pub fn poly_bound(p: &MonicPolynomial, method: PolyMethod, opts: &AzizRatherOpts) -> Result<BoundValue> {
    let m = p.degree();
    let c = p.c_abs();
    let tag = Method::Poly(method);
    let value = match method {
        PolyMethod::Montel => c.iter().sum::<f64>().max(1.0),
        PolyMethod::OneNorm => c[1..].iter().map(|x| 1.0 + x).fold(c[0], f64::max),
        PolyMethod::Cauchy => 1.0 + c.iter().copied().fold(0.0, f64::max),
        PolyMethod::CarmichaelMason => (1.0 + c.iter().map(|x| x * x).sum::<f64>()).sqrt(),
        PolyMethod::CompanionNr => companion_nr(&c),
        PolyMethod::Frakis => return frakis(p, true).map(|v| BoundValue::new(v, tag, "squared inner sum")),
        PolyMethod::Rouche => rouche(&c),
        PolyMethod::AzizRather => {
            opts.check()?;
            aziz_rather(p, opts)
        }
    };
    let notes = match method {
        PolyMethod::AzizRather => format!("p={}, q={}, t={}", opts.p, opts.q, opts.t),
        _ => format!("degree {m}"),
    };
    Ok(BoundValue::new(value, tag, notes))
}

/// Every polynomial bound that applies at this degree, with default options.
pub fn all_poly_bounds(p: &MonicPolynomial) -> Vec<BoundValue> {
    PolyMethod::ALL
        .into_iter()
        .filter_map(|m| poly_bound(p, m, &AzizRatherOpts::default()).ok())
        .collect()
}

// Numerical-radius split of the polynomial companion into the nilpotent
// (m−1)-block, the last row and the last column.
fn companion_nr(c: &[f64]) -> f64 {
    let m = c.len();
    if m == 1 {
        return c[0];
    }
    let w_shift = (PI / m as f64).cos();
    let lead = c[m - 1];
    let rest = c[..m - 1].iter().map(|x| x * x).sum::<f64>().sqrt();
    linalg::split_bound(w_shift, lead, 1.0 + rest)
}

/// Frakis–Kittaneh–Soltani bound. With `squared = true` the inner sum is
/// `Σ_{i ≤ m−3} |c_i|²`; with `false` it is the unsquared `Σ |c_i|`.
pub fn frakis(p: &MonicPolynomial, squared: bool) -> Result<f64> {
    let m = p.degree();
    if m < 3 {
        return Err(Error::DegreeTooSmall { needed: 3, got: m });
    }
    let a = CMatrix::from_row_slice(2, 2, &[p.c(m - 1), p.c(m - 2), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
    let abs_a = linalg::psd_sqrt(&(a.adjoint() * &a));
    let abs_a_star = linalg::psd_sqrt(&(&a * a.adjoint()));
    let mixed = abs_a + abs_a_star * Complex64::new(0.0, 1.0);
    let w = SQRT_2 * linalg::numerical_radius_upper(&mixed)?;
    let tail: f64 = p.c_abs()[..m - 2].iter().map(|x| if squared { x * x } else { *x }).sum();
    Ok(0.25 * (2.0 + w + ((w - 2.0).powi(2) + 4.0 * (1.0 + tail.sqrt()).powi(2)).sqrt()))
}

/// Unique positive zero of `x^m − |c_{m−1}|x^{m−1} − … − |c_0|`, or 0 when
/// every `c_i` vanishes.
pub(crate) fn rouche(c: &[f64]) -> f64 {
    let m = c.len();
    // strip the factor x^j contributed by vanishing low-order coefficients
    let Some(j) = c.iter().position(|&x| x != 0.0) else {
        return 0.0;
    };
    if m - j == 1 {
        return c[j];
    }
    let u = |x: f64| {
        let mut acc = 1.0;
        for &ci in c[j..].iter().rev() {
            acc = acc * x - ci;
        }
        acc
    };
    let hi = 1.0 + c.iter().copied().fold(0.0, f64::max);
    bisect(u, 0.0, hi)
}

/// Bisection for a sign change `f(lo) ≤ 0 < f(hi)`, to the resolution of f64.
pub(crate) fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Aziz–Rather bound on the signed monic coefficients `a_0..a_m` with
/// `a_{−1} = 0`.
fn aziz_rather(p: &MonicPolynomial, o: &AzizRatherOpts) -> f64 {
    let a = p.coeffs();
    let m = p.degree();
    let sum: f64 = (0..=m)
        .map(|j| {
            let prev = if j == 0 { Complex64::new(0.0, 0.0) } else { a[j - 1] };
            ((a[j] * o.t - prev) / o.t.powi((m - j) as i32)).norm().powf(o.p)
        })
        .sum();
    ((m + 1) as f64).powf(1.0 / o.q) * sum.powf(1.0 / o.p)
}

/// Block-structural quantities of a companion: pole-block numerical-radius
/// bound, number of pole blocks and squared coefficient mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockStructure {
    /// `max_j (|a_j| + cos(π/(ℓ_j + 1)))`, 0 without poles.
    pub alpha: f64,
    pub blocks: usize,
    /// `Σ ‖B‖₂²` over pole blocks.
    pub coeff_sq_sum: f64,
}

impl BlockStructure {
    /// `√(number of blocks)`, the spectral norm of the `−F` column.
    pub fn gamma(&self) -> f64 {
        (self.blocks as f64).sqrt()
    }

    /// `√(Σ ‖B‖₂²)`.
    pub fn delta(&self) -> f64 {
        self.coeff_sq_sum.sqrt()
    }
}

/// `ℓ_j` is the larger of the pole's order and the number of blocks written
/// against it, so it never undercuts the largest Jordan-like block at `a_j`.
pub fn block_structure(r: &RationalMatrix) -> BlockStructure {
    let alpha = pole_summary(r.terms().iter().map(|t| (t.pole, t.power)))
        .iter()
        .map(|info| linalg::w_jordan_like(info.pole, info.order.max(info.terms)))
        .fold(0.0, f64::max);
    let coeff_sq_sum = r.terms().iter().map(|t| linalg::norm(&t.coeff, Norm::Spectral).powi(2)).sum();
    BlockStructure {
        alpha,
        blocks: r.terms().len(),
        coeff_sq_sum,
    }
}

pub fn rational_zero_bound(r: &ScalarRationalFunction, method: RationalMethod) -> Result<BoundValue> {
    rational_matrix_companion_bound(r.inner(), method)
}

// Shared with the matrix-level summary bounds, which apply the same
// machinery to the companion of q.
pub(crate) fn rational_matrix_companion_bound(r: &RationalMatrix, method: RationalMethod) -> Result<BoundValue> {
    let cm = companion::build(r)?;
    let tag = Method::Rational(method);
    Ok(match method {
        RationalMethod::InfNorm => BoundValue::new(linalg::norm(&cm.matrix, Norm::Inf), tag, format!("‖C‖_∞, dim {}", cm.dimension())),
        RationalMethod::OneNorm => BoundValue::new(linalg::norm(&cm.matrix, Norm::One), tag, format!("‖C‖_1, dim {}", cm.dimension())),
        RationalMethod::NrSplit => {
            let s = block_structure(r);
            let beta = linalg::numerical_radius_upper(&cm.trailing_block())?;
            let value = linalg::split_bound(s.alpha, beta, s.gamma() + s.delta());
            BoundValue::new(
                value,
                tag,
                format!("alpha={:.6} beta={:.6} gamma={:.6} delta={:.6}", s.alpha, beta, s.gamma(), s.delta()),
            )
        }
    })
}

/// Bound for a linear polynomial part:
/// `max{α, |c_0|} + ½(√(#blocks) + √(Σ|b|²))`.
pub fn linear_case_bound(r: &ScalarRationalFunction) -> Result<BoundValue> {
    let v = linear_bound_value(r.inner())?;
    Ok(BoundValue::new(v, Method::LinearCase, "linear polynomial part"))
}

pub(crate) fn linear_bound_value(r: &RationalMatrix) -> Result<f64> {
    if r.degree() != 1 {
        return Err(Error::NotLinear { degree: r.degree() });
    }
    let s = block_structure(r);
    let c0 = linalg::norm(r.poly().coeff(0), Norm::Spectral);
    Ok(s.alpha.max(c0) + 0.5 * (s.gamma() + s.delta()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Mode;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bound(p: &MonicPolynomial, m: PolyMethod) -> f64 {
        poly_bound(p, m, &AzizRatherOpts::default()).unwrap().value
    }

    fn p1() -> MonicPolynomial {
        // λ³ − 2iλ² − (1+i)λ − 1
        MonicPolynomial::from_c(&[c(1.0, 0.0), c(1.0, 1.0), c(0.0, 2.0)]).unwrap()
    }

    fn p2() -> MonicPolynomial {
        // λ³ − λ² − λ + 2
        MonicPolynomial::from_c(&[c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap()
    }

    #[test]
    fn monomial_bounds() {
        let p = MonicPolynomial::from_c(&[c(0.0, 0.0); 4]).unwrap();
        assert_eq!(bound(&p, PolyMethod::Montel), 1.0);
        assert_eq!(bound(&p, PolyMethod::Cauchy), 1.0);
        assert_eq!(bound(&p, PolyMethod::Rouche), 0.0);
    }

    #[test]
    fn second_cubic_bounds() {
        let p = p2();
        let close = |m, v: f64, tol: f64| {
            let got = bound(&p, m);
            assert!((got - v).abs() <= tol, "{m:?}: {got} vs {v}");
        };
        close(PolyMethod::OneNorm, 2.0, 1e-12);
        close(PolyMethod::Cauchy, 3.0, 1e-12);
        close(PolyMethod::CarmichaelMason, 7f64.sqrt(), 1e-12);
        close(PolyMethod::Montel, 4.0, 1e-12);
        close(PolyMethod::Rouche, 2.0, 1e-12);
        close(PolyMethod::AzizRather, 2.0 * 17f64.sqrt(), 1e-12);
        close(PolyMethod::Frakis, 2.84, 5e-3);
        close(PolyMethod::CompanionNr, 0.5 * (1.5 + (0.25 + (1.0 + 5f64.sqrt()).powi(2)).sqrt()), 1e-12);
    }

    #[test]
    fn first_cubic_bounds() {
        let p = p1();
        assert!((bound(&p, PolyMethod::CompanionNr) - 2.81).abs() < 5e-3);
        assert!((bound(&p, PolyMethod::AzizRather) - 6.0).abs() < 1e-12);
        assert!((bound(&p, PolyMethod::Montel) - (3.0 + SQRT_2)).abs() < 1e-12);
    }

    #[test]
    fn frakis_needs_degree_three() {
        let p = MonicPolynomial::from_c(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(matches!(
            poly_bound(&p, PolyMethod::Frakis, &AzizRatherOpts::default()),
            Err(Error::DegreeTooSmall { needed: 3, got: 2 })
        ));
    }

    #[test]
    fn printed_frakis_variant_differs_on_second_cubic() {
        let printed = frakis(&p2(), false).unwrap();
        assert!((printed - 2.555).abs() < 5e-3, "{printed}");
    }

    #[test]
    fn aziz_rather_rejects_bad_exponents() {
        let bad = [
            AzizRatherOpts { p: 1.0, q: 2.0, t: 1.0 },
            AzizRatherOpts { p: 3.0, q: 2.0, t: 1.0 },
            AzizRatherOpts { p: 2.0, q: 2.0, t: 0.0 },
        ];
        for o in bad {
            assert!(matches!(poly_bound(&p2(), PolyMethod::AzizRather, &o), Err(Error::BadOpts(_))));
        }
        let o = AzizRatherOpts { p: 3.0, q: 1.5, t: 0.5 };
        assert!(poly_bound(&p2(), PolyMethod::AzizRather, &o).is_ok());
    }

    #[test]
    fn rouche_with_vanishing_constant() {
        // λ³ − 2λ: positive root √2
        let p = MonicPolynomial::from_c(&[c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((bound(&p, PolyMethod::Rouche) - SQRT_2).abs() < 1e-14);
    }

    fn lambda_minus_inverse() -> ScalarRationalFunction {
        ScalarRationalFunction::from_c(&[c(0.0, 0.0)], &[(c(0.0, 0.0), 1, c(1.0, 0.0))], Mode::Canonical).unwrap()
    }

    #[test]
    fn rational_bounds_for_lambda_minus_inverse() {
        let r = lambda_minus_inverse();
        assert_eq!(rational_zero_bound(&r, RationalMethod::InfNorm).unwrap().value, 1.0);
        assert!((linear_case_bound(&r).unwrap().value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn linear_case_examples() {
        // λ − 2 − 1/(λ − 1)
        let r = ScalarRationalFunction::from_c(&[c(2.0, 0.0)], &[(c(1.0, 0.0), 1, c(1.0, 0.0))], Mode::Canonical).unwrap();
        assert!((linear_case_bound(&r).unwrap().value - 3.0).abs() < 1e-15);
        let r = ScalarRationalFunction::from_c(&[c(-1.5, 0.0)], &[], Mode::Canonical).unwrap();
        assert_eq!(linear_case_bound(&r).unwrap().value, 1.5);
        let r = ScalarRationalFunction::from_c(&[c(1.0, 0.0), c(0.0, 0.0)], &[], Mode::Canonical).unwrap();
        assert!(matches!(linear_case_bound(&r), Err(Error::NotLinear { degree: 2 })));
    }

    #[test]
    fn block_structure_uses_term_count_when_larger() {
        // pole 3 carries powers 1, 2, 2 → ℓ = 3
        let r = ScalarRationalFunction::from_c(
            &[c(0.0, 0.0)],
            &[(c(3.0, 0.0), 1, c(1.0, 0.0)), (c(3.0, 0.0), 2, c(1.0, 0.0)), (c(3.0, 0.0), 2, c(1.0, 0.0))],
            Mode::PerTerm,
        )
        .unwrap();
        let s = block_structure(r.inner());
        assert!((s.alpha - (3.0 + (PI / 4.0).cos())).abs() < 1e-15);
        assert_eq!(s.blocks, 3);
        // a lone power-2 term still gets cos(π/3)
        let r = ScalarRationalFunction::from_c(&[c(0.0, 0.0)], &[(c(1.0, 0.0), 2, c(1.0, 0.0))], Mode::PerTerm).unwrap();
        assert!((block_structure(r.inner()).alpha - 1.5).abs() < 1e-15);
    }
}
