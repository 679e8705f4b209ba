//! Block companion matrix of a rational matrix.
//!
//! For `R(λ) = P(λ) + Σ B/(λ − a)^k` with monic `P` of degree `m` and size
//! `p`, the matrix has one leading diagonal block per pole term and a trailing
//! `pm × pm` block:
//!
//! ```text
//! ⎡ A_1            −F_1 ⎤
//! ⎢     ⋱           ⋮   ⎥
//! ⎢         A_t    −F_t ⎥
//! ⎣ B_1  ⋯  B_t     B_0 ⎦
//! ```
//!
//! `A_i` (size `pk`) is block upper bidiagonal with `aI` on the diagonal and
//! `I` above it; `F_i` holds `I` in its bottom-left `p×p` block; `B_i` holds
//! the added coefficient `B` in its bottom-left block; `B_0` is the block
//! companion of `P` with `−A_0, …, −A_{m−1}` in its last block row. Every
//! eigenvalue of `R` is an eigenvalue of this matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::rational::RationalMatrix;

pub const DEFAULT_DIMENSION_CAP: usize = 4096;

/// Location of one pole block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockInfo {
    pub pole: Complex64,
    pub power: usize,
    /// First row/column of the block.
    pub offset: usize,
    /// Index of the pole term the block came from.
    pub term: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix {
    pub matrix: CMatrix,
    pub blocks: Vec<BlockInfo>,
    /// First row/column of the trailing `B_0` block.
    pub trailing_offset: usize,
    /// Instance size `p`.
    pub size: usize,
    /// Degree `m` of the polynomial part.
    pub degree: usize,
}

impl CompanionMatrix {
    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    /// The trailing block `B_0`.
    pub fn trailing_block(&self) -> CMatrix {
        let t = self.trailing_offset;
        let n = self.dimension() - t;
        self.matrix.view((t, t), (n, n)).into_owned()
    }

    /// `[[A, C], [B, D]]` split at the trailing block; returns `(A, C, B, D)`.
    pub fn split(&self) -> (CMatrix, CMatrix, CMatrix, CMatrix) {
        let t = self.trailing_offset;
        let n = self.dimension();
        let m = &self.matrix;
        (
            m.view((0, 0), (t, t)).into_owned(),
            m.view((0, t), (t, n - t)).into_owned(),
            m.view((t, 0), (n - t, t)).into_owned(),
            m.view((t, t), (n - t, n - t)).into_owned(),
        )
    }
}

pub fn build(r: &RationalMatrix) -> Result<CompanionMatrix> {
    build_with_cap(r, DEFAULT_DIMENSION_CAP)
}

pub fn build_with_cap(r: &RationalMatrix, cap: usize) -> Result<CompanionMatrix> {
    let p = r.size();
    let m = r.degree();
    let block_rows: usize = r.terms().iter().map(|t| t.power).sum();
    let dim = p * (m + block_rows);
    if dim > cap {
        return Err(Error::DimensionOverflow { dim, cap });
    }

    let mut c = linalg::zeros(dim, dim);
    let one = Complex64::new(1.0, 0.0);
    let trailing = p * block_rows;
    let last_row = trailing + p * (m - 1);

    let mut blocks = Vec::with_capacity(r.terms().len());
    let mut offset = 0;
    for (idx, t) in r.terms().iter().enumerate() {
        let k = t.power;
        for s in 0..k {
            for d in 0..p {
                let row = offset + s * p + d;
                c[(row, row)] = t.pole;
                if s + 1 < k {
                    c[(row, row + p)] = one;
                }
            }
        }
        // −F: −I from the last block row into the first trailing column block
        for d in 0..p {
            c[(offset + (k - 1) * p + d, trailing + d)] = -one;
        }
        // B in the last trailing block row, first column block of this block
        c.view_mut((last_row, offset), (p, p)).copy_from(&t.coeff);
        blocks.push(BlockInfo {
            pole: t.pole,
            power: k,
            offset,
            term: idx,
        });
        offset += k * p;
    }

    for s in 0..m - 1 {
        for d in 0..p {
            c[(trailing + s * p + d, trailing + (s + 1) * p + d)] = one;
        }
    }
    for i in 0..m {
        c.view_mut((last_row, trailing + i * p), (p, p))
            .copy_from(&r.poly().negated_coeff(i));
    }

    Ok(CompanionMatrix {
        matrix: c,
        blocks,
        trailing_offset: trailing,
        size: p,
        degree: m,
    })
}

/// Result of matching eigenvalues of `R` against the companion spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct ContainmentReport {
    pub contained: bool,
    /// Relative distance from each checked eigenvalue to the nearest
    /// companion eigenvalue.
    pub distances: Vec<f64>,
    /// Eigenvalues with no companion eigenvalue within tolerance.
    pub unmatched: Vec<Complex64>,
}

impl ContainmentReport {
    pub fn max_distance(&self) -> f64 {
        self.distances.iter().copied().fold(0.0, f64::max)
    }
}

/// Checks that every value in `eigs` lies within `tol·(1 + |λ|)` of an
/// eigenvalue of the companion matrix of `r`.
pub fn containment_check(r: &RationalMatrix, eigs: &[Complex64], tol: f64) -> Result<ContainmentReport> {
    let spectrum = linalg::eigenvalues(&build(r)?.matrix)?;
    Ok(match_against(eigs, &spectrum, tol))
}

pub(crate) fn match_against(eigs: &[Complex64], spectrum: &[Complex64], tol: f64) -> ContainmentReport {
    let mut distances = Vec::with_capacity(eigs.len());
    let mut unmatched = Vec::new();
    for &l in eigs {
        let d = spectrum.iter().map(|&mu| (l - mu).norm()).fold(f64::INFINITY, f64::min) / (1.0 + l.norm());
        if d > tol {
            unmatched.push(l);
        }
        distances.push(d);
    }
    ContainmentReport {
        contained: unmatched.is_empty(),
        distances,
        unmatched,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Norm;
    use crate::rational::{Mode, PoleTerm, ScalarRationalFunction};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn lambda_i() -> RationalMatrix {
        RationalMatrix::new(vec![linalg::zeros(2, 2), linalg::identity(2)], vec![], Mode::Canonical).unwrap()
    }

    #[test]
    fn lambda_identity_gives_zero_matrix() {
        let cm = build(&lambda_i()).unwrap();
        assert_eq!(cm.dimension(), 2);
        assert!(linalg::is_zero(&cm.matrix));
        assert_eq!(cm.trailing_offset, 0);
    }

    #[test]
    fn layout_of_scalar_function() {
        // r(λ) = λ² − 3λ − 2 − 5/(λ − 1)²  (canonical: powers 2 and 1)
        let r = ScalarRationalFunction::from_c(&[c(2.0), c(3.0)], &[(c(1.0), 2, c(5.0))], Mode::Canonical).unwrap();
        let cm = build(r.inner()).unwrap();
        let expected = linalg::from_real_rows(
            5,
            5,
            &[
                1., 1., 0., 0., 0., //
                0., 1., 0., -1., 0., //
                0., 0., 1., -1., 0., //
                0., 0., 0., 0., 1., //
                -5., 0., 0., 2., 3., //
            ],
        );
        assert_eq!(cm.matrix, expected);
        assert_eq!(cm.blocks.len(), 2);
        assert_eq!((cm.blocks[0].power, cm.blocks[0].offset), (2, 0));
        assert_eq!((cm.blocks[1].power, cm.blocks[1].offset), (1, 2));
        assert_eq!(cm.trailing_block(), linalg::from_real_rows(2, 2, &[0., 1., 2., 3.]));
    }

    #[test]
    fn matrix_blocks_scale_with_size() {
        let b = linalg::from_real_rows(2, 2, &[1., 2., 3., 4.]);
        let a0 = linalg::from_real_rows(2, 2, &[5., 6., 7., 8.]);
        let r = RationalMatrix::new(vec![a0.clone(), linalg::identity(2)], vec![PoleTerm::new(c(-1.0), 1, b.clone())], Mode::Canonical)
            .unwrap();
        let cm = build(&r).unwrap();
        assert_eq!(cm.dimension(), 4);
        let (a, f, bb, d) = cm.split();
        assert_eq!(a, linalg::identity(2) * c(-1.0));
        assert_eq!(f, -linalg::identity(2));
        assert_eq!(bb, b);
        assert_eq!(d, -a0);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let r = ScalarRationalFunction::from_c(&[c(1.0)], &[(c(1.0), 3, c(1.0))], Mode::Canonical).unwrap();
        assert_eq!(build(r.inner()).unwrap().dimension(), 1 + 3 + 2 + 1);
        assert!(matches!(
            build_with_cap(r.inner(), 5),
            Err(Error::DimensionOverflow { dim: 7, cap: 5 })
        ));
    }

    #[test]
    fn containment_for_simple_cases() {
        let rep = containment_check(&lambda_i(), &[c(0.0)], 1e-6).unwrap();
        assert!(rep.contained);
        let r = ScalarRationalFunction::from_c(&[c(0.0)], &[(c(0.0), 1, c(1.0))], Mode::Canonical).unwrap();
        let rep = containment_check(r.inner(), &[c(1.0), c(-1.0)], 1e-6).unwrap();
        assert!(rep.contained, "{rep:?}");
        let rep = containment_check(r.inner(), &[c(2.0)], 1e-6).unwrap();
        assert!(!rep.contained);
        assert_eq!(rep.unmatched, vec![c(2.0)]);
    }

    #[test]
    fn polynomial_companion_norms() {
        // no poles: B_0 only, norms are the Montel / column-sum forms
        let r = ScalarRationalFunction::from_c(&[c(-2.0), c(1.0), c(1.0)], &[], Mode::Canonical).unwrap();
        let cm = build(r.inner()).unwrap();
        assert_eq!(linalg::norm(&cm.matrix, Norm::Inf), 4.0);
        assert_eq!(linalg::norm(&cm.matrix, Norm::One), 2.0);
    }
}
