//! JSON instance files.
//!
//! ```json
//! {"size": 1,
//!  "poly": [ [[[0,0]]], [[[1,0]]] ],
//!  "terms": [ {"a": [0,0], "k": 1, "B": [[[-1,0]]]} ],
//!  "mode": "canonical"}
//! ```
//!
//! `poly` lists the coefficient matrices `A_0..A_m` in ascending powers; every
//! matrix is a list of rows and every entry a `[re, im]` pair. `B` is the
//! added coefficient of `B/(λ − a)^k`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rational::{Mode, PoleTerm, RationalMatrix};

/// Row-major matrix of `[re, im]` pairs.
pub type MatrixData = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    pub poly: Vec<MatrixData>,
    #[serde(default)]
    pub terms: Vec<TermData>,
    #[serde(default)]
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermData {
    pub a: [f64; 2],
    pub k: usize,
    #[serde(rename = "B")]
    pub b: MatrixData,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serialization cannot fail")
    }

    /// Coefficient matrices and pole terms, checked only for shape and
    /// finiteness (the leading coefficient is not inspected).
    pub fn to_parts(&self) -> Result<(Vec<CMatrix>, Vec<PoleTerm>)> {
        if self.size == 0 {
            return Err(Error::DimensionMismatch {
                context: "size must be positive".into(),
            });
        }
        let poly = self
            .poly
            .iter()
            .enumerate()
            .map(|(i, m)| matrix_from_data(m, self.size, &format!("poly[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let pole = Complex64::new(t.a[0], t.a[1]);
                if !pole.re.is_finite() || !pole.im.is_finite() {
                    return Err(Error::NonFiniteEntry {
                        context: format!("terms[{i}].a"),
                    });
                }
                Ok(PoleTerm::new(pole, t.k, matrix_from_data(&t.b, self.size, &format!("terms[{i}].B"))?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((poly, terms))
    }

    pub fn validate(&self) -> Result<RationalMatrix> {
        let (poly, terms) = self.to_parts()?;
        RationalMatrix::new(poly, terms, self.mode)
    }

    pub fn from_instance(r: &RationalMatrix) -> Self {
        Self {
            name: None,
            size: r.size(),
            poly: r.poly().coeffs().iter().map(matrix_to_data).collect(),
            terms: r
                .terms()
                .iter()
                .map(|t| TermData {
                    a: [t.pole.re, t.pole.im],
                    k: t.power,
                    b: matrix_to_data(&t.coeff),
                })
                .collect(),
            mode: r.mode(),
        }
    }
}

pub fn matrix_from_data(data: &MatrixData, size: usize, context: &str) -> Result<CMatrix> {
    if data.len() != size || data.iter().any(|row| row.len() != size) {
        return Err(Error::DimensionMismatch {
            context: format!("{context} is not {size}x{size}"),
        });
    }
    if data.iter().flatten().flatten().any(|x| !x.is_finite()) {
        return Err(Error::NonFiniteEntry {
            context: context.to_string(),
        });
    }
    Ok(CMatrix::from_fn(size, size, |i, j| Complex64::new(data[i][j][0], data[i][j][1])))
}

pub fn matrix_to_data(a: &CMatrix) -> MatrixData {
    (0..a.nrows())
        .map(|i| (0..a.ncols()).map(|j| [a[(i, j)].re, a[(i, j)].im]).collect())
        .collect()
}
