use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Classical and companion-based bounds on zeros of a monic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyMethod {
    Montel,
    OneNorm,
    CompanionNr,
    Cauchy,
    CarmichaelMason,
    Frakis,
    Rouche,
    AzizRather,
}

impl PolyMethod {
    pub const ALL: [PolyMethod; 8] = [
        PolyMethod::Montel,
        PolyMethod::OneNorm,
        PolyMethod::CompanionNr,
        PolyMethod::Cauchy,
        PolyMethod::CarmichaelMason,
        PolyMethod::Frakis,
        PolyMethod::Rouche,
        PolyMethod::AzizRather,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyMethod::Montel => "montel",
            PolyMethod::OneNorm => "one_norm",
            PolyMethod::CompanionNr => "companion_nr",
            PolyMethod::Cauchy => "cauchy",
            PolyMethod::CarmichaelMason => "carmichael_mason",
            PolyMethod::Frakis => "frakis",
            PolyMethod::Rouche => "rouche",
            PolyMethod::AzizRather => "aziz_rather",
        }
    }
}

/// Bounds on zeros of a scalar rational function built from its companion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RationalMethod {
    InfNorm,
    OneNorm,
    NrSplit,
}

impl RationalMethod {
    pub const ALL: [RationalMethod; 3] = [RationalMethod::InfNorm, RationalMethod::OneNorm, RationalMethod::NrSplit];

    pub fn name(self) -> &'static str {
        match self {
            RationalMethod::InfNorm => "inf_norm",
            RationalMethod::OneNorm => "one_norm",
            RationalMethod::NrSplit => "nr_split",
        }
    }
}

/// Which formula produced a [`BoundValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "method")]
pub enum Method {
    /// Bound on zeros of a monic polynomial.
    Poly(PolyMethod),
    /// Bound on zeros of a scalar rational function.
    Rational(RationalMethod),
    /// Linear polynomial part, scalar case.
    LinearCase,
    /// Smallest zero of the associated real function `q` beyond every pole.
    QRoot,
    /// Row-sum norm of the companion of `q`.
    Summary1,
    /// Column-sum norm of the companion of `q`.
    Summary2,
    /// Numerical-radius split of the companion of `q`.
    Summary3,
    /// Linear polynomial part, matrix case.
    LinearMatrix,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Poly(m) => m.name(),
            Method::Rational(m) => m.name(),
            Method::LinearCase => "linear_case",
            Method::QRoot => "q_root",
            Method::Summary1 => "summary1",
            Method::Summary2 => "summary2",
            Method::Summary3 => "summary3",
            Method::LinearMatrix => "linear_matrix",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PolyMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown polynomial bound `{s}`")))
    }
}

/// A bound on the moduli of zeros or eigenvalues, with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub value: f64,
    pub method: Method,
    pub notes: String,
}

impl BoundValue {
    pub fn new(value: f64, method: Method, notes: impl Into<String>) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0, "{method}: bound {value} must be finite and >= 0");
        Self {
            value,
            method,
            notes: notes.into(),
        }
    }
}
