//! Upper bounds on the moduli of eigenvalues of rational matrices
//! `R(λ) = P(λ) + Σ B/(λ − a)^k` with monic polynomial part.
//!
//! The eigenvalues of `R` are contained in the spectrum of a block companion
//! matrix ([`companion`]); bounds come from norms and numerical radii of that
//! matrix ([`scalar_bounds`]) and from a real scalar function `q` built from
//! coefficient norms ([`matrix_bounds`]). [`spectrum`] computes reference
//! eigenvalues for checking them.

pub mod bound;
pub mod companion;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod matrix_bounds;
pub mod poly;
pub mod random;
pub mod rational;
pub mod scalar_bounds;
pub mod schema;
pub mod spectrum;

pub use num_complex::Complex64;

pub use bound::{BoundValue, Method, PolyMethod, RationalMethod};
pub use companion::CompanionMatrix;
pub use error::{Error, Result};
pub use linalg::{CMatrix, Norm};
pub use matrix_bounds::RealRationalFunction;
pub use poly::MonicPolynomial;
pub use rational::{Mode, PoleTerm, RationalMatrix, ScalarRationalFunction};
pub use schema::InstanceFile;
pub use spectrum::SpectrumResult;
