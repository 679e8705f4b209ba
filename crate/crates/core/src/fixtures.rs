//! Worked instances shipped with the crate.

use crate::poly::MonicPolynomial;
use crate::rational::{RationalMatrix, ScalarRationalFunction};
use crate::schema::InstanceFile;

pub const EX41: &str = include_str!("../fixtures/ex41.json");
pub const EX42: &str = include_str!("../fixtures/ex42.json");
pub const LAMBDA_I: &str = include_str!("../fixtures/lambda_i.json");
pub const R1_NONREGULAR: &str = include_str!("../fixtures/r1_nonregular.json");
pub const P1: &str = include_str!("../fixtures/p1.json");
pub const P2: &str = include_str!("../fixtures/p2.json");

/// Every fixture as `(file stem, json)`.
pub const ALL: [(&str, &str); 6] = [
    ("ex41", EX41),
    ("ex42", EX42),
    ("lambda_i", LAMBDA_I),
    ("r1_nonregular", R1_NONREGULAR),
    ("p1", P1),
    ("p2", P2),
];

fn load(text: &str) -> RationalMatrix {
    InstanceFile::from_json(text)
        .and_then(|f| f.validate())
        .expect("bundled fixture is valid")
}

/// 3×3 cubic with a double pole at 1 and a simple pole at 2 (canonical).
pub fn ex41() -> RationalMatrix {
    load(EX41)
}

/// Scalar quintic with five written pole terms at 1 and 3 (per-term).
pub fn ex42() -> ScalarRationalFunction {
    ScalarRationalFunction::new(load(EX42)).expect("scalar fixture")
}

pub fn lambda_i() -> RationalMatrix {
    load(LAMBDA_I)
}

fn poly(text: &str) -> MonicPolynomial {
    ScalarRationalFunction::new(load(text)).expect("scalar fixture").polynomial_part()
}

/// `λ³ − 2iλ² − (1+i)λ − 1`.
pub fn p1() -> MonicPolynomial {
    poly(P1)
}

/// `λ³ − λ² − λ + 2`.
pub fn p2() -> MonicPolynomial {
    poly(P2)
}
