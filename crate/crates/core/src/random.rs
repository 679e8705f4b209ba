//! Reproducible random instances.
//!
//! The stream is fully specified so it can be regenerated elsewhere:
//!
//! * Generator: SplitMix64 (state `s += 0x9E3779B97F4A7C15`, output mixed by
//!   `z = (z ^ z>>30)·0xBF58476D1CE4E5B9; z = (z ^ z>>27)·0x94D049BB133111EB;
//!   z ^ z>>31`), seeded with the 64-bit seed as its initial state.
//! * Instance `i` (from 0) uses a fresh SplitMix64 whose seed is output
//!   number `i` of the master generator seeded with the stream seed, so
//!   instances can be drawn independently and in parallel.
//! * A uniform float is `(u >> 11)·2^−53` for the next output `u`; an integer
//!   in `lo..=hi` is `lo + ⌊f·(hi − lo + 1)⌋` for the next float `f`; a value in
//!   `[−c, c]` is `c·(2f − 1)`; a complex value draws the real part first.
//!
//! Instance layout, in draw order: size `p`, degree `m`, the entries of
//! `A_0..A_{m−1}` (row-major), the number of poles, then per pole its
//! location (redrawn, up to 100 times, while within [`MIN_POLE_GAP`] of an
//! earlier pole), its order `k`, and the coefficients for powers `k` down to
//! `1`.

use num_complex::Complex64;
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::linalg::{self, CMatrix};
use crate::rational::{Mode, PoleTerm, RationalMatrix};

pub const MIN_POLE_GAP: f64 = 0.1;

pub struct Sampler(SplitMix64);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    /// Sampler for instance `index` of the stream with the given seed.
    pub fn for_instance(seed: u64, index: usize) -> Self {
        let mut master = SplitMix64::seed_from_u64(seed);
        let mut s = 0;
        for _ in 0..=index {
            s = master.next_u64();
        }
        Self::new(s)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `lo..=hi`.
    pub fn int(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + (self.uniform() * (hi - lo + 1) as f64) as usize
    }

    /// Uniform in `[−c, c]`.
    pub fn symmetric(&mut self, c: f64) -> f64 {
        c * (2.0 * self.uniform() - 1.0)
    }

    pub fn complex(&mut self, c: f64) -> Complex64 {
        let re = self.symmetric(c);
        Complex64::new(re, self.symmetric(c))
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, c: f64) -> CMatrix {
        let mut m = linalg::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.complex(c);
            }
        }
        m
    }
}

/// Ranges for generated instances (all inclusive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceParams {
    pub size: (usize, usize),
    pub degree: (usize, usize),
    pub poles: (usize, usize),
    pub max_order: usize,
    /// Bound on the real and imaginary part of every coefficient and pole.
    pub coeff_bound: f64,
}

impl Default for InstanceParams {
    fn default() -> Self {
        Self {
            size: (1, 3),
            degree: (1, 3),
            poles: (0, 2),
            max_order: 2,
            coeff_bound: 5.0,
        }
    }
}

impl InstanceParams {
    pub fn scalar() -> Self {
        Self {
            size: (1, 1),
            ..Self::default()
        }
    }
}

/// Canonical-mode instance drawn from `s`.
pub fn random_instance(s: &mut Sampler, params: &InstanceParams) -> RationalMatrix {
    let c = params.coeff_bound;
    let p = s.int(params.size.0, params.size.1);
    let m = s.int(params.degree.0, params.degree.1);
    let mut coeffs: Vec<CMatrix> = (0..m).map(|_| s.matrix(p, p, c)).collect();
    coeffs.push(linalg::identity(p));

    let n = s.int(params.poles.0, params.poles.1);
    let mut poles: Vec<Complex64> = Vec::with_capacity(n);
    let mut terms = Vec::new();
    for _ in 0..n {
        let mut a = s.complex(c);
        for _ in 0..100 {
            if poles.iter().all(|b| (a - b).norm() >= MIN_POLE_GAP) {
                break;
            }
            a = s.complex(c);
        }
        poles.push(a);
        let k = s.int(1, params.max_order);
        for power in (1..=k).rev() {
            terms.push(PoleTerm::new(a, power, s.matrix(p, p, c)));
        }
    }
    RationalMatrix::new(coeffs, terms, Mode::Canonical).expect("generated instance is valid")
}

/// Instances `0..count` of the stream with the given seed.
pub fn instance_stream(seed: u64, count: usize, params: &InstanceParams) -> Vec<RationalMatrix> {
    (0..count).map(|i| random_instance(&mut Sampler::for_instance(seed, i), params)).collect()
}
