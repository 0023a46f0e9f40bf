//! Exhaustive checking of a converter against `j mod p`.
//!
//! Nothing here reuses the generator's code paths. The reference residue is
//! computed by subtracting doubled copies of the modulus, and the circuit is
//! evaluated either term by term or with a plain unpacked subset-sum table.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{decode_residue, AnfPolynomial, ConverterSpec, ModConverter};
use crate::transform::{self, Method, COMBINATORIAL_N_MAX};
use crate::truth;

/// Inputs per parallel chunk.
const CHUNK: u64 = 1 << 12;

/// Above this many term-input pairs the dense evaluator is used.
const DIRECT_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: u64,
    pub expected: u64,
    pub produced: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    /// Inputs compared: `2^n` on success, otherwise up to and including the counterexample.
    pub inputs_checked: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `x mod p` by repeated subtraction of the largest doubling of `p` that fits.
pub fn residue_by_subtraction(x: u64, p: u64) -> u64 {
    assert!(p > 0, "modulus must be positive");
    let mut r = x;
    while r >= p {
        let mut chunk = p;
        while chunk <= r - chunk {
            chunk <<= 1;
        }
        r -= chunk;
    }
    r
}

/// Value table of a polynomial: coefficients at the term masks, then a
/// per-variable subset-sum sweep over one byte per input.
fn dense_values(poly: &AnfPolynomial) -> Vec<u8> {
    let len = 1usize << poly.n();
    let mut v = vec![0u8; len];
    for t in poly.terms() {
        v[t.mask() as usize] = 1;
    }
    for k in 0..poly.n() {
        let bit = 1usize << k;
        for x in 0..len {
            if x & bit != 0 {
                v[x] ^= v[x ^ bit];
            }
        }
    }
    v
}

enum Evaluator<'a> {
    Direct(&'a [AnfPolynomial]),
    Dense(Vec<Vec<u8>>),
}

impl Evaluator<'_> {
    fn residue(&self, x: u64) -> u64 {
        match self {
            Evaluator::Direct(polys) => {
                let bits: Vec<bool> = polys
                    .iter()
                    .map(|p| p.terms().iter().fold(false, |acc, t| acc ^ t.holds(x)))
                    .collect();
                decode_residue(&bits)
            }
            Evaluator::Dense(tables) => tables
                .iter()
                .enumerate()
                .fold(0, |acc, (i, t)| acc | (u64::from(t[x as usize]) << i)),
        }
    }
}

/// Compares every input in `[0, 2^n)`; keeps the smallest failing input.
pub fn verify_converter(converter: &ModConverter) -> VerificationReport {
    let start = Instant::now();
    let spec = converter.spec();
    let p = spec.p();
    let inputs = spec.inputs();

    let work = converter.stats().total_terms.saturating_mul(inputs);
    let eval = if work <= DIRECT_LIMIT {
        Evaluator::Direct(converter.polys())
    } else {
        Evaluator::Dense(converter.polys().par_iter().map(dense_values).collect())
    };

    let chunks = inputs.div_ceil(CHUNK);
    let failure = (0..chunks).into_par_iter().find_map_first(|c| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(inputs);
        (lo..hi).find_map(|x| {
            let expected = residue_by_subtraction(x, p);
            let produced = eval.residue(x);
            (expected != produced).then_some(Counterexample {
                input: x,
                expected,
                produced,
            })
        })
    });

    VerificationReport {
        pass: failure.is_none(),
        inputs_checked: failure.map_or(inputs, |f| f.input + 1),
        counterexample: failure,
        elapsed: start.elapsed(),
    }
}

/// True iff the butterfly and the combinatorial transform agree on every output bit.
pub fn cross_check_methods(spec: &ConverterSpec) -> Result<bool> {
    if spec.n() > COMBINATORIAL_N_MAX {
        return Err(Error::CombinatorialWidth {
            n: spec.n(),
            max: COMBINATORIAL_N_MAX,
        });
    }
    let agree = truth::truth_vectors(spec).par_iter().all(|w| {
        transform::transform(w, Method::Fast).ok() == transform::transform(w, Method::Combinatorial).ok()
    });
    Ok(agree)
}
