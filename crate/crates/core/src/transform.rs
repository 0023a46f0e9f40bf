//! Truth vector to Reed-Muller spectrum conversion.
//!
//! Two independent routes are provided. [`fast_transform`] is the GF(2)
//! butterfly (subset Möbius transform) over packed words. The combinatorial
//! route computes each coefficient as a parity of binomial coefficients
//! `C(i, a)` over the ones `a` of the input vector, using Lucas' theorem for
//! the parity test. Both maps are involutions, so each serves in either
//! direction.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{PackedBits, RmSpectrum, TruthVector};

/// Largest `i` (and `a`) accepted by [`binomial_parity_oracle`].
pub const ORACLE_CAP: u64 = 4096;

/// Width limit for the combinatorial method, whose cost is `O(q * 2^n)`.
pub const COMBINATORIAL_N_MAX: u32 = 16;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Fast,
    Combinatorial,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Combinatorial => "combinatorial",
        }
    }
}

// Masks selecting in-word positions whose bit `s` is clear, for s = 1, 2, 4, ...
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// In-place subset transform: entry `i` becomes the XOR of entries `j ⊆ i`.
pub fn mobius_in_place(bits: &mut PackedBits) {
    let len = bits.len();
    let words = bits.words_mut();

    for (level, &low) in LOW_HALVES.iter().enumerate() {
        let shift = 1usize << level;
        if shift >= len {
            break;
        }
        for w in words.iter_mut() {
            *w ^= (*w & low) << shift;
        }
    }

    let mut step = 1;
    while step < words.len() {
        for block in words.chunks_exact_mut(2 * step) {
            let (lo, hi) = block.split_at_mut(step);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
        step <<= 1;
    }
}

/// Reed-Muller spectrum of a truth vector by the butterfly transform.
pub fn fast_transform(w: &TruthVector) -> RmSpectrum {
    let mut bits = w.bits().clone();
    mobius_in_place(&mut bits);
    RmSpectrum::new(bits)
}

/// Truth vector of a spectrum; the same butterfly, since the transform is self-inverse.
pub fn fast_inverse(r: &RmSpectrum) -> TruthVector {
    let mut bits = r.bits().clone();
    mobius_in_place(&mut bits);
    TruthVector::new(bits)
}

/// Butterfly transform on a plain bit slice; the length must be a power of two.
pub fn fast_transform_bools(v: &[bool]) -> Result<Vec<bool>> {
    let mut bits = PackedBits::from_bools(v)?;
    mobius_in_place(&mut bits);
    Ok(bits.to_bools())
}

/// Parity of `C(i, a)`: odd exactly when every bit of `a` is also set in `i`.
/// Covers `a > i` as well, where the coefficient is 0.
#[inline]
pub fn lucas_parity(i: u64, a: u64) -> bool {
    i & a == a
}

/// Rows of Pascal's triangle reduced mod 2, built by addition only.
#[derive(Debug, Clone, Default)]
pub struct PascalParityRows {
    row: Vec<bool>,
}

impl PascalParityRows {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for PascalParityRows {
    type Item = Vec<bool>;

    fn next(&mut self) -> Option<Vec<bool>> {
        if self.row.is_empty() {
            self.row.push(true);
        } else {
            let mut next = Vec::with_capacity(self.row.len() + 1);
            next.push(true);
            for pair in self.row.windows(2) {
                next.push(pair[0] ^ pair[1]);
            }
            next.push(true);
            self.row = next;
        }
        Some(self.row.clone())
    }
}

/// Parity of `C(i, a)` read off Pascal's triangle mod 2, with no bit tricks.
pub fn binomial_parity_oracle(i: u64, a: u64) -> Result<bool> {
    if i > ORACLE_CAP || a > ORACLE_CAP {
        return Err(Error::OracleCap { i, a, cap: ORACLE_CAP });
    }
    if a > i {
        return Ok(false);
    }
    let row = PascalParityRows::new()
        .nth(i as usize)
        .expect("row iterator is unbounded");
    Ok(row[a as usize])
}

/// One entry of the combinatorial transform: `sum_j C(i, a_j) mod 2` over
/// the ascending `ones`. Applied to spectrum ones it yields a truth vector
/// entry; applied to truth numbers it yields a spectrum coefficient.
pub fn eval_truth_from_spectrum(ones: &[u64], i: u64) -> bool {
    ones.iter()
        .take_while(|&&a| a <= i)
        .fold(false, |acc, &a| acc ^ lucas_parity(i, a))
}

/// Combinatorial transform of a packed vector.
pub fn combinatorial_transform_bits(v: &PackedBits) -> PackedBits {
    let ones: Vec<u64> = v.ones().map(|i| i as u64).collect();
    let len = v.len();
    let mut out = PackedBits::zeros(len).expect("length is a power of two");
    out.words_mut().par_iter_mut().enumerate().for_each(|(wi, word)| {
        let base = wi << 6;
        let mut acc = 0u64;
        for b in 0..(len - base).min(64) {
            if eval_truth_from_spectrum(&ones, (base + b) as u64) {
                acc |= 1 << b;
            }
        }
        *word = acc;
    });
    out
}

/// Spectrum by the combinatorial method: `r_i = sum over a in A, a <= i, of
/// C(i, a) mod 2`, where `A` are the truth numbers.
pub fn combinatorial_transform(w: &TruthVector) -> RmSpectrum {
    RmSpectrum::new(combinatorial_transform_bits(w.bits()))
}

/// Combinatorial route back from a spectrum to its truth vector.
pub fn combinatorial_inverse(r: &RmSpectrum) -> TruthVector {
    TruthVector::new(combinatorial_transform_bits(r.bits()))
}

/// Spectrum by the selected method.
pub fn transform(w: &TruthVector, method: Method) -> Result<RmSpectrum> {
    match method {
        Method::Fast => Ok(fast_transform(w)),
        Method::Combinatorial => {
            let n = w.num_vars();
            if n > COMBINATORIAL_N_MAX {
                return Err(Error::CombinatorialWidth {
                    n,
                    max: COMBINATORIAL_N_MAX,
                });
            }
            Ok(combinatorial_transform(w))
        }
    }
}
