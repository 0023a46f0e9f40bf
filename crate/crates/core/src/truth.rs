//! Truth data for each output bit of `X mod P`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{AnfPolynomial, ConverterSpec, ModConverter, PackedBits, TruthNumbers, TruthVector};

/// Truth vectors of all outputs, `S_1` first, from one pass over the inputs.
///
/// The residue is carried along incrementally, so no division happens per input.
pub fn truth_vectors(spec: &ConverterSpec) -> Vec<TruthVector> {
    let delta = spec.delta() as usize;
    let p = spec.p();
    let mut out: Vec<PackedBits> = (0..delta).map(|_| PackedBits::for_vars(spec.n())).collect();
    let mut words: Vec<&mut [u64]> = out.iter_mut().map(|b| b.words_mut()).collect();

    let mut residue = 0u64;
    for j in 0..spec.inputs() as usize {
        let (wi, bit) = (j >> 6, j & 63);
        let mut r = residue;
        let mut i = 0;
        while r != 0 {
            words[i][wi] |= (r & 1) << bit;
            r >>= 1;
            i += 1;
        }
        residue += 1;
        if residue == p {
            residue = 0;
        }
    }
    out.into_iter().map(TruthVector::new).collect()
}

/// Truth vector `w(S_index)`: entry `j` is bit `index - 1` of `j mod p`.
pub fn truth_vector(spec: &ConverterSpec, index: usize) -> Result<TruthVector> {
    spec.check_output(index)?;
    let shift = index - 1;
    let p = spec.p();
    let mut bits = PackedBits::for_vars(spec.n());
    // Each word covers 64 consecutive inputs; restart the running residue per
    // word so words can be filled independently.
    bits.words_mut()
        .par_iter_mut()
        .enumerate()
        .for_each(|(wi, word)| {
            let first = (wi as u64) << 6;
            let mut residue = first % p;
            let count = (1u64 << spec.n()).min(64);
            let mut acc = 0u64;
            for b in 0..count {
                acc |= ((residue >> shift) & 1) << b;
                residue += 1;
                if residue == p {
                    residue = 0;
                }
            }
            *word = acc;
        });
    Ok(TruthVector::new(bits))
}

/// Truth numbers `A(S_index)`: inputs whose residue has bit `index - 1` set.
pub fn truth_numbers(spec: &ConverterSpec, index: usize) -> Result<TruthNumbers> {
    Ok(truth_vector(spec, index)?.truth_numbers())
}

/// Converter for `p = 2^d`: the residue is just the low `d` input bits.
pub fn passthrough_converter(spec: &ConverterSpec) -> Result<ModConverter> {
    if !spec.is_power_of_two_modulus() {
        return Err(Error::NotPowerOfTwo(spec.p()));
    }
    let d = spec.p().trailing_zeros();
    let n = spec.n();
    let polys = (1..=spec.delta() as usize)
        .map(|i| {
            let k = i as u32;
            if k <= d && k <= n {
                AnfPolynomial::from_masks(n, i, [1u32 << (k - 1)])
            } else {
                Ok(AnfPolynomial::zero(n, i))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ModConverter::new(*spec, polys)
}
