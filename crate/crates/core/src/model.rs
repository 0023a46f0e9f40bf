//! Shared domain types.
//!
//! Indexing convention, used everywhere in the crate: input `j` assigns
//! variable `x_{k+1}` the value of bit `k` (0-based, least significant
//! first) of `j`. The same integer doubles as a monomial mask, so bit `k`
//! of a mask means `x_{k+1}` appears in the AND term. Output bits are
//! `S_1..S_delta` with `S_1` the least significant bit of the residue.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verify::VerificationReport;

/// Largest supported input width. Truth vectors hold `2^n` bits each.
pub const N_MAX: u32 = 24;

/// Largest supported modulus.
pub const P_MAX: u64 = 1 << 32;

/// Value of variable `x_{k+1}` on input `input`.
#[inline]
pub fn var_bit(input: u64, k: u32) -> bool {
    (input >> k) & 1 == 1
}

/// Output width for modulus `p`: `floor(log2 p) + 1`.
pub fn delta_of(p: u64) -> Result<u32> {
    if p == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(u64::BITS - p.leading_zeros())
}

/// Reassembles a residue from its output bits, `bits[0]` being `S_1`.
pub fn decode_residue(bits: &[bool]) -> u64 {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
}

/// Problem instance: `n` input bits reduced modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConverterSpec {
    n: u32,
    p: u64,
    delta: u32,
}

impl ConverterSpec {
    pub fn new(n: u32, p: u64) -> Result<Self> {
        let delta = delta_of(p)?;
        if p > P_MAX {
            return Err(Error::ModulusTooLarge(p));
        }
        if n == 0 {
            return Err(Error::ZeroWidth);
        }
        if n > N_MAX {
            return Err(Error::WidthLimit { n });
        }
        Ok(Self { n, p, delta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// Number of input combinations, `2^n`.
    pub fn inputs(&self) -> u64 {
        1u64 << self.n
    }

    pub fn is_power_of_two_modulus(&self) -> bool {
        self.p.is_power_of_two()
    }

    /// Checks a 1-based output index.
    pub fn check_output(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.delta as usize {
            return Err(Error::OutputIndex {
                index,
                delta: self.delta as usize,
            });
        }
        Ok(())
    }
}

/// Packed bit sequence of power-of-two length, 64 entries per word.
///
/// Entry `i` lives in bit `i % 64` of word `i / 64`. Bits past `len` in a
/// short single word are always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackedBits {
    len: usize,
    words: Vec<u64>,
}

impl PackedBits {
    pub fn zeros(len: usize) -> Result<Self> {
        if !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwoLength(len));
        }
        Ok(Self {
            len,
            words: vec![0; len.div_ceil(64)],
        })
    }

    /// All-zero vector over `n` variables.
    pub fn for_vars(n: u32) -> Self {
        Self {
            len: 1 << n,
            words: vec![0; (1usize << n).div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        let mut out = Self::zeros(bits.len())?;
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            out.set(i, true);
        }
        Ok(out)
    }

    /// Builds from 0/1 entries, the notation used in worked examples.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let bools: Vec<bool> = digits.iter().map(|&d| d != 0).collect();
        Self::from_bools(&bools)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn num_vars(&self) -> u32 {
        self.len.trailing_zeros()
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let bit = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= bit;
        } else {
            self.words[i >> 6] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Positions of set entries in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((wi << 6) | bit)
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }
}

/// Value table `w(S_i)` of one output bit over all `2^n` inputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthVector(PackedBits);

impl TruthVector {
    pub fn new(bits: PackedBits) -> Self {
        Self(bits)
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        PackedBits::from_digits(digits).map(Self)
    }

    pub fn bits(&self) -> &PackedBits {
        &self.0
    }

    pub fn into_bits(self) -> PackedBits {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn num_vars(&self) -> u32 {
        self.0.num_vars()
    }

    pub fn get(&self, input: usize) -> bool {
        self.0.get(input)
    }

    pub fn truth_numbers(&self) -> TruthNumbers {
        TruthNumbers(self.0.ones().map(|i| i as u64).collect())
    }
}

/// Truth numbers `A(S_i)`: inputs on which the function is 1, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruthNumbers(Vec<u64>);

impl TruthNumbers {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rebuilds the truth vector over `n` variables.
    pub fn to_truth_vector(&self, n: u32) -> Result<TruthVector> {
        let mut bits = PackedBits::for_vars(n);
        for &j in &self.0 {
            if j >= bits.len() as u64 {
                return Err(Error::InputOutOfRange { x: j, n });
            }
            bits.set(j as usize, true);
        }
        Ok(TruthVector(bits))
    }
}

/// Positive-polarity Reed-Muller (Zhegalkin) spectrum `r(S_i)`.
///
/// Entry `i` set means the monomial with mask `i` is in the polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RmSpectrum(PackedBits);

impl RmSpectrum {
    pub fn new(bits: PackedBits) -> Self {
        Self(bits)
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        PackedBits::from_digits(digits).map(Self)
    }

    pub fn bits(&self) -> &PackedBits {
        &self.0
    }

    pub fn into_bits(self) -> PackedBits {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn num_vars(&self) -> u32 {
        self.0.num_vars()
    }

    pub fn get(&self, index: usize) -> bool {
        self.0.get(index)
    }

    pub fn flip(&mut self, index: usize) {
        self.0.flip(index)
    }

    pub fn popcount(&self) -> u64 {
        self.0.count_ones()
    }

    /// The set-of-positions view `B(S_i)`.
    pub fn ones(&self) -> Vec<u64> {
        self.0.ones().map(|i| i as u64).collect()
    }
}

/// One AND term; bit `k` of the mask selects `x_{k+1}`. Mask 0 is the constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(mask: u32) -> Self {
        Self(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    /// True when every variable of the term is 1 on `input`.
    #[inline]
    pub fn holds(self, input: u64) -> bool {
        let mask = u64::from(self.0);
        input & mask == mask
    }

    /// 1-based indices of the variables in the term, ascending.
    pub fn variables(self) -> impl Iterator<Item = u32> {
        let mask = self.0;
        (0..u32::BITS).filter(move |&k| var_bit(u64::from(mask), k)).map(|k| k + 1)
    }
}

/// XOR of AND terms for output `S_output`, kept as an ascending set of masks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnfPolynomial {
    n: u32,
    output: usize,
    terms: Vec<Monomial>,
}

impl AnfPolynomial {
    /// Builds from masks in any order; repeated masks cancel in pairs.
    pub fn from_masks(n: u32, output: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut masks: Vec<u32> = masks.into_iter().collect();
        if let Some(&bad) = masks.iter().find(|&&m| n < 32 && m >> n != 0) {
            return Err(Error::MaskOutOfRange { mask: bad, n });
        }
        masks.sort_unstable();
        let mut terms = Vec::with_capacity(masks.len());
        let mut it = masks.into_iter().peekable();
        while let Some(m) = it.next() {
            let mut count = 1;
            while it.peek() == Some(&m) {
                it.next();
                count += 1;
            }
            if count % 2 == 1 {
                terms.push(Monomial(m));
            }
        }
        Ok(Self { n, output, terms })
    }

    /// Constant-zero polynomial.
    pub fn zero(n: u32, output: usize) -> Self {
        Self {
            n,
            output,
            terms: Vec::new(),
        }
    }

    pub(crate) fn from_sorted_terms(n: u32, output: usize, terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] < w[1]));
        Self { n, output, terms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// 1-based output index.
    pub fn output(&self) -> usize {
        self.output
    }

    /// Terms in ascending mask order.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn masks(&self) -> Vec<u32> {
        self.terms.iter().map(|t| t.mask()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.terms.binary_search(&Monomial(mask)).is_ok()
    }

    /// Adds the term if absent, removes it if present.
    pub fn toggle(&mut self, mask: u32) -> Result<()> {
        if self.n < 32 && mask >> self.n != 0 {
            return Err(Error::MaskOutOfRange { mask, n: self.n });
        }
        match self.terms.binary_search(&Monomial(mask)) {
            Ok(pos) => {
                self.terms.remove(pos);
            }
            Err(pos) => self.terms.insert(pos, Monomial(mask)),
        }
        Ok(())
    }
}

/// Size and depth figures for a converter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitStats {
    pub terms: Vec<u64>,
    pub literals: Vec<u64>,
    pub degrees: Vec<u32>,
    pub max_degree: u32,
    pub total_terms: u64,
    pub total_literals: u64,
    /// `ceil(log2(max(terms, 1)))` per output.
    pub xor_depths: Vec<u32>,
    /// `ceil(log2(max(degree, 1)))` per output.
    pub and_depths: Vec<u32>,
    pub max_xor_depth: u32,
    pub max_and_depth: u32,
}

/// A finished `X mod P` circuit: one polynomial per output bit, `S_1` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModConverter {
    spec: ConverterSpec,
    polys: Vec<AnfPolynomial>,
    stats: CircuitStats,
    verification: Option<VerificationReport>,
}

impl ModConverter {
    /// Assembles a converter; `polys` must hold one polynomial per output bit.
    pub fn new(spec: ConverterSpec, polys: Vec<AnfPolynomial>) -> Result<Self> {
        let delta = spec.delta() as usize;
        if polys.len() != delta {
            return Err(Error::LengthMismatch {
                left: polys.len(),
                right: delta,
            });
        }
        for (i, poly) in polys.iter().enumerate() {
            if poly.output() != i + 1 {
                return Err(Error::OutputIndex {
                    index: poly.output(),
                    delta,
                });
            }
            if poly.n() != spec.n() {
                return Err(Error::LengthMismatch {
                    left: poly.n() as usize,
                    right: spec.n() as usize,
                });
            }
        }
        let stats = crate::polynomial::stats_of(&polys);
        Ok(Self {
            spec,
            polys,
            stats,
            verification: None,
        })
    }

    pub fn spec(&self) -> &ConverterSpec {
        &self.spec
    }

    pub fn polys(&self) -> &[AnfPolynomial] {
        &self.polys
    }

    /// Polynomial for 1-based output `index`.
    pub fn poly(&self, index: usize) -> Result<&AnfPolynomial> {
        self.spec.check_output(index)?;
        Ok(&self.polys[index - 1])
    }

    pub fn stats(&self) -> &CircuitStats {
        &self.stats
    }

    pub fn verification(&self) -> Option<&VerificationReport> {
        self.verification.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.verification.as_ref().is_some_and(|r| r.pass)
    }

    pub fn with_verification(mut self, report: VerificationReport) -> Self {
        self.verification = Some(report);
        self
    }

    /// Copy with one spectrum coefficient of output `index` flipped.
    /// Any earlier verification result is dropped.
    pub fn with_flipped_term(&self, index: usize, mask: u32) -> Result<Self> {
        self.spec.check_output(index)?;
        let mut polys = self.polys.clone();
        polys[index - 1].toggle(mask)?;
        Self::new(self.spec, polys)
    }

    /// Residue the circuit produces on `input`, by direct term evaluation.
    pub fn eval(&self, input: u64) -> Result<u64> {
        let bits = self
            .polys
            .iter()
            .map(|p| p.eval(input))
            .collect::<Result<Vec<bool>>>()?;
        Ok(decode_residue(&bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_values() {
        assert_eq!(delta_of(7).unwrap(), 3);
        assert_eq!(delta_of(691).unwrap(), 10);
        assert_eq!(delta_of(1).unwrap(), 1);
        assert_eq!(delta_of(8).unwrap(), 4);
        assert_eq!(delta_of(0), Err(Error::ZeroModulus));
    }

    #[test]
    fn delta_691() {
        assert_eq!(delta_of(691).unwrap(), 10);
    }

    #[test]
    fn decode() {
        assert_eq!(decode_residue(&[false, true]), 2);
        assert_eq!(decode_residue(&[false, false, false]), 0);
        assert_eq!(decode_residue(&[true]), 1);
        assert_eq!(decode_residue(&[true, false, true]), 5);
    }

    #[test]
    fn spec_validation() {
        assert_eq!(ConverterSpec::new(3, 0), Err(Error::ZeroModulus));
        assert_eq!(ConverterSpec::new(0, 3), Err(Error::ZeroWidth));
        assert_eq!(ConverterSpec::new(25, 3), Err(Error::WidthLimit { n: 25 }));
        assert!(ConverterSpec::new(24, 3).is_ok());
        assert_eq!(
            ConverterSpec::new(8, P_MAX + 1),
            Err(Error::ModulusTooLarge(P_MAX + 1))
        );
        let s = ConverterSpec::new(4, 1).unwrap();
        assert_eq!(s.delta(), 1);
        assert!(s.check_output(1).is_ok());
        assert!(s.check_output(0).is_err());
        assert!(s.check_output(2).is_err());
    }

    #[test]
    fn var_bit_matches_monomial_convention() {
        for j in 0..64u64 {
            for k in 0..6 {
                assert_eq!(var_bit(j, k), Monomial::new(1 << k).holds(j));
            }
        }
        // index 6 = (110) is the term x2 x3
        assert_eq!(Monomial::new(6).variables().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn packed_bits_basics() {
        let b = PackedBits::from_digits(&[0, 1, 0, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.num_vars(), 3);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![1, 4, 7]);
        assert_eq!(b.count_ones(), 3);
        assert!(PackedBits::zeros(6).is_err());

        let mut big = PackedBits::for_vars(8);
        big.set(0, true);
        big.set(63, true);
        big.set(64, true);
        big.set(255, true);
        assert_eq!(big.ones().collect::<Vec<_>>(), vec![0, 63, 64, 255]);
        big.flip(64);
        assert!(!big.get(64));
    }

    #[test]
    fn polynomial_set_semantics() {
        let p = AnfPolynomial::from_masks(3, 1, [7, 1, 3, 3, 4, 6, 3]).unwrap();
        assert_eq!(p.masks(), vec![1, 3, 4, 6, 7]);
        let q = AnfPolynomial::from_masks(3, 1, [5, 5]).unwrap();
        assert!(q.is_zero());
        assert!(AnfPolynomial::from_masks(3, 1, [8]).is_err());

        let mut r = p.clone();
        r.toggle(3).unwrap();
        assert_eq!(r.masks(), vec![1, 4, 6, 7]);
        r.toggle(0).unwrap();
        assert_eq!(r.masks(), vec![0, 1, 4, 6, 7]);
    }

    #[test]
    fn truth_numbers_roundtrip() {
        let w = TruthVector::from_digits(&[0, 0, 1, 0, 0, 1, 0, 0]).unwrap();
        let a = w.truth_numbers();
        assert_eq!(a.as_slice(), &[2, 5]);
        assert_eq!(a.to_truth_vector(3).unwrap(), w);
    }

    #[test]
    fn converter_shape_checked() {
        let spec = ConverterSpec::new(3, 3).unwrap();
        let only_one = vec![AnfPolynomial::zero(3, 1)];
        assert!(ModConverter::new(spec, only_one).is_err());
        let misnumbered = vec![AnfPolynomial::zero(3, 2), AnfPolynomial::zero(3, 1)];
        assert!(ModConverter::new(spec, misnumbered).is_err());
    }
}
