//! ANF polynomials from spectra, their evaluation, and circuit statistics.

use crate::error::{Error, Result};
use crate::model::{AnfPolynomial, CircuitStats, ModConverter, Monomial, PackedBits, RmSpectrum, TruthVector};

/// Polynomial whose terms are the set positions of the spectrum.
pub fn spectrum_to_polynomial(r: &RmSpectrum, output: usize) -> AnfPolynomial {
    let terms = r.bits().ones().map(|i| Monomial::new(i as u32)).collect();
    AnfPolynomial::from_sorted_terms(r.num_vars(), output, terms)
}

/// Spectrum with a one at every term mask.
pub fn polynomial_to_spectrum(poly: &AnfPolynomial) -> RmSpectrum {
    let mut bits = PackedBits::for_vars(poly.n());
    for t in poly.terms() {
        bits.set(t.mask() as usize, true);
    }
    RmSpectrum::new(bits)
}

/// XOR over the terms whose variables are all 1 on `x`.
pub fn eval_polynomial(poly: &AnfPolynomial, x: u64) -> Result<bool> {
    if x >> poly.n() != 0 {
        return Err(Error::InputOutOfRange { x, n: poly.n() });
    }
    Ok(poly.terms().iter().fold(false, |acc, t| acc ^ t.holds(x)))
}

impl AnfPolynomial {
    pub fn eval(&self, x: u64) -> Result<bool> {
        eval_polynomial(self, x)
    }

    /// Value table by evaluating every input term by term.
    pub fn truth_vector(&self) -> TruthVector {
        let mut bits = PackedBits::for_vars(self.n());
        for x in 0..bits.len() {
            if eval_polynomial(self, x as u64).expect("x < 2^n") {
                bits.set(x, true);
            }
        }
        TruthVector::new(bits)
    }

    pub fn literal_count(&self) -> u64 {
        self.terms().iter().map(|t| u64::from(t.degree())).sum()
    }

    pub fn degree(&self) -> u32 {
        self.terms().iter().map(|t| t.degree()).max().unwrap_or(0)
    }

    /// One line of the ANF text format, e.g. `S(1) = x(1) xor (x(1) and x(2))`.
    pub fn anf_line(&self) -> String {
        format!("S({}) = {}", self.output(), crate::emit::anf_expression(self.terms()))
    }
}

fn ceil_log2(v: u64) -> u32 {
    let v = v.max(1);
    u64::BITS - (v - 1).leading_zeros()
}

pub(crate) fn stats_of(polys: &[AnfPolynomial]) -> CircuitStats {
    let terms: Vec<u64> = polys.iter().map(|p| p.terms().len() as u64).collect();
    let literals: Vec<u64> = polys.iter().map(AnfPolynomial::literal_count).collect();
    let degrees: Vec<u32> = polys.iter().map(AnfPolynomial::degree).collect();
    let xor_depths: Vec<u32> = terms.iter().map(|&t| ceil_log2(t)).collect();
    let and_depths: Vec<u32> = degrees.iter().map(|&d| ceil_log2(u64::from(d))).collect();
    CircuitStats {
        total_terms: terms.iter().sum(),
        total_literals: literals.iter().sum(),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        max_xor_depth: xor_depths.iter().copied().max().unwrap_or(0),
        max_and_depth: and_depths.iter().copied().max().unwrap_or(0),
        terms,
        literals,
        degrees,
        xor_depths,
        and_depths,
    }
}

pub fn compute_stats(converter: &ModConverter) -> CircuitStats {
    stats_of(converter.polys())
}

/// The whole converter in ANF text, one output per line, `S(1)` first.
pub fn anf_text(converter: &ModConverter) -> String {
    let mut out = String::new();
    for p in converter.polys() {
        out.push_str(&p.anf_line());
        out.push('\n');
    }
    out
}
