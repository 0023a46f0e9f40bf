//! End-to-end generation: truth data, spectra, polynomials, optional verification.

use rayon::prelude::*;

use crate::error::Result;
use crate::model::{ConverterSpec, ModConverter};
use crate::polynomial::spectrum_to_polynomial;
use crate::transform::{self, Method};
use crate::truth;
use crate::verify::verify_converter;

/// Builds the converter for `spec`. Power-of-two moduli take the passthrough route.
pub fn generate(spec: &ConverterSpec, method: Method) -> Result<ModConverter> {
    if spec.is_power_of_two_modulus() {
        return truth::passthrough_converter(spec);
    }
    let polys = truth::truth_vectors(spec)
        .par_iter()
        .enumerate()
        .map(|(i, w)| transform::transform(w, method).map(|r| spectrum_to_polynomial(&r, i + 1)))
        .collect::<Result<Vec<_>>>()?;
    ModConverter::new(*spec, polys)
}

/// [`generate`] followed by exhaustive verification; the report is attached.
pub fn generate_verified(spec: &ConverterSpec, method: Method) -> Result<ModConverter> {
    let converter = generate(spec, method)?;
    let report = verify_converter(&converter);
    Ok(converter.with_verification(report))
}
