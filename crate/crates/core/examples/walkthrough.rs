//! X mod 3 over three input bits, step by step: truth numbers, truth
//! vectors, spectra, polynomials.
//!
//! cargo run --example walkthrough

use xmodp::polynomial::spectrum_to_polynomial;
use xmodp::transform::fast_transform;
use xmodp::truth::{truth_numbers, truth_vector};
use xmodp::{ConverterSpec, PackedBits};

fn digits(bits: &PackedBits) -> String {
    bits.to_bools().iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn main() -> xmodp::Result<()> {
    let spec = ConverterSpec::new(3, 3)?;
    println!("n = {}, p = {}, delta = {}", spec.n(), spec.p(), spec.delta());
    for i in 1..=spec.delta() as usize {
        let a = truth_numbers(&spec, i)?;
        let w = truth_vector(&spec, i)?;
        let r = fast_transform(&w);
        let poly = spectrum_to_polynomial(&r, i);
        println!();
        println!("A(S{i}) = {:?}", a.as_slice());
        println!("w(S{i}) = {}", digits(w.bits()));
        println!("r(S{i}) = {}", digits(r.bits()));
        println!("{}", poly.anf_line());
    }
    Ok(())
}
