//! Power-of-two moduli need no spectrum: the residue is the low input bits.
//!
//! cargo run --example passthrough

use xmodp::polynomial::anf_text;
use xmodp::{generate_verified, ConverterSpec, Method};

fn main() -> xmodp::Result<()> {
    for (n, p) in [(10, 8), (2, 8), (6, 1)] {
        let conv = generate_verified(&ConverterSpec::new(n, p)?, Method::Fast)?;
        println!("n={n} p={p} verified={}", conv.is_verified());
        print!("{}", anf_text(&conv));
    }
    Ok(())
}
