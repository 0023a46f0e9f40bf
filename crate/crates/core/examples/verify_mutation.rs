//! Exhaustive verification, and what happens when a single spectrum
//! coefficient is flipped.
//!
//! cargo run --example verify_mutation

use xmodp::{generate, verify_converter, ConverterSpec, Method};

fn main() -> xmodp::Result<()> {
    let spec = ConverterSpec::new(8, 11)?;
    let conv = generate(&spec, Method::Fast)?;
    let report = verify_converter(&conv);
    println!(
        "n=8 p=11: pass={} over {} inputs in {:?}",
        report.pass, report.inputs_checked, report.elapsed
    );

    for (output, mask) in [(1, 0b0000_0001), (2, 0b1010_0000), (4, 0b1111_1111), (3, 0)] {
        let bad = conv.with_flipped_term(output, mask)?;
        let r = verify_converter(&bad);
        let ce = r.counterexample.expect("a flipped coefficient always changes the function");
        println!(
            "flip S{output} mask {mask:#010b}: fails at x={} (expected {}, got {})",
            ce.input, ce.expected, ce.produced
        );
    }
    Ok(())
}
